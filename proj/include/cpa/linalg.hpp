#pragma once

/// Fixed-dimension rational vectors and affine maps x -> grad.x + offset.
/// Dimension mismatches are construction/usage errors, never silent.

#include "cpa/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cpa {

class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {
        if (c_.empty())
            throw std::invalid_argument("Vector: dimension must be >= 1");
    }
    Vector(std::initializer_list<Rational> coords) : Vector(std::vector<Rational>(coords)) {}

    static Vector zero(int dim) {
        if (dim < 1)
            throw std::invalid_argument("Vector: dimension must be >= 1");
        return Vector(std::vector<Rational>(static_cast<std::size_t>(dim)));
    }

    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
    Rational& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool operator==(const Vector& o) const { return c_ == o.c_; }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero())
                return false;
        return true;
    }

    Rational dot(const Vector& o) const {
        check_same_dim(o);
        Rational s;
        for (int i = 0; i < dim(); ++i)
            s += c_[static_cast<std::size_t>(i)] * o[i];
        return s;
    }

    Vector operator+(const Vector& o) const {
        check_same_dim(o);
        Vector r = *this;
        for (int i = 0; i < dim(); ++i)
            r[i] += o[i];
        return r;
    }
    Vector operator-(const Vector& o) const {
        check_same_dim(o);
        Vector r = *this;
        for (int i = 0; i < dim(); ++i)
            r[i] -= o[i];
        return r;
    }
    Vector scaled(const Rational& k) const {
        Vector r = *this;
        for (int i = 0; i < dim(); ++i)
            r[i] *= k;
        return r;
    }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ", ";
            s += c_[static_cast<std::size_t>(i)].to_string();
        }
        return s + ")";
    }

private:
    void check_same_dim(const Vector& o) const {
        if (dim() != o.dim())
            throw std::invalid_argument("Vector: dimension mismatch");
    }
    std::vector<Rational> c_;
};

/// x -> gradient.x + offset.  Two maps are equal iff gradient and offset
/// are componentwise equal.
struct AffineMap {
    Vector gradient;
    Rational offset;

    AffineMap(Vector grad, Rational off) : gradient(std::move(grad)), offset(std::move(off)) {}

    int dim() const { return gradient.dim(); }

    Rational operator()(const Vector& x) const {
        if (x.dim() != dim())
            throw std::invalid_argument("AffineMap: dimension mismatch");
        return gradient.dot(x) + offset;
    }

    bool operator==(const AffineMap& o) const {
        return gradient == o.gradient && offset == o.offset;
    }
    bool operator!=(const AffineMap& o) const { return !(*this == o); }

    AffineMap operator-(const AffineMap& o) const {
        if (o.dim() != dim())
            throw std::invalid_argument("AffineMap: dimension mismatch");
        return AffineMap(gradient - o.gradient, offset - o.offset);
    }

    std::string to_string() const {
        return gradient.to_string() + ".x + " + offset.to_string();
    }
};

/// Convenience for 1-D maps t -> a*t + b.
inline AffineMap affine_1d(const Rational& a, const Rational& b) {
    return AffineMap(Vector{a}, b);
}

/// Axis-aligned closed box lo <= x <= hi.
struct Box {
    Vector lo, hi;

    Box(Vector l, Vector h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo.dim() != hi.dim())
            throw std::invalid_argument("Box: dimension mismatch");
        for (int i = 0; i < lo.dim(); ++i)
            if (!(lo[i] < hi[i]))
                throw std::invalid_argument("Box: requires lo < hi componentwise");
    }

    int dim() const { return lo.dim(); }
};

} // namespace cpa
