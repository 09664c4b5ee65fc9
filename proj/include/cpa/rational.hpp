#pragma once

/// Exact rational scalar type used for every geometric decision in this
/// library.  Backed by an arbitrary-precision integer pair that is kept in
/// lowest terms with a positive denominator, so equality and ordering are
/// exact and sign tests never suffer rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cpa {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }
    Rational(int num, int den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

    Rational operator-() const { return Rational(-v_); }
    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

    /// Serialized as "p" when integral, "p/q" otherwise.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    /// Accepts "p" and "p/q" with optional leading '-'.
    static Rational parse(std::string_view text) {
        auto bad = [&] {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        };
        if (text.empty())
            bad();
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
        auto parse_int = [&](std::string_view t) -> BigInt {
            if (t.empty())
                bad();
            std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size())
                bad();
            for (std::size_t k = i; k < t.size(); ++k)
                if (t[k] < '0' || t[k] > '9')
                    bad();
            return BigInt(std::string(t));
        };
        BigInt n = parse_int(num);
        BigInt d = parse_int(den);
        if (d == 0)
            bad();
        return Rational(n, d);
    }

    /// Lossy conversion, only for diagnostics and the quarantined
    /// floating-point fit in bounds.hpp.
    double to_double() const { return v_.convert_to<double>(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace cpa
