#pragma once

/// Min/max expression trees over affine leaves: the executable form of a
/// continuous piecewise affine function.  Trees are immutable; subtrees are
/// shared freely.  Min/Max nodes always have at least two children; unary
/// wrappers collapse to their child at construction.

#include "cpa/linalg.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <vector>

namespace cpa {

enum class NodeKind { Leaf, Min, Max };

class CpaExpr {
public:
    static CpaExpr leaf(AffineMap f) {
        CpaExpr e;
        e.dim_ = f.dim();
        e.node_ = std::make_shared<Node>(Node{NodeKind::Leaf, std::move(f), {}});
        return e;
    }

    static CpaExpr min_of(std::vector<CpaExpr> children) { return combine(NodeKind::Min, std::move(children)); }
    static CpaExpr max_of(std::vector<CpaExpr> children) { return combine(NodeKind::Max, std::move(children)); }

    NodeKind kind() const { return node_->kind; }
    int dim() const { return dim_; }

    const AffineMap& leaf_map() const {
        if (kind() != NodeKind::Leaf)
            throw std::logic_error("CpaExpr: not a leaf");
        return node_->map;
    }
    const std::vector<CpaExpr>& children() const { return node_->children; }

    Rational eval(const Vector& x) const {
        if (x.dim() != dim_)
            throw std::invalid_argument("CpaExpr: dimension mismatch");
        return eval_unchecked(x);
    }

    /// Number of nodes, for diagnostics.
    std::size_t size() const {
        if (kind() == NodeKind::Leaf)
            return 1;
        std::size_t n = 1;
        for (const auto& c : children())
            n += c.size();
        return n;
    }

private:
    struct Node {
        NodeKind kind;
        AffineMap map;                 // valid for Leaf
        std::vector<CpaExpr> children; // valid for Min/Max
    };

    CpaExpr() = default;

    static CpaExpr combine(NodeKind k, std::vector<CpaExpr> children) {
        if (children.empty())
            throw std::invalid_argument("CpaExpr: min/max needs at least one child");
        if (children.size() == 1)
            return children.front();
        int d = children.front().dim();
        for (const auto& c : children)
            if (c.dim() != d)
                throw std::invalid_argument("CpaExpr: children dimension mismatch");
        CpaExpr e;
        e.dim_ = d;
        e.node_ = std::make_shared<Node>(
            Node{k, AffineMap(Vector::zero(d), Rational(0)), std::move(children)});
        return e;
    }

    Rational eval_unchecked(const Vector& x) const {
        if (kind() == NodeKind::Leaf)
            return node_->map(x);
        Rational best = node_->children.front().eval_unchecked(x);
        for (std::size_t i = 1; i < node_->children.size(); ++i) {
            Rational v = node_->children[i].eval_unchecked(x);
            if (kind() == NodeKind::Min ? v < best : v > best)
                best = v;
        }
        return best;
    }

    std::shared_ptr<const Node> node_;
    int dim_ = 0;
};

/// Deduplicated leaf maps in first-occurrence order: a syntactic superset of
/// the components actually active somewhere.
inline std::vector<AffineMap> leaf_components(const CpaExpr& e) {
    std::vector<AffineMap> out;
    auto visit = [&](auto&& self, const CpaExpr& n) -> void {
        if (n.kind() == NodeKind::Leaf) {
            if (std::find(out.begin(), out.end(), n.leaf_map()) == out.end())
                out.push_back(n.leaf_map());
            return;
        }
        for (const auto& c : n.children())
            self(self, c);
    };
    visit(visit, e);
    return out;
}

/// min(z_max, max(z_min, e)); adds at most two constant leaves.
inline CpaExpr clamp(const CpaExpr& e, const Rational& z_min, const Rational& z_max) {
    if (!(z_min < z_max))
        throw std::invalid_argument("clamp: requires z_min < z_max");
    int d = e.dim();
    CpaExpr lo = CpaExpr::leaf(AffineMap(Vector::zero(d), z_min));
    CpaExpr hi = CpaExpr::leaf(AffineMap(Vector::zero(d), z_max));
    return CpaExpr::min_of({hi, CpaExpr::max_of({lo, e})});
}

/// Substitute coordinate `axis` by `value`, producing an expression one
/// dimension lower.
inline CpaExpr restrict_to_slice(const CpaExpr& e, int axis, const Rational& value) {
    int d = e.dim();
    if (axis < 0 || axis >= d)
        throw std::invalid_argument("restrict_to_slice: axis out of range");
    if (d < 2)
        throw std::invalid_argument("restrict_to_slice: resulting dimension would be zero");
    auto slice_leaf = [&](const AffineMap& f) {
        std::vector<Rational> g;
        g.reserve(static_cast<std::size_t>(d - 1));
        for (int i = 0; i < d; ++i)
            if (i != axis)
                g.push_back(f.gradient[i]);
        return AffineMap(Vector(std::move(g)), f.offset + f.gradient[axis] * value);
    };
    auto rec = [&](auto&& self, const CpaExpr& n) -> CpaExpr {
        if (n.kind() == NodeKind::Leaf)
            return CpaExpr::leaf(slice_leaf(n.leaf_map()));
        std::vector<CpaExpr> kids;
        kids.reserve(n.children().size());
        for (const auto& c : n.children())
            kids.push_back(self(self, c));
        return n.kind() == NodeKind::Min ? CpaExpr::min_of(std::move(kids))
                                         : CpaExpr::max_of(std::move(kids));
    };
    return rec(rec, e);
}

} // namespace cpa
