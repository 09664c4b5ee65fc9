#pragma once

/// From a min/max expression to its exact piece structure: build the
/// bisector arrangement of the active affine components, label every open
/// cell with the unique component the function agrees with there, and merge
/// facet-adjacent cells carrying the same component into maximal pieces.
///
/// Pieces are open; two regions with the same component that touch only
/// along a set where a *different* component wins stay separate.

#include "cpa/arrangement.hpp"
#include "cpa/expr.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace cpa {

struct PieceDecomposition {
    int dim = 0;
    std::vector<AffineMap> components;      // active components only
    std::vector<Hyperplane> planes;         // the arrangement actually used
    std::vector<Cell> cells;
    std::vector<int> cell_component;        // per cell, index into components
    std::vector<AdjacentPair> adjacency;
    std::vector<std::vector<int>> pieces;   // maximal pieces as cell-index groups

    int n_active() const { return static_cast<int>(components.size()); }
    long long cell_count() const { return static_cast<long long>(cells.size()); }
    long long maximal_piece_count() const { return static_cast<long long>(pieces.size()); }
};

/// Deduplicated nonempty bisectors {f_i = f_j}; parallel distinct components
/// contribute nothing.
inline std::vector<Hyperplane> bisector_arrangement(const std::vector<AffineMap>& comps) {
    std::vector<Hyperplane> planes;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            AffineMap diff = comps[i] - comps[j];
            if (diff.gradient.is_zero())
                continue; // parallel (or equal) components: no wall
            planes.emplace_back(diff.gradient, Rational(0) - diff.offset);
        }
    }
    if (planes.empty())
        return {};
    return dedup_planes(planes, comps.front().dim());
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

/// Index of the unique component agreeing with e at x; anything but exactly
/// one match means the witness sits on a bisector, which exact arithmetic
/// rules out.
inline int match_component(const CpaExpr& e, const std::vector<AffineMap>& comps,
                           const Vector& x) {
    Rational val = e.eval(x);
    int found = -1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i](x) == val) {
            if (found >= 0)
                throw std::logic_error("decompose: witness lies on a bisector");
            found = static_cast<int>(i);
        }
    }
    if (found < 0)
        throw std::logic_error("decompose: no component matches at witness");
    return found;
}

inline std::vector<std::vector<int>> merge_pieces(const std::vector<int>& labels,
                                                  const std::vector<AdjacentPair>& adjacency) {
    UnionFind uf(labels.size());
    for (const auto& p : adjacency)
        if (labels[static_cast<std::size_t>(p.a)] == labels[static_cast<std::size_t>(p.b)])
            uf.unite(p.a, p.b);
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(labels.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        if (group_of[static_cast<std::size_t>(r)] < 0) {
            group_of[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(r)])].push_back(
            static_cast<int>(i));
    }
    return groups;
}

inline PieceDecomposition decompose_with(const CpaExpr& e,
                                         const std::vector<AffineMap>& comps0) {
    const int d = e.dim();
    auto label_all = [&](const BuiltArrangement& arr, const std::vector<AffineMap>& comps) {
        std::vector<int> labels;
        labels.reserve(arr.cells.size());
        for (const auto& cell : arr.cells)
            labels.push_back(match_component(e, comps, cell.witness));
        return labels;
    };

    BuiltArrangement arr = build_arrangement(bisector_arrangement(comps0), d);
    std::vector<int> labels = label_all(arr, comps0);

    // keep only components active on some cell; one rebuild suffices
    std::vector<char> seen(comps0.size(), 0);
    for (int l : labels)
        seen[static_cast<std::size_t>(l)] = 1;
    std::vector<AffineMap> active;
    for (std::size_t i = 0; i < comps0.size(); ++i)
        if (seen[i])
            active.push_back(comps0[i]);
    if (active.size() != comps0.size()) {
        arr = build_arrangement(bisector_arrangement(active), d);
        labels = label_all(arr, active);
    }

    PieceDecomposition dec;
    dec.dim = d;
    dec.components = std::move(active);
    dec.planes = std::move(arr.planes);
    dec.cells = std::move(arr.cells);
    dec.cell_component = std::move(labels);
    dec.adjacency = std::move(arr.adjacency);
    dec.pieces = merge_pieces(dec.cell_component, dec.adjacency);
    return dec;
}

} // namespace detail

/// Full decomposition of e: active components, bisector-arrangement cells,
/// and maximal pieces.
inline PieceDecomposition decompose(const CpaExpr& e) {
    return detail::decompose_with(e, leaf_components(e));
}

/// Dedicated 1-D path with the same semantics as decompose: sort bisector
/// breakpoints, label the open intervals, merge equal-labelled neighbours.
inline PieceDecomposition pieces_1d(const CpaExpr& e) {
    if (e.dim() != 1)
        throw std::invalid_argument("pieces_1d: expression must be one-dimensional");

    auto breakpoints = [](const std::vector<AffineMap>& comps) {
        std::vector<Rational> bps;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                Rational da = comps[i].gradient[0] - comps[j].gradient[0];
                if (da.is_zero())
                    continue;
                bps.push_back((comps[j].offset - comps[i].offset) / da);
            }
        }
        std::sort(bps.begin(), bps.end());
        bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
        return bps;
    };
    auto witnesses = [](const std::vector<Rational>& bps) {
        std::vector<Rational> ws;
        if (bps.empty()) {
            ws.emplace_back(0);
            return ws;
        }
        ws.push_back(bps.front() - 1);
        for (std::size_t i = 0; i + 1 < bps.size(); ++i)
            ws.push_back((bps[i] + bps[i + 1]) / Rational(2));
        ws.push_back(bps.back() + 1);
        return ws;
    };

    std::vector<AffineMap> comps = leaf_components(e);
    std::vector<Rational> bps = breakpoints(comps);
    std::vector<Rational> ws = witnesses(bps);

    std::vector<char> seen(comps.size(), 0);
    for (const auto& w : ws)
        seen[static_cast<std::size_t>(detail::match_component(e, comps, Vector{w}))] = 1;
    std::vector<AffineMap> active;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (seen[i])
            active.push_back(comps[i]);

    if (active.size() != comps.size()) {
        bps = breakpoints(active);
        ws = witnesses(bps);
    }

    PieceDecomposition dec;
    dec.dim = 1;
    dec.components = std::move(active);
    for (const auto& b : bps)
        dec.planes.push_back(canonical(Hyperplane(Vector{Rational(1)}, b)));
    for (const auto& w : ws) {
        Cell c;
        c.witness = Vector{w};
        c.signs.reserve(dec.planes.size());
        for (const auto& h : dec.planes)
            c.signs.push_back(h.eval(c.witness) > Rational(0) ? '+' : '-');
        dec.cells.push_back(std::move(c));
        dec.cell_component.push_back(
            detail::match_component(e, dec.components, dec.cells.back().witness));
    }
    for (std::size_t i = 0; i + 1 < dec.cells.size(); ++i)
        dec.adjacency.push_back(
            {static_cast<int>(i), static_cast<int>(i + 1), static_cast<int>(i)});
    dec.pieces = detail::merge_pieces(dec.cell_component, dec.adjacency);
    return dec;
}

} // namespace cpa
