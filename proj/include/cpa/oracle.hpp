#pragma once

/// Brute-force verifiers, deliberately independent of the algorithms they
/// check: grid sampling for piece counts, grid sign scans for arrangements,
/// and exhaustive search for monotone paths.  Grid points are exact
/// rationals so every evaluation is decision-grade.

#include "cpa/arrangement.hpp"
#include "cpa/constructions.hpp"
#include "cpa/expr.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace cpa::oracle {

namespace detail {

inline std::vector<Rational> axis_grid(const Rational& lo, const Rational& hi, int resolution) {
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(resolution));
    Rational step = (hi - lo) / Rational(resolution - 1);
    for (int k = 0; k < resolution; ++k)
        g.push_back(lo + step * Rational(k));
    return g;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
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
            parent[static_cast<std::size_t>(a)] = b;
    }
};

} // namespace detail

struct SampleResult {
    long long groups = 0;           // lower bound on maximal pieces in the box
    long long labeled = 0;          // grid points matching exactly one component
    long long total = 0;            // grid points scanned
    std::optional<Rational> min_breakpoint_gap; // 1-D only: smallest bisector gap
};

/// Evaluate e on a rational grid over the box, match each point to the
/// unique agreeing leaf component, and count connected equal-component
/// groups under axis adjacency.  Groups can merge pieces the grid cannot
/// separate but (above the feature size) never split one, so the count is a
/// lower bound.
inline SampleResult sample_piece_lower_bound(const CpaExpr& e, const Box& box, int resolution) {
    if (resolution < 2)
        throw std::invalid_argument("sample_piece_lower_bound: resolution must be >= 2");
    const int d = e.dim();
    if (box.dim() != d)
        throw std::invalid_argument("sample_piece_lower_bound: box dimension mismatch");

    std::vector<std::vector<Rational>> grid;
    for (int i = 0; i < d; ++i)
        grid.push_back(detail::axis_grid(box.lo[i], box.hi[i], resolution));

    long long total = 1;
    for (int i = 0; i < d; ++i)
        total *= resolution;

    std::vector<AffineMap> comps = leaf_components(e);
    std::vector<int> label(static_cast<std::size_t>(total), -1);

    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<Rational> coord(static_cast<std::size_t>(d));
    for (long long flat = 0; flat < total; ++flat) {
        long long rest = flat;
        for (int i = d - 1; i >= 0; --i) {
            idx[static_cast<std::size_t>(i)] = static_cast<int>(rest % resolution);
            rest /= resolution;
        }
        for (int i = 0; i < d; ++i)
            coord[static_cast<std::size_t>(i)] =
                grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        Vector p{std::vector<Rational>(coord)};
        Rational val = e.eval(p);
        int found = -1;
        bool unique = true;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (comps[c](p) == val) {
                if (found >= 0) {
                    unique = false;
                    break;
                }
                found = static_cast<int>(c);
            }
        }
        if (unique && found >= 0)
            label[static_cast<std::size_t>(flat)] = found;
    }

    detail::UnionFind uf(static_cast<std::size_t>(total));
    long long stride = 1;
    for (int axis = d - 1; axis >= 0; --axis) {
        for (long long flat = 0; flat < total; ++flat) {
            long long pos = (flat / stride) % resolution;
            if (pos + 1 >= resolution)
                continue;
            long long nb = flat + stride;
            if (label[static_cast<std::size_t>(flat)] >= 0 &&
                label[static_cast<std::size_t>(flat)] == label[static_cast<std::size_t>(nb)])
                uf.unite(static_cast<int>(flat), static_cast<int>(nb));
        }
        stride *= resolution;
    }

    SampleResult res;
    res.total = total;
    std::set<int> roots;
    for (long long flat = 0; flat < total; ++flat) {
        if (label[static_cast<std::size_t>(flat)] < 0)
            continue;
        ++res.labeled;
        roots.insert(uf.find(static_cast<int>(flat)));
    }
    res.groups = static_cast<long long>(roots.size());

    if (d == 1) {
        std::vector<Rational> bps;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                Rational da = comps[i].gradient[0] - comps[j].gradient[0];
                if (!da.is_zero())
                    bps.push_back((comps[j].offset - comps[i].offset) / da);
            }
        std::sort(bps.begin(), bps.end());
        bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
        for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
            Rational gap = bps[i + 1] - bps[i];
            if (!res.min_breakpoint_gap || gap < *res.min_breakpoint_gap)
                res.min_breakpoint_gap = gap;
        }
    }
    return res;
}

/// All strict sign vectors observed on a rational grid; a subset of the
/// enumerated cells' sign vectors by construction.  Signs refer to
/// dedup_planes(planes, d).
inline std::set<std::string> sign_scan(const std::vector<Hyperplane>& planes_in, const Box& box,
                                       int resolution) {
    if (resolution < 2)
        throw std::invalid_argument("sign_scan: resolution must be >= 2");
    const int d = box.dim();
    std::vector<Hyperplane> planes = dedup_planes(planes_in, d);
    std::set<std::string> out;
    if (planes.empty()) {
        out.insert("");
        return out;
    }
    std::vector<std::vector<Rational>> grid;
    for (int i = 0; i < d; ++i)
        grid.push_back(detail::axis_grid(box.lo[i], box.hi[i], resolution));
    long long total = 1;
    for (int i = 0; i < d; ++i)
        total *= resolution;
    std::vector<Rational> coord(static_cast<std::size_t>(d));
    for (long long flat = 0; flat < total; ++flat) {
        long long rest = flat;
        for (int i = d - 1; i >= 0; --i) {
            coord[static_cast<std::size_t>(i)] =
                grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(rest % resolution)];
            rest /= resolution;
        }
        Vector p{std::vector<Rational>(coord)};
        std::string signs;
        signs.reserve(planes.size());
        bool on_plane = false;
        for (const auto& h : planes) {
            int s = h.eval(p).sign();
            if (s == 0) {
                on_plane = true;
                break;
            }
            signs.push_back(s > 0 ? '+' : '-');
        }
        if (!on_plane)
            out.insert(std::move(signs));
    }
    return out;
}

/// Exhaustive maximum monotone-path length by enumerating every strictly
/// x-increasing vertex sequence connected along family lines.  Returns 0
/// when no valid path exists.
inline int exhaustive_monotone_paths(const LineFamily& L, int max_n = 5) {
    if (L.size() > max_n)
        throw std::invalid_argument("exhaustive_monotone_paths: instance too large");

    // independent vertex construction (simple nested loops + dedup)
    std::map<std::pair<Rational, Rational>, std::vector<int>> pts;
    const auto& ls = L.lines;
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            if (ls[i].a == ls[j].a)
                continue;
            Rational x = (ls[j].b - ls[i].b) / (ls[i].a - ls[j].a);
            Rational y = ls[i].a * x + ls[i].b;
            auto& at = pts[{x, y}];
            for (int l : {static_cast<int>(i), static_cast<int>(j)})
                if (std::find(at.begin(), at.end(), l) == at.end())
                    at.push_back(l);
        }
    std::vector<std::vector<int>> lines_at;
    std::vector<std::vector<char>> on_line(ls.size());
    for (auto& [xy, lset] : pts) {
        lines_at.push_back(lset);
    }
    const int V = static_cast<int>(lines_at.size());
    for (auto& row : on_line)
        row.assign(static_cast<std::size_t>(V), 0);
    {
        int v = 0;
        for (auto& [xy, lset] : pts) {
            for (int l : lset)
                on_line[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)] = 1;
            ++v;
        }
    }

    int best = 0;
    auto dfs = [&](auto&& self, int v, int cur_line, int len) -> void {
        if (len > best)
            best = len;
        for (int w = v + 1; w < V; ++w) {
            int shared = -1;
            for (int l : lines_at[static_cast<std::size_t>(v)])
                if (on_line[static_cast<std::size_t>(l)][static_cast<std::size_t>(w)]) {
                    shared = l;
                    break;
                }
            if (shared < 0)
                continue;
            self(self, w, shared, len + (shared == cur_line ? 0 : 1));
        }
    };
    for (int v = 0; v < V; ++v)
        dfs(dfs, v, -1, 0);
    return best;
}

} // namespace cpa::oracle
