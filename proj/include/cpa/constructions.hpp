#pragma once

/// Generators for the extremal families: the alternating sawtooth spline,
/// the piece-multiplying lift h(x,t) = min(f(x), s(t)), its iteration into
/// higher dimensions, x-monotone paths in line arrangements (exact longest-
/// path dynamic program), and the translation of a path into a 1-D CPA
/// function whose maximal pieces are the path's segments.

#include "cpa/expr.hpp"
#include "cpa/pieces.hpp"
#include "cpa/rng.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cpa {

// --------------------------------------------------------------- sawtooth --

/// Linear spline through (i, z_i) for i = 0..2m, z_i alternating between
/// z_min (even i) and z_max (odd i), extended linearly outside [0, 2m].
/// Exactly 2m affine components and 2m maximal pieces.
inline CpaExpr sawtooth(int m, const Rational& z_min, const Rational& z_max) {
    if (m < 1)
        throw std::invalid_argument("sawtooth: m must be >= 1");
    if (!(z_min < z_max))
        throw std::invalid_argument("sawtooth: requires z_min < z_max");
    Rational delta = z_max - z_min;
    std::vector<CpaExpr> teeth;
    teeth.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        // rising segment through (2i, z_min), falling through (2i+1, z_max)
        AffineMap up(Vector{delta}, z_min - delta * Rational(2 * i));
        AffineMap down(Vector{Rational(0) - delta}, z_max + delta * Rational(2 * i + 1));
        teeth.push_back(CpaExpr::min_of({CpaExpr::leaf(up), CpaExpr::leaf(down)}));
    }
    return CpaExpr::max_of(std::move(teeth));
}

// ------------------------------------------------------------------- lift --

namespace detail {

/// All points where d of the planes meet in a single point.
inline std::vector<Vector> arrangement_vertices(const std::vector<Hyperplane>& planes, int d) {
    std::vector<Vector> verts;
    if (static_cast<int>(planes.size()) < d)
        return verts;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d));
    auto solve = [&]() -> std::optional<Vector> {
        // Gaussian elimination on the d x d system
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(d),
                                             std::vector<Rational>(static_cast<std::size_t>(d) + 1));
        for (int r = 0; r < d; ++r) {
            const Hyperplane& h = planes[idx[static_cast<std::size_t>(r)]];
            for (int c = 0; c < d; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = h.normal[c];
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] = h.offset;
        }
        for (int col = 0; col < d; ++col) {
            int piv = -1;
            for (int r = col; r < d; ++r)
                if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return std::nullopt;
            std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
            for (int r = 0; r < d; ++r) {
                if (r == col)
                    continue;
                Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                             a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                if (f.is_zero())
                    continue;
                for (int c = col; c <= d; ++c)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                        f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            }
        }
        std::vector<Rational> x(static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r)
            x[static_cast<std::size_t>(r)] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] /
                                             a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        return Vector(std::move(x));
    };
    auto rec = [&](auto&& self, std::size_t from, int depth) -> void {
        if (depth == d) {
            if (auto v = solve())
                verts.push_back(std::move(*v));
            return;
        }
        for (std::size_t i = from; i < planes.size(); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return verts;
}

/// Bounding box of all arrangement vertices, each plane's closest point to
/// the origin, and the origin itself, inflated by 1.  Every cell of the
/// arrangement has interior points in this box.
inline Box reference_box(const std::vector<Hyperplane>& planes, int d) {
    std::vector<Rational> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    auto grow = [&](const Vector& p) {
        for (int i = 0; i < d; ++i) {
            if (p[i] < lo[static_cast<std::size_t>(i)])
                lo[static_cast<std::size_t>(i)] = p[i];
            if (p[i] > hi[static_cast<std::size_t>(i)])
                hi[static_cast<std::size_t>(i)] = p[i];
        }
    };
    for (const auto& v : arrangement_vertices(planes, d))
        grow(v);
    for (const auto& h : planes) {
        Rational nn;
        for (int i = 0; i < d; ++i)
            nn += h.normal[i] * h.normal[i];
        grow(h.normal.scaled(h.offset / nn));
    }
    for (int i = 0; i < d; ++i) {
        lo[static_cast<std::size_t>(i)] -= 1;
        hi[static_cast<std::size_t>(i)] += 1;
    }
    return Box{Vector(std::move(lo)), Vector(std::move(hi))};
}

/// Exact min and max of e over the closed box, via one small LP per cell of
/// the decomposition (the extremum of an affine map over cell-and-box).
inline std::pair<Rational, Rational> range_on_box(const CpaExpr& e, const PieceDecomposition& dec,
                                                  const Box& box) {
    const int d = e.dim();
    if (d == 1) {
        std::vector<Rational> probes{box.lo[0], box.hi[0]};
        for (const auto& h : dec.planes)
            probes.push_back(h.offset / h.normal[0]);
        Rational mn = e.eval(Vector{probes[0]}), mx = mn;
        for (const auto& p : probes) {
            if (p < box.lo[0] || p > box.hi[0])
                continue;
            Rational v = e.eval(Vector{p});
            if (v < mn) mn = v;
            if (v > mx) mx = v;
        }
        return {mn, mx};
    }
    // variables x' = x - lo >= 0
    std::optional<Rational> mn, mx;
    for (std::size_t ci = 0; ci < dec.cells.size(); ++ci) {
        const Cell& cell = dec.cells[ci];
        const AffineMap& comp = dec.components[static_cast<std::size_t>(dec.cell_component[ci])];
        std::vector<lp::Constraint> rows;
        for (int i = 0; i < d; ++i) {
            lp::Constraint r;
            r.a.assign(static_cast<std::size_t>(d), Rational(0));
            r.a[static_cast<std::size_t>(i)] = Rational(1);
            r.sense = lp::Sense::LE;
            r.b = box.hi[i] - box.lo[i];
            rows.push_back(std::move(r));
        }
        for (std::size_t k = 0; k < dec.planes.size(); ++k) {
            const Hyperplane& h = dec.planes[k];
            lp::Constraint r;
            r.a.assign(static_cast<std::size_t>(d), Rational(0));
            for (int i = 0; i < d; ++i)
                r.a[static_cast<std::size_t>(i)] = h.normal[i];
            r.sense = cell.signs[k] == '+' ? lp::Sense::GE : lp::Sense::LE;
            r.b = h.offset - h.normal.dot(box.lo);
            rows.push_back(std::move(r));
        }
        std::vector<Rational> grad(static_cast<std::size_t>(d)), neg(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            grad[static_cast<std::size_t>(i)] = comp.gradient[i];
            neg[static_cast<std::size_t>(i)] = Rational(0) - comp.gradient[i];
        }
        Rational shift = comp(box.lo);
        auto hi_res = lp::maximize(grad, rows);
        auto lo_res = lp::maximize(neg, rows);
        if (hi_res.status != lp::Status::Optimal || lo_res.status != lp::Status::Optimal)
            continue; // cell does not meet the box
        Rational cmax = hi_res.value + shift;
        Rational cmin = shift - lo_res.value;
        if (!mx || cmax > *mx) mx = cmax;
        if (!mn || cmin < *mn) mn = cmin;
    }
    if (!mn)
        throw std::logic_error("range_on_box: no cell meets the box");
    return {*mn, *mx};
}

/// Re-embed a map of dimension d as a map of dimension d+1 ignoring the new
/// trailing coordinate.
inline CpaExpr append_axis(const CpaExpr& e) {
    auto rec = [&](auto&& self, const CpaExpr& n) -> CpaExpr {
        if (n.kind() == NodeKind::Leaf) {
            const AffineMap& f = n.leaf_map();
            std::vector<Rational> g;
            g.reserve(static_cast<std::size_t>(f.dim()) + 1);
            for (int i = 0; i < f.dim(); ++i)
                g.push_back(f.gradient[i]);
            g.emplace_back(0);
            return CpaExpr::leaf(AffineMap(Vector(std::move(g)), f.offset));
        }
        std::vector<CpaExpr> kids;
        for (const auto& c : n.children())
            kids.push_back(self(self, c));
        return n.kind() == NodeKind::Min ? CpaExpr::min_of(std::move(kids))
                                         : CpaExpr::max_of(std::move(kids));
    };
    return rec(rec, e);
}

/// Place a 1-D map onto coordinate `axis` of a dim-d space.
inline CpaExpr on_axis(const CpaExpr& e, int axis, int d) {
    auto rec = [&](auto&& self, const CpaExpr& n) -> CpaExpr {
        if (n.kind() == NodeKind::Leaf) {
            const AffineMap& f = n.leaf_map();
            Vector g = Vector::zero(d);
            g[axis] = f.gradient[0];
            return CpaExpr::leaf(AffineMap(std::move(g), f.offset));
        }
        std::vector<CpaExpr> kids;
        for (const auto& c : n.children())
            kids.push_back(self(self, c));
        return n.kind() == NodeKind::Min ? CpaExpr::min_of(std::move(kids))
                                         : CpaExpr::max_of(std::move(kids));
    };
    return rec(rec, e);
}

} // namespace detail

/// h(x, t) = min(clamped f(x), s(t)) where s is the m-sawtooth between
/// z_min = (min of f over the reference box) - 1 and z_max = (max) + 1, and
/// f is clamped to [z_min + 1, z_max - 1] so that
/// z_min < inf h_f <= sup h_f < z_max holds globally.  The measured piece
/// count of the clamped input times m is a certified lower bound on the
/// maximal pieces of the result.
struct Lift {
    CpaExpr expr;
    CpaExpr clamped;
    Rational z_min, z_max;
    long long pieces_clamped = 0;
    BigInt certified;
    int component_budget = 0;
    int m = 0;
};

inline Lift lift(const CpaExpr& f, int m) {
    if (m < 1)
        throw std::invalid_argument("lift: m must be >= 1");
    const int d = f.dim();
    PieceDecomposition dec = decompose(f);
    Box box = detail::reference_box(dec.planes, d);
    auto [lo, hi] = detail::range_on_box(f, dec, box);

    Rational z_min = lo - 1, z_max = hi + 1;
    CpaExpr clamped = (lo < hi) ? clamp(f, lo, hi) : f;
    PieceDecomposition dec_clamped = (lo < hi) ? decompose(clamped) : std::move(dec);

    CpaExpr s = sawtooth(m, z_min, z_max);
    CpaExpr h = CpaExpr::min_of(
        {detail::append_axis(clamped), detail::on_axis(s, d, d + 1)});

    long long pieces_clamped = dec_clamped.maximal_piece_count();
    return Lift{std::move(h),
                std::move(clamped),
                std::move(z_min),
                std::move(z_max),
                pieces_clamped,
                BigInt(m) * BigInt(pieces_clamped),
                static_cast<int>(leaf_components(f).size()) + 2 + 2 * m,
                m};
}

/// Apply the lift target_dim - 1 times with the same m.  The certified lower
/// bound is the first clamped piece count times m^(target_dim - 1).
struct IteratedLift {
    CpaExpr expr;
    BigInt certified;
    int component_budget = 0;
    long long base_pieces = 0;
    int m = 0;
    int target_dim = 1;
};

inline IteratedLift iterate_lift(const CpaExpr& f_1d, int target_dim, int m) {
    if (f_1d.dim() != 1)
        throw std::invalid_argument("iterate_lift: input must be one-dimensional");
    if (target_dim < 1)
        throw std::invalid_argument("iterate_lift: target dimension must be >= 1");
    if (target_dim == 1) {
        long long p = decompose(f_1d).maximal_piece_count();
        return IteratedLift{f_1d, BigInt(p), static_cast<int>(leaf_components(f_1d).size()), p, m,
                            1};
    }
    CpaExpr cur = f_1d;
    long long first_clamped = 0;
    int budget = static_cast<int>(leaf_components(f_1d).size());
    for (int dim = 1; dim < target_dim; ++dim) {
        Lift step = lift(cur, m);
        if (dim == 1)
            first_clamped = step.pieces_clamped;
        budget += 2 + 2 * m;
        cur = step.expr;
    }
    BigInt certified(first_clamped);
    for (int i = 1; i < target_dim; ++i)
        certified *= m;
    return IteratedLift{std::move(cur), std::move(certified), budget, first_clamped, m,
                        target_dim};
}

// -------------------------------------------------------- monotone paths --

/// Non-vertical line y = a*x + b.
struct Line {
    Rational a, b;
    bool operator==(const Line& o) const { return a == o.a && b == o.b; }
};

struct LineFamily {
    std::vector<Line> lines;

    explicit LineFamily(std::vector<Line> ls) : lines(std::move(ls)) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                if (lines[i] == lines[j])
                    throw std::invalid_argument("LineFamily: duplicate line");
    }

    int size() const { return static_cast<int>(lines.size()); }

    AffineMap as_affine(int i) const {
        return affine_1d(lines[static_cast<std::size_t>(i)].a, lines[static_cast<std::size_t>(i)].b);
    }
};

struct NoPathError : std::runtime_error {
    NoPathError() : std::runtime_error("no monotone path exists (fewer than two usable vertices)") {}
};

/// Simple polygonal chain through arrangement vertices with strictly
/// increasing x; length counts maximal collinear runs.
struct MonotonePath {
    std::vector<std::array<Rational, 2>> vertices;
    std::vector<int> carriers; // line of step i -> i+1
    int length = 0;
};

namespace detail {

struct PathGraph {
    std::vector<std::array<Rational, 2>> verts; // sorted by (x, y)
    std::vector<std::vector<int>> lines_at;     // line indices through each vertex
    std::vector<std::vector<int>> verts_on;     // vertex indices on each line, by x
};

inline PathGraph path_graph(const LineFamily& L) {
    PathGraph g;
    std::map<std::pair<Rational, Rational>, std::vector<int>> pts;
    const auto& ls = L.lines;
    for (std::size_t i = 0; i < ls.size(); ++i) {
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
    }
    g.verts_on.resize(ls.size());
    for (auto& [xy, lset] : pts) {
        std::sort(lset.begin(), lset.end());
        int v = static_cast<int>(g.verts.size());
        g.verts.push_back({xy.first, xy.second});
        g.lines_at.push_back(lset);
        for (int l : lset)
            g.verts_on[static_cast<std::size_t>(l)].push_back(v);
    }
    // map keys are sorted by (x, y) already, so verts_on lists are x-sorted
    return g;
}

} // namespace detail

/// Exact maximum path length over all x-monotone paths, with the path
/// itself; ties resolved to the lexicographically smallest vertex sequence.
inline MonotonePath longest_monotone_path(const LineFamily& L) {
    if (L.size() < 2)
        throw std::invalid_argument("longest_monotone_path: need at least two lines");
    detail::PathGraph g = detail::path_graph(L);
    const int V = static_cast<int>(g.verts.size());
    if (V == 0)
        throw NoPathError();

    // next vertex after v on line l, or -1
    auto next_on = [&](int v, int l) -> int {
        const auto& vs = g.verts_on[static_cast<std::size_t>(l)];
        auto it = std::find(vs.begin(), vs.end(), v);
        return (it != vs.end() && it + 1 != vs.end()) ? *(it + 1) : -1;
    };

    // suf[v][k]: best number of further segments when standing at vertex v
    // having arrived along g.lines_at[v][k]
    std::vector<std::vector<int>> suf(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v)
        suf[static_cast<std::size_t>(v)].assign(g.lines_at[static_cast<std::size_t>(v)].size(), 0);
    auto line_pos = [&](int v, int l) {
        const auto& ls = g.lines_at[static_cast<std::size_t>(v)];
        return static_cast<std::size_t>(std::find(ls.begin(), ls.end(), l) - ls.begin());
    };
    for (int v = V - 1; v >= 0; --v) {
        const auto& ls = g.lines_at[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < ls.size(); ++k) {
            int best = 0;
            for (int l2 : ls) {
                int w = next_on(v, l2);
                if (w < 0)
                    continue;
                int cost = (l2 == ls[k]) ? 0 : 1;
                int cand = cost + suf[static_cast<std::size_t>(w)][line_pos(w, l2)];
                if (cand > best)
                    best = cand;
            }
            suf[static_cast<std::size_t>(v)][k] = best;
        }
    }

    int best_len = 0, best_start = -1;
    for (int v = 0; v < V; ++v) {
        for (int l : g.lines_at[static_cast<std::size_t>(v)]) {
            int w = next_on(v, l);
            if (w < 0)
                continue;
            int cand = 1 + suf[static_cast<std::size_t>(w)][line_pos(w, l)];
            if (cand > best_len) {
                best_len = cand;
                best_start = v;
            }
        }
    }
    if (best_len < 1)
        throw NoPathError();

    MonotonePath path;
    path.length = best_len;
    int v = best_start;
    path.vertices.push_back(g.verts[static_cast<std::size_t>(v)]);
    int cur_line = -1;
    int remaining = best_len; // segments still to pay for; equals the
                              // current state's suffix value throughout
    while (remaining > 0) {
        int pick = -1, pick_line = -1, pick_cost = 0;
        for (int l : g.lines_at[static_cast<std::size_t>(v)]) {
            int w = next_on(v, l);
            if (w < 0)
                continue;
            int cost = (cur_line < 0 || l != cur_line) ? 1 : 0;
            if (cost > remaining)
                continue;
            // vertex indices follow (x, y) order, so the smallest index is
            // the lexicographically smallest continuation
            if (suf[static_cast<std::size_t>(w)][line_pos(w, l)] == remaining - cost &&
                (pick < 0 || w < pick)) {
                pick = w;
                pick_line = l;
                pick_cost = cost;
            }
        }
        if (pick < 0)
            throw std::logic_error("longest_monotone_path: reconstruction failed");
        path.vertices.push_back(g.verts[static_cast<std::size_t>(pick)]);
        path.carriers.push_back(pick_line);
        v = pick;
        cur_line = pick_line;
        remaining -= pick_cost;
    }
    return path;
}

/// The linear spline through the path's vertices along its carrier lines,
/// first and last carriers extended to -inf and +inf.  Its maximal pieces
/// equal the path length; a single-run path degenerates to one affine piece.
inline CpaExpr path_to_cpa(const MonotonePath& path, const LineFamily& L) {
    if (path.vertices.size() < 2 || path.carriers.size() != path.vertices.size() - 1)
        throw std::invalid_argument("path_to_cpa: invalid path");
    for (std::size_t i = 0; i < path.carriers.size(); ++i) {
        int l = path.carriers[i];
        if (l < 0 || l >= L.size())
            throw std::invalid_argument("path_to_cpa: carrier out of range");
        for (std::size_t k = i; k <= i + 1; ++k) {
            const auto& v = path.vertices[k];
            if (L.lines[static_cast<std::size_t>(l)].a * v[0] + L.lines[static_cast<std::size_t>(l)].b != v[1])
                throw std::invalid_argument("path_to_cpa: vertex not on carrier line");
        }
        if (!(path.vertices[i][0] < path.vertices[i + 1][0]))
            throw std::invalid_argument("path_to_cpa: x must be strictly increasing");
    }

    // maximal collinear runs with the turn x-coordinates between them
    std::vector<int> run_lines;
    std::vector<Rational> turns;
    for (std::size_t i = 0; i < path.carriers.size(); ++i) {
        if (run_lines.empty() || path.carriers[i] != run_lines.back()) {
            if (!run_lines.empty())
                turns.push_back(path.vertices[i][0]);
            run_lines.push_back(path.carriers[i]);
        }
    }
    const std::size_t runs = run_lines.size();
    if (runs == 1)
        return CpaExpr::leaf(L.as_affine(run_lines[0]));

    // f = max over runs i of min over { lines >= run i's line on its piece }
    auto line_ge_on = [&](const Line& g, const Line& c, std::size_t i) {
        // g >= c on piece i: check endpoints; infinite ends need the slope
        Rational da = g.a - c.a, db = g.b - c.b;
        auto at = [&](const Rational& x) { return da * x + db; };
        if (i == 0)
            return at(turns.front()) >= Rational(0) && da <= Rational(0);
        if (i == runs - 1)
            return at(turns.back()) >= Rational(0) && da >= Rational(0);
        return at(turns[i - 1]) >= Rational(0) && at(turns[i]) >= Rational(0);
    };

    std::vector<std::vector<int>> J;
    for (std::size_t i = 0; i < runs; ++i) {
        std::vector<int> set;
        for (std::size_t j = 0; j < runs; ++j) {
            int lj = run_lines[j];
            if (std::find(set.begin(), set.end(), lj) != set.end())
                continue;
            if (line_ge_on(L.lines[static_cast<std::size_t>(lj)],
                           L.lines[static_cast<std::size_t>(run_lines[i])], i))
                set.push_back(lj);
        }
        std::sort(set.begin(), set.end());
        if (std::find(J.begin(), J.end(), set) == J.end())
            J.push_back(std::move(set));
    }
    std::vector<CpaExpr> maxima;
    for (const auto& set : J) {
        std::vector<CpaExpr> leaves;
        leaves.reserve(set.size());
        for (int l : set)
            leaves.push_back(CpaExpr::leaf(L.as_affine(l)));
        maxima.push_back(CpaExpr::min_of(std::move(leaves)));
    }
    CpaExpr f = CpaExpr::max_of(std::move(maxima));

    // the max-min form must reproduce the runs exactly
    PieceDecomposition check = pieces_1d(f);
    if (check.maximal_piece_count() != static_cast<long long>(runs))
        throw std::logic_error("path_to_cpa: max-min form does not reproduce the path");
    return f;
}

// -------------------------------------------------------- line generators --

enum class FamilyKind { RandomGeneric, SlopeGraded, GridLike };

inline FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "random-generic")
        return FamilyKind::RandomGeneric;
    if (s == "slope-graded")
        return FamilyKind::SlopeGraded;
    if (s == "grid-like")
        return FamilyKind::GridLike;
    throw std::invalid_argument("unknown line family kind: " + s);
}

/// Slope direction for grid-like families; dx = 0 would mean a vertical
/// line, which the family cannot represent.
struct GridSlopes {
    Rational dx1{1}, dy1{1};
    Rational dx2{1}, dy2{-1};
};

inline LineFamily line_family(FamilyKind kind, int n, std::uint64_t seed,
                              const GridSlopes& grid = GridSlopes{}) {
    if (n < 1)
        throw std::invalid_argument("line_family: n must be >= 1");
    switch (kind) {
    case FamilyKind::SlopeGraded: {
        // geometrically spaced slopes 2^i with offsets 1 - 2^i
        std::vector<Line> ls;
        Rational a(1);
        for (int i = 0; i < n; ++i) {
            ls.push_back(Line{a, Rational(1) - a});
            a *= 2;
        }
        return LineFamily(std::move(ls));
    }
    case FamilyKind::GridLike: {
        if (grid.dx1.is_zero() || grid.dx2.is_zero())
            throw std::invalid_argument("line_family: grid-like slopes cannot be vertical");
        Rational s1 = grid.dy1 / grid.dx1, s2 = grid.dy2 / grid.dx2;
        if (s1 == s2)
            throw std::invalid_argument("line_family: grid-like slopes must differ");
        std::vector<Line> ls;
        for (int i = 0; i < n; ++i)
            ls.push_back(i % 2 == 0 ? Line{s1, Rational(i / 2)} : Line{s2, Rational(1 + i / 2)});
        return LineFamily(std::move(ls));
    }
    case FamilyKind::RandomGeneric: {
        SplitMix64 rng(seed);
        // coefficient range grows with n so general position stays reachable
        const int span = 8 + n * n / 2;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::vector<Line> ls;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                Line cand{rng.rational(span, 3), rng.rational(span, 3)};
                for (const auto& l : ls)
                    if (l.a == cand.a) // also rules out duplicates
                        ok = false;
                ls.push_back(cand);
            }
            if (ok && n >= 3) {
                // no three concurrent: all pairwise intersections distinct
                std::map<std::pair<Rational, Rational>, int> pts;
                for (std::size_t i = 0; i < ls.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < ls.size() && ok; ++j) {
                        Rational x = (ls[j].b - ls[i].b) / (ls[i].a - ls[j].a);
                        Rational y = ls[i].a * x + ls[i].b;
                        if (++pts[{x, y}] > 1)
                            ok = false;
                    }
            }
            if (ok)
                return LineFamily(std::move(ls));
        }
        throw std::logic_error("line_family: could not reach general position");
    }
    }
    throw std::logic_error("line_family: unreachable");
}

} // namespace cpa
