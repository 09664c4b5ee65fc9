#pragma once

/// Hyperplane arrangements: enumerate the open full-dimensional cells as
/// sign vectors with exact rational witness points, and compute which cells
/// share a (d-1)-dimensional facet.
///
/// Cell enumeration is incremental insertion in every dimension; what
/// changes per dimension is how a split is certified:
///   d = 1  sorted breakpoints, intervals between them
///   d = 2  exact convex-polygon splitting inside an outer box chosen large
///          enough (beyond every vertex and every line's closest approach to
///          the origin) that each true cell meets the box interior
///   d >= 3 exact LP feasibility (slack maximization) over each cell's
///          irredundant constraint set
/// Points exactly on a hyperplane belong to no cell; all signs are strict.

#include "cpa/linalg.hpp"
#include "cpa/simplex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace cpa {

/// The set {x : normal.x = offset}; normal is never zero.
struct Hyperplane {
    Vector normal;
    Rational offset;

    Hyperplane(Vector n, Rational off) : normal(std::move(n)), offset(std::move(off)) {
        if (normal.is_zero())
            throw std::invalid_argument("Hyperplane: zero normal");
    }

    int dim() const { return normal.dim(); }

    /// Signed residual normal.x - offset; its sign is the side of x.
    Rational eval(const Vector& x) const { return normal.dot(x) - offset; }

    bool operator==(const Hyperplane& o) const {
        return normal == o.normal && offset == o.offset;
    }
};

/// Canonical form: integer coefficients with gcd 1 and a positive leading
/// normal coordinate, so h, lambda*h (lambda > 0) and -h all collapse to one
/// representative.
inline Hyperplane canonical(const Hyperplane& h) {
    const int d = h.dim();
    BigInt scale = 1;
    auto lcm_den = [&](const Rational& r) {
        scale = boost::multiprecision::lcm(scale, r.denominator());
    };
    for (int i = 0; i < d; ++i)
        lcm_den(h.normal[i]);
    lcm_den(h.offset);
    std::vector<BigInt> n(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        n[static_cast<std::size_t>(i)] = h.normal[i].numerator() * (scale / h.normal[i].denominator());
    BigInt off = h.offset.numerator() * (scale / h.offset.denominator());
    BigInt g = 0;
    for (const auto& v : n)
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(off));
    if (g > 1) {
        for (auto& v : n)
            v /= g;
        off /= g;
    }
    int lead = 0;
    while (n[static_cast<std::size_t>(lead)] == 0)
        ++lead;
    if (n[static_cast<std::size_t>(lead)] < 0) {
        for (auto& v : n)
            v = -v;
        off = -off;
    }
    std::vector<Rational> nr;
    nr.reserve(n.size());
    for (const auto& v : n)
        nr.emplace_back(v);
    return Hyperplane(Vector(std::move(nr)), Rational(off));
}

namespace detail {
inline bool plane_less(const Hyperplane& a, const Hyperplane& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a.normal[i] != b.normal[i])
            return a.normal[i] < b.normal[i];
    }
    return a.offset < b.offset;
}
} // namespace detail

/// Canonicalize, sort, and remove duplicates (h ~ lambda*h ~ -h).
inline std::vector<Hyperplane> dedup_planes(const std::vector<Hyperplane>& planes, int d) {
    std::vector<Hyperplane> out;
    out.reserve(planes.size());
    for (const auto& h : planes) {
        if (h.dim() != d)
            throw std::invalid_argument("dedup_planes: dimension mismatch");
        out.push_back(canonical(h));
    }
    std::sort(out.begin(), out.end(), detail::plane_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// One open cell: strict side per hyperplane plus an exact interior point.
struct Cell {
    std::string signs; // '+' or '-' per plane, in deduped plane order
    Vector witness;
};

struct AdjacentPair {
    int a;
    int b;
    int plane; // index of the separating hyperplane
};

struct BuiltArrangement {
    int dim = 0;
    std::vector<Hyperplane> planes; // deduped, canonical, sorted
    std::vector<Cell> cells;        // sorted by sign vector
    std::vector<AdjacentPair> adjacency;
};

/// Required side of a hyperplane: -1, 0 (on it), or +1.
using SignedPlane = std::pair<Hyperplane, int>;

/// Exact interior point of the relatively open polyhedron given by strict
/// inequalities and equalities, or nullopt when there is none.  Strictness
/// is decided by maximizing a capped slack variable; only a strictly
/// positive optimum certifies feasibility.
inline std::optional<Vector> strict_feasible(const std::vector<SignedPlane>& constraints, int d) {
    if (d < 1)
        throw std::invalid_argument("strict_feasible: dimension must be >= 1");
    const std::size_t nv = 2 * static_cast<std::size_t>(d) + 1; // x+, x-, slack
    std::vector<Rational> obj(nv, Rational(0));
    obj[nv - 1] = Rational(1);
    std::vector<lp::Constraint> rows;
    rows.reserve(constraints.size() + 1);
    for (const auto& [h, sgn] : constraints) {
        if (h.dim() != d)
            throw std::invalid_argument("strict_feasible: dimension mismatch");
        lp::Constraint row;
        row.a.assign(nv, Rational(0));
        for (int i = 0; i < d; ++i) {
            row.a[static_cast<std::size_t>(i)] = h.normal[i];
            row.a[static_cast<std::size_t>(d + i)] = Rational(0) - h.normal[i];
        }
        row.b = h.offset;
        if (sgn > 0) {
            row.a[nv - 1] = Rational(-1);
            row.sense = lp::Sense::GE;
        } else if (sgn < 0) {
            row.a[nv - 1] = Rational(1);
            row.sense = lp::Sense::LE;
        } else {
            row.sense = lp::Sense::EQ;
        }
        rows.push_back(std::move(row));
    }
    lp::Constraint cap;
    cap.a.assign(nv, Rational(0));
    cap.a[nv - 1] = Rational(1);
    cap.sense = lp::Sense::LE;
    cap.b = Rational(1);
    rows.push_back(std::move(cap));

    lp::Result res = lp::maximize(obj, rows);
    if (res.status == lp::Status::Unbounded)
        throw std::logic_error("strict_feasible: capped slack LP cannot be unbounded");
    if (res.status != lp::Status::Optimal || !(res.value > Rational(0)))
        return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        x[static_cast<std::size_t>(i)] =
            res.x[static_cast<std::size_t>(i)] - res.x[static_cast<std::size_t>(d + i)];
    return Vector(std::move(x));
}

namespace detail {

inline char sign_char(const Rational& v) { return v > Rational(0) ? '+' : '-'; }

// ---------------------------------------------------------------- d == 1 --

inline BuiltArrangement build_1d(const std::vector<Hyperplane>& planes, bool with_adjacency) {
    BuiltArrangement arr;
    arr.dim = 1;
    arr.planes = planes;
    // breakpoint of plane i, with its plane index
    std::vector<std::pair<Rational, int>> pts;
    pts.reserve(planes.size());
    for (std::size_t i = 0; i < planes.size(); ++i)
        pts.emplace_back(planes[i].offset / planes[i].normal[0], static_cast<int>(i));
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    auto make_cell = [&](const Rational& w) {
        Cell c;
        c.witness = Vector{w};
        c.signs.reserve(planes.size());
        for (const auto& h : planes)
            c.signs.push_back(sign_char(h.eval(c.witness)));
        return c;
    };

    const std::size_t k = pts.size();
    std::vector<Cell> cells;
    cells.reserve(k + 1);
    cells.push_back(make_cell(pts.front().first - 1));
    for (std::size_t i = 0; i + 1 < k; ++i)
        cells.push_back(make_cell((pts[i].first + pts[i + 1].first) / Rational(2)));
    cells.push_back(make_cell(pts.back().first + 1));

    if (with_adjacency)
        for (std::size_t i = 0; i + 1 < cells.size(); ++i)
            arr.adjacency.push_back(
                {static_cast<int>(i), static_cast<int>(i + 1), pts[i].second});
    arr.cells = std::move(cells);
    return arr;
}

// ---------------------------------------------------------------- d == 2 --

using P2 = std::array<Rational, 2>;

struct Poly {
    std::vector<P2> v;        // CCW
    std::vector<int> carrier; // plane of edge v[i] -> v[i+1]; -1 = outer box
    std::string signs;
    Rational xmin, xmax, ymin, ymax;

    void refresh_bbox() {
        xmin = xmax = v[0][0];
        ymin = ymax = v[0][1];
        for (const auto& p : v) {
            if (p[0] < xmin) xmin = p[0];
            if (p[0] > xmax) xmax = p[0];
            if (p[1] < ymin) ymin = p[1];
            if (p[1] > ymax) ymax = p[1];
        }
    }
};

inline Rational eval2(const Hyperplane& h, const P2& p) {
    return h.normal[0] * p[0] + h.normal[1] * p[1] - h.offset;
}

/// Outer box half-width: strictly beyond every pairwise intersection and
/// every line's closest point to the origin, so that every cell of the
/// arrangement has interior points inside the box.
inline Rational outer_box_halfwidth(const std::vector<Hyperplane>& planes) {
    Rational m(1);
    auto grow = [&](const Rational& v) {
        Rational a = v.abs();
        if (a > m)
            m = a;
    };
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const auto& hi = planes[i];
        const Rational &a = hi.normal[0], &b = hi.normal[1];
        Rational nn = a * a + b * b;
        grow(hi.offset * a / nn);
        grow(hi.offset * b / nn);
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const auto& hj = planes[j];
            Rational det = a * hj.normal[1] - b * hj.normal[0];
            if (det.is_zero())
                continue;
            grow((hi.offset * hj.normal[1] - hj.offset * b) / det);
            grow((a * hj.offset - hj.normal[0] * hi.offset) / det);
        }
    }
    return m + 1;
}

/// Split a convex CCW polygon by plane k.  vals[i] = residual at v[i]; both
/// strict signs must be present among vals.
inline std::pair<Poly, Poly> split_poly(const Poly& poly, int k, const std::vector<Rational>& vals) {
    Poly pos, neg;
    pos.signs = poly.signs + '+';
    neg.signs = poly.signs + '-';
    const std::size_t n = poly.v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const int si = vals[i].sign(), sj = vals[j].sign();
        const P2& vi = poly.v[i];
        const int c = poly.carrier[i];
        if (si > 0) {
            pos.v.push_back(vi);
            pos.carrier.push_back(c);
        } else if (si < 0) {
            neg.v.push_back(vi);
            neg.carrier.push_back(c);
        } else {
            pos.v.push_back(vi);
            pos.carrier.push_back(sj > 0 ? c : k);
            neg.v.push_back(vi);
            neg.carrier.push_back(sj < 0 ? c : k);
        }
        if (si * sj < 0) {
            Rational t = vals[i] / (vals[i] - vals[j]);
            P2 q{vi[0] + t * (poly.v[j][0] - vi[0]), vi[1] + t * (poly.v[j][1] - vi[1])};
            pos.v.push_back(q);
            pos.carrier.push_back(sj > 0 ? c : k);
            neg.v.push_back(q);
            neg.carrier.push_back(sj < 0 ? c : k);
        }
    }
    if (pos.v.size() < 3 || neg.v.size() < 3)
        throw std::logic_error("split_poly: degenerate child polygon");
    pos.refresh_bbox();
    neg.refresh_bbox();
    return {std::move(pos), std::move(neg)};
}

inline BuiltArrangement build_2d(const std::vector<Hyperplane>& planes, bool with_adjacency) {
    const Rational M = outer_box_halfwidth(planes);
    Poly box;
    box.v = {P2{Rational(0) - M, Rational(0) - M}, P2{M, Rational(0) - M}, P2{M, M},
             P2{Rational(0) - M, M}};
    box.carrier = {-1, -1, -1, -1};
    box.refresh_bbox();

    std::vector<Poly> polys;
    polys.push_back(std::move(box));

    std::vector<Rational> vals;
    for (std::size_t k = 0; k < planes.size(); ++k) {
        const Hyperplane& h = planes[k];
        const Rational &a = h.normal[0], &b = h.normal[1];
        std::vector<Poly> next;
        next.reserve(polys.size() + 8);
        for (auto& poly : polys) {
            // residual range over the bbox; skip the vertex scan when the
            // whole box is strictly one-sided
            Rational lo = a * (a.sign() >= 0 ? poly.xmin : poly.xmax) +
                          b * (b.sign() >= 0 ? poly.ymin : poly.ymax) - h.offset;
            if (lo.sign() > 0) {
                poly.signs.push_back('+');
                next.push_back(std::move(poly));
                continue;
            }
            Rational hi = a * (a.sign() >= 0 ? poly.xmax : poly.xmin) +
                          b * (b.sign() >= 0 ? poly.ymax : poly.ymin) - h.offset;
            if (hi.sign() < 0) {
                poly.signs.push_back('-');
                next.push_back(std::move(poly));
                continue;
            }
            vals.clear();
            bool any_pos = false, any_neg = false;
            for (const auto& p : poly.v) {
                vals.push_back(eval2(h, p));
                int s = vals.back().sign();
                any_pos |= s > 0;
                any_neg |= s < 0;
            }
            if (!any_neg) {
                poly.signs.push_back('+');
                next.push_back(std::move(poly));
            } else if (!any_pos) {
                poly.signs.push_back('-');
                next.push_back(std::move(poly));
            } else {
                auto [pos, neg] = split_poly(poly, static_cast<int>(k), vals);
                next.push_back(std::move(pos));
                next.push_back(std::move(neg));
            }
        }
        polys = std::move(next);
    }

    // deterministic cell order: sort by sign vector
    std::vector<std::size_t> order(polys.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return polys[x].signs < polys[y].signs; });
    std::vector<std::size_t> rank(polys.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;

    BuiltArrangement arr;
    arr.dim = 2;
    arr.planes = planes;
    arr.cells.reserve(polys.size());
    for (std::size_t i : order) {
        const Poly& p = polys[i];
        Rational cx, cy;
        for (const auto& q : p.v) {
            cx += q[0];
            cy += q[1];
        }
        Rational n(static_cast<long long>(p.v.size()));
        arr.cells.push_back(Cell{p.signs, Vector{cx / n, cy / n}});
    }

    if (with_adjacency) {
        // Edges on one plane tile it identically from both sides; sort each
        // side's intervals along the line and pair them off.
        struct Rec {
            Rational lo, hi;
            std::size_t cell;
        };
        std::vector<std::vector<Rec>> side_pos(planes.size()), side_neg(planes.size());
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const Poly& p = polys[i];
            for (std::size_t e = 0; e < p.v.size(); ++e) {
                int c = p.carrier[e];
                if (c < 0)
                    continue;
                const Hyperplane& h = planes[static_cast<std::size_t>(c)];
                const P2& u = p.v[e];
                const P2& w = p.v[(e + 1) % p.v.size()];
                // parameter along the line: (-normal_y, normal_x).p
                Rational pu = h.normal[0] * u[1] - h.normal[1] * u[0];
                Rational pw = h.normal[0] * w[1] - h.normal[1] * w[0];
                Rec r{std::min(pu, pw), std::max(pu, pw), rank[i]};
                if (p.signs[static_cast<std::size_t>(c)] == '+')
                    side_pos[static_cast<std::size_t>(c)].push_back(std::move(r));
                else
                    side_neg[static_cast<std::size_t>(c)].push_back(std::move(r));
            }
        }
        auto by_lo = [](const Rec& x, const Rec& y) { return x.lo < y.lo; };
        for (std::size_t k = 0; k < planes.size(); ++k) {
            auto& ps = side_pos[k];
            auto& ns = side_neg[k];
            if (ps.size() != ns.size())
                throw std::logic_error("build_2d: facet tiling mismatch");
            std::sort(ps.begin(), ps.end(), by_lo);
            std::sort(ns.begin(), ns.end(), by_lo);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                if (ps[i].lo != ns[i].lo || ps[i].hi != ns[i].hi)
                    throw std::logic_error("build_2d: facet intervals disagree");
                arr.adjacency.push_back({static_cast<int>(ps[i].cell),
                                         static_cast<int>(ns[i].cell), static_cast<int>(k)});
            }
        }
    }
    return arr;
}

// ---------------------------------------------------------------- d >= 3 --

struct CellState {
    std::string signs;
    Vector witness;
    std::vector<int> tight; // irredundant constraint planes, ascending
};

inline std::vector<SignedPlane> gather(const std::vector<Hyperplane>& planes,
                                       const CellState& cell, const std::vector<int>& which) {
    std::vector<SignedPlane> cs;
    cs.reserve(which.size());
    for (int t : which)
        cs.emplace_back(planes[static_cast<std::size_t>(t)],
                        cell.signs[static_cast<std::size_t>(t)] == '+' ? 1 : -1);
    return cs;
}

/// Drop constraints implied by the rest; candidate signs are read off the
/// cell's sign string.
inline std::vector<int> irredundant(const std::vector<Hyperplane>& planes, const CellState& cell,
                                    std::vector<int> cand, int d) {
    std::vector<int> keep = std::move(cand);
    for (std::size_t i = 0; i < keep.size();) {
        int c = keep[i];
        std::vector<int> rest;
        rest.reserve(keep.size() - 1);
        for (int t : keep)
            if (t != c)
                rest.push_back(t);
        auto cs = gather(planes, cell, rest);
        int flipped = cell.signs[static_cast<std::size_t>(c)] == '+' ? -1 : 1;
        cs.emplace_back(planes[static_cast<std::size_t>(c)], flipped);
        if (strict_feasible(cs, d))
            ++i; // cuts something off: keep
        else
            keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return keep;
}

/// Candidate pairs differ in exactly one sign; certify each by the exact
/// segment-crossing point, falling back to LP with on-demand blocking
/// planes.
inline std::vector<AdjacentPair> adjacency_general(const std::vector<Hyperplane>& planes,
                                                   const std::vector<Cell>& cells, int d,
                                                   const std::vector<std::vector<int>>* tights);

inline BuiltArrangement build_nd(const std::vector<Hyperplane>& planes, int d,
                                 bool with_adjacency) {
    std::vector<CellState> cells;
    cells.push_back(CellState{"", Vector::zero(d), {}});

    for (std::size_t k = 0; k < planes.size(); ++k) {
        const Hyperplane& h = planes[k];
        std::vector<CellState> next;
        next.reserve(cells.size() + 8);
        for (auto& cell : cells) {
            int s = h.eval(cell.witness).sign();
            std::optional<Vector> other;
            int side = s;
            if (s == 0) {
                // witness sits on the new plane: the cell is certainly split
                auto base = gather(planes, cell, cell.tight);
                auto cs_pos = base;
                cs_pos.emplace_back(h, 1);
                auto w_pos = strict_feasible(cs_pos, d);
                auto cs_neg = base;
                cs_neg.emplace_back(h, -1);
                auto w_neg = strict_feasible(cs_neg, d);
                if (!w_pos || !w_neg)
                    throw std::logic_error("build_nd: split through witness not certified");
                cell.witness = *w_pos;
                side = 1;
                other = w_neg;
            } else {
                auto cs = gather(planes, cell, cell.tight);
                cs.emplace_back(h, -s);
                other = strict_feasible(cs, d);
            }
            if (!other) {
                cell.signs.push_back(side > 0 ? '+' : '-');
                next.push_back(std::move(cell));
                continue;
            }
            std::vector<int> cand = cell.tight;
            cand.push_back(static_cast<int>(k));
            CellState same{cell.signs + (side > 0 ? '+' : '-'), cell.witness, {}};
            CellState opp{cell.signs + (side > 0 ? '-' : '+'), *other, {}};
            same.tight = irredundant(planes, same, cand, d);
            opp.tight = irredundant(planes, opp, cand, d);
            next.push_back(std::move(same));
            next.push_back(std::move(opp));
        }
        cells = std::move(next);
    }

    std::sort(cells.begin(), cells.end(),
              [](const CellState& a, const CellState& b) { return a.signs < b.signs; });

    BuiltArrangement arr;
    arr.dim = d;
    arr.planes = planes;
    arr.cells.reserve(cells.size());
    for (auto& c : cells)
        arr.cells.push_back(Cell{c.signs, c.witness});

    if (with_adjacency) {
        std::vector<std::vector<int>> tights;
        tights.reserve(cells.size());
        for (auto& c : cells)
            tights.push_back(c.tight);
        arr.adjacency = adjacency_general(planes, arr.cells, d, &tights);
    }
    return arr;
}

} // namespace detail

inline BuiltArrangement build_arrangement(const std::vector<Hyperplane>& planes_in, int d,
                                          bool with_adjacency = true) {
    if (d < 1)
        throw std::invalid_argument("build_arrangement: dimension must be >= 1");
    std::vector<Hyperplane> planes = dedup_planes(planes_in, d);
    if (planes.empty()) {
        BuiltArrangement arr;
        arr.dim = d;
        arr.cells.push_back(Cell{"", Vector::zero(d)});
        return arr;
    }
    if (d == 1)
        return detail::build_1d(planes, with_adjacency);
    if (d == 2)
        return detail::build_2d(planes, with_adjacency);
    return detail::build_nd(planes, d, with_adjacency);
}

/// All nonempty open d-cells of the arrangement; signs refer to
/// dedup_planes(planes, d).
inline std::vector<Cell> enumerate_cells(const std::vector<Hyperplane>& planes, int d) {
    return build_arrangement(planes, d, /*with_adjacency=*/false).cells;
}

namespace detail {

inline std::vector<AdjacentPair> adjacency_general(const std::vector<Hyperplane>& planes,
                                                   const std::vector<Cell>& cells, int d,
                                                   const std::vector<std::vector<int>>* tights) {
    std::vector<AdjacentPair> out;
    const std::size_t np = planes.size();
    for (std::size_t k = 0; k < np; ++k) {
        // bucket cells by their sign vector with position k wildcarded
        std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> buckets;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::string key = cells[i].signs;
            char side = key[k];
            key[k] = '*';
            if (side == '+')
                buckets[key].first.push_back(i);
            else
                buckets[key].second.push_back(i);
        }
        for (auto& [key, pair] : buckets) {
            for (std::size_t ia : pair.first) {
                for (std::size_t ib : pair.second) {
                    const Cell& A = cells[ia];
                    const Cell& B = cells[ib];
                    // crossing of [witness_a, witness_b] with plane k
                    Rational va = planes[k].eval(A.witness);
                    Rational vb = planes[k].eval(B.witness);
                    Rational t = va / (va - vb);
                    Vector q = A.witness + (B.witness - A.witness).scaled(t);
                    bool clean = true;
                    for (std::size_t j = 0; j < np && clean; ++j) {
                        if (j == k)
                            continue;
                        int s = planes[j].eval(q).sign();
                        clean = s == (A.signs[j] == '+' ? 1 : -1);
                    }
                    bool adjacent = clean;
                    if (!clean) {
                        // LP with growing constraint set
                        std::vector<char> in_set(np, 0);
                        std::vector<SignedPlane> cs;
                        auto add = [&](std::size_t j) {
                            in_set[j] = 1;
                            cs.emplace_back(planes[j], A.signs[j] == '+' ? 1 : -1);
                        };
                        if (tights) {
                            for (int tcon : (*tights)[ia])
                                if (tcon != static_cast<int>(k) && !in_set[static_cast<std::size_t>(tcon)])
                                    add(static_cast<std::size_t>(tcon));
                            for (int tcon : (*tights)[ib])
                                if (tcon != static_cast<int>(k) && !in_set[static_cast<std::size_t>(tcon)])
                                    add(static_cast<std::size_t>(tcon));
                        }
                        cs.emplace_back(planes[k], 0);
                        for (;;) {
                            auto w = strict_feasible(cs, d);
                            if (!w) {
                                adjacent = false;
                                break;
                            }
                            std::size_t blocker = np;
                            for (std::size_t j = 0; j < np; ++j) {
                                if (j == k || in_set[j])
                                    continue;
                                int s = planes[j].eval(*w).sign();
                                if (s != (A.signs[j] == '+' ? 1 : -1)) {
                                    blocker = j;
                                    break;
                                }
                            }
                            if (blocker == np) {
                                adjacent = true;
                                break;
                            }
                            add(blocker);
                        }
                    }
                    if (adjacent)
                        out.push_back({static_cast<int>(std::min(ia, ib)),
                                       static_cast<int>(std::max(ia, ib)), static_cast<int>(k)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const AdjacentPair& x, const AdjacentPair& y) {
        return std::tie(x.a, x.b, x.plane) < std::tie(y.a, y.b, y.plane);
    });
    return out;
}

} // namespace detail

/// Facet adjacency for cells produced by enumerate_cells on the same planes.
inline std::vector<AdjacentPair> cell_adjacency(const std::vector<Hyperplane>& planes_in,
                                                const std::vector<Cell>& cells, int d) {
    std::vector<Hyperplane> planes = dedup_planes(planes_in, d);
    if (planes.empty() || cells.size() < 2)
        return {};
    if (d <= 2) {
        // rebuild (cheap at these dimensions) and map by sign vector
        BuiltArrangement arr = build_arrangement(planes, d, true);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < cells.size(); ++i)
            index[cells[i].signs] = i;
        std::vector<AdjacentPair> out;
        out.reserve(arr.adjacency.size());
        for (const auto& p : arr.adjacency) {
            auto ia = index.find(arr.cells[static_cast<std::size_t>(p.a)].signs);
            auto ib = index.find(arr.cells[static_cast<std::size_t>(p.b)].signs);
            if (ia == index.end() || ib == index.end())
                throw std::invalid_argument("cell_adjacency: cells do not match the arrangement");
            int a = static_cast<int>(ia->second), b = static_cast<int>(ib->second);
            out.push_back({std::min(a, b), std::max(a, b), p.plane});
        }
        std::sort(out.begin(), out.end(), [](const AdjacentPair& x, const AdjacentPair& y) {
            return std::tie(x.a, x.b, x.plane) < std::tie(y.a, y.b, y.plane);
        });
        return out;
    }
    return detail::adjacency_general(planes, cells, d, nullptr);
}

} // namespace cpa
