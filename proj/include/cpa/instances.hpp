#pragma once

/// Seeded instance sources used by the verification suites and sweeps:
/// random min/max expressions, the fig1 fixture (four components whose
/// minimal cover needs five pieces), and the composed growth family
/// line family -> longest monotone path -> 1-D CPA -> iterated lift.

#include "cpa/constructions.hpp"
#include "cpa/expr.hpp"
#include "cpa/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace cpa {

/// The expression min(y, min(max(-x,-1), max(3-2x,-x))) on R^2: four affine
/// components, five maximal pieces; the two congruent regions of the -x
/// component touch the y component's region along y = -x but must not merge.
inline CpaExpr fixture_fig1() {
    auto leaf = [](int gx, int gy, int off) {
        return CpaExpr::leaf(AffineMap(Vector{Rational(gx), Rational(gy)}, Rational(off)));
    };
    CpaExpr neg_x = leaf(-1, 0, 0);
    CpaExpr minus_one = leaf(0, 0, -1);
    CpaExpr three_minus_2x = leaf(-2, 0, 3);
    CpaExpr y = leaf(0, 1, 0);
    return CpaExpr::min_of(
        {y, CpaExpr::min_of({CpaExpr::max_of({neg_x, minus_one}),
                             CpaExpr::max_of({three_minus_2x, neg_x})})});
}

/// |x| as a 1-D expression.
inline CpaExpr fixture_abs() {
    return CpaExpr::max_of({CpaExpr::leaf(affine_1d(Rational(1), Rational(0))),
                            CpaExpr::leaf(affine_1d(Rational(-1), Rational(0)))});
}

/// Random min/max tree with at most max_leaves leaves and small rational
/// coefficients; deterministic in the seed.
inline CpaExpr random_expr(SplitMix64& rng, int dim, int max_leaves) {
    if (max_leaves < 1)
        throw std::invalid_argument("random_expr: max_leaves must be >= 1");
    auto leaf = [&]() {
        std::vector<Rational> g;
        g.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            g.push_back(rng.rational(3, 2));
        return CpaExpr::leaf(AffineMap(Vector(std::move(g)), rng.rational(3, 2)));
    };
    auto rec = [&](auto&& self, int budget, int depth) -> CpaExpr {
        if (budget <= 1 || depth >= 3 || rng.below(100) < 35)
            return leaf();
        int arity = budget >= 3 && rng.below(2) == 0 ? 3 : 2;
        arity = std::min(arity, budget);
        std::vector<CpaExpr> kids;
        int left = budget;
        for (int i = 0; i < arity; ++i) {
            int share = (i == arity - 1) ? left : std::max(1, left / (arity - i));
            kids.push_back(self(self, share, depth + 1));
            left -= share;
        }
        return rng.below(2) == 0 ? CpaExpr::min_of(std::move(kids))
                                 : CpaExpr::max_of(std::move(kids));
    };
    return rec(rec, max_leaves, 0);
}

/// Composed growth-family instance at a given scale index.
struct GrowthInstance {
    LineFamily family;
    MonotonePath path;
    CpaExpr base;     // 1-D path function
    IteratedLift lift;
    int m = 0;
    int n_lines = 0;
};

/// Lines used by the growth family at scale m; calibrated so the measured
/// log-log slope of pieces against components sits between 2 and 3 at d=2.
inline int growth_family_lines(int m) { return 2 * m + 2; }

/// Pick the best of a few seeded random-generic families by exact longest
/// path, then lift the path function to dimension d with sawtooth scale m.
inline GrowthInstance growth_family(int d, int m, std::uint64_t seed, int n_lines = 0,
                                    int tries = 4) {
    if (m < 1 || d < 1)
        throw std::invalid_argument("growth_family: requires m >= 1, d >= 1");
    if (n_lines <= 0)
        n_lines = growth_family_lines(m);
    int best_len = -1;
    std::uint64_t best_seed = seed;
    for (int t = 0; t < tries; ++t) {
        LineFamily cand = line_family(FamilyKind::RandomGeneric, n_lines, seed + static_cast<std::uint64_t>(t));
        int len = 0;
        try {
            len = longest_monotone_path(cand).length;
        } catch (const NoPathError&) {
            continue;
        }
        if (len > best_len) {
            best_len = len;
            best_seed = seed + static_cast<std::uint64_t>(t);
        }
    }
    if (best_len < 1)
        throw NoPathError();
    LineFamily family = line_family(FamilyKind::RandomGeneric, n_lines, best_seed);
    MonotonePath path = longest_monotone_path(family);
    CpaExpr base = path_to_cpa(path, family);
    GrowthInstance inst{std::move(family), std::move(path), base, iterate_lift(base, d, m), m,
                        n_lines};
    return inst;
}

} // namespace cpa
