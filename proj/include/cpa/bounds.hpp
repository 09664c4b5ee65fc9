#pragma once

/// Bound formulas relating piece count to component count, checks of
/// measured decompositions against them, and the (quarantined,
/// floating-point) log-log growth-exponent fit.  Everything else in this
/// library is exact; to_double appears only inside fit_exponent.

#include "cpa/pieces.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cpa {

/// Exact binomial coefficient.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return BigInt(0);
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

inline BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// Upper bound on the minimum number of convex pieces of a CPA function
/// with n components on R^d: min( sum_{i<=d} C((n^2-n)/2, i), n! ).
inline BigInt convex_cover_bound(long long n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("convex_cover_bound: requires n >= 1, d >= 1");
    long long walls = (n * n - n) / 2;
    BigInt sum = 0;
    for (int i = 0; i <= d; ++i)
        sum += binomial(walls, i);
    BigInt fact = factorial(n);
    return sum < fact ? sum : fact;
}

/// Facet-count bound n * sum_{k<=min(d, n-1)} C(n-1, k); an upper bound on
/// the number of maximal pieces.
inline BigInt facet_count_bound(long long n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("facet_count_bound: requires n >= 1, d >= 1");
    BigInt sum = 0;
    for (long long k = 0; k <= std::min<long long>(d, n - 1); ++k)
        sum += binomial(n - 1, k);
    return BigInt(n) * sum;
}

struct BoundReport {
    long long n = 0;
    int d = 0;
    long long pieces = 0;
    long long cells = 0;
    BigInt lemma1; // convex_cover_bound(n, d)
    BigInt thm2;   // facet_count_bound(n, d)
    bool pieces_at_least_n = false;
    bool pieces_within_lemma1 = false;
    bool pieces_within_thm2 = false;

    bool ok() const { return pieces_at_least_n && pieces_within_lemma1 && pieces_within_thm2; }

    /// "n,d,pieces,cells,lemma1,thm2,ok"
    std::string csv_row() const {
        std::ostringstream os;
        os << n << ',' << d << ',' << pieces << ',' << cells << ',' << lemma1.str() << ','
           << thm2.str() << ',' << (ok() ? 1 : 0);
        return os.str();
    }
};

inline BoundReport check_bounds(const PieceDecomposition& dec) {
    BoundReport r;
    r.n = dec.n_active();
    r.d = dec.dim;
    r.pieces = dec.maximal_piece_count();
    r.cells = dec.cell_count();
    r.lemma1 = convex_cover_bound(r.n, r.d);
    r.thm2 = facet_count_bound(r.n, r.d);
    r.pieces_at_least_n = r.pieces >= r.n;
    r.pieces_within_lemma1 = BigInt(r.pieces) <= r.lemma1;
    r.pieces_within_thm2 = BigInt(r.pieces) <= r.thm2;
    return r;
}

/// Least-squares slope of log(p) against log(n), plus the slope of each
/// consecutive pair.  The only floating-point computation in the library.
struct ExponentFit {
    double slope = 0.0;
    std::vector<double> pairwise;
};

inline ExponentFit fit_exponent(const std::vector<std::pair<long long, long long>>& samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("fit_exponent: need at least three samples");
    std::vector<double> lx, ly;
    for (const auto& [n, p] : samples) {
        if (n <= 0 || p <= 0)
            throw std::invalid_argument("fit_exponent: samples must be positive");
        lx.push_back(std::log(static_cast<double>(n)));
        ly.push_back(std::log(static_cast<double>(p)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(ly.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    ExponentFit fit;
    fit.slope = den == 0.0 ? 0.0 : num / den;
    for (std::size_t i = 0; i + 1 < lx.size(); ++i)
        fit.pairwise.push_back((ly[i + 1] - ly[i]) / (lx[i + 1] - lx[i]));
    return fit;
}

} // namespace cpa
