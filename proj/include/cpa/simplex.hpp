#pragma once

/// Small dense exact-rational LP solver: two-phase primal simplex with
/// Bland's rule, so it terminates on every input and every sign decision is
/// exact.  Variables are implicitly nonnegative; callers split free
/// variables themselves.

#include "cpa/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cpa::lp {

enum class Sense { LE, EQ, GE };

struct Constraint {
    std::vector<Rational> a;
    Sense sense;
    Rational b;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> x; // structural variables only
};

namespace detail {

class Tableau {
public:
    // rows_: m x (ncols+1), last column is the rhs; basis column set is kept
    // as an identity submatrix.
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> basis_;
    std::vector<char> dead_; // columns excluded from entering (artificials)
    std::size_t ncols_ = 0;

    std::vector<Rational> obj_; // reduced-cost row, size ncols_+1

    void pivot(std::size_t r, std::size_t c) {
        auto& prow = rows_[r];
        Rational p = prow[c];
        for (auto& v : prow)
            v /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r)
                continue;
            Rational f = rows_[i][c];
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j <= ncols_; ++j)
                rows_[i][j] -= f * prow[j];
        }
        Rational f = obj_[c];
        if (!f.is_zero())
            for (std::size_t j = 0; j <= ncols_; ++j)
                obj_[j] -= f * prow[j];
        basis_[r] = static_cast<int>(c);
    }

    void set_objective(const std::vector<Rational>& cost) {
        obj_.assign(ncols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cost.size(); ++j)
            obj_[j] = cost[j];
        // price out the basic columns
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t b = static_cast<std::size_t>(basis_[i]);
            Rational f = obj_[b];
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j <= ncols_; ++j)
                obj_[j] -= f * rows_[i][j];
        }
    }

    /// Maximize the current objective.  Returns false when unbounded.
    bool run() {
        for (;;) {
            // Bland: smallest improving column index
            std::size_t enter = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (!dead_[j] && obj_[j] > Rational(0)) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols_)
                return true;
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& aij = rows_[i][enter];
                if (aij > Rational(0)) {
                    Rational ratio = rows_[i][ncols_] / aij;
                    if (leave == rows_.size() || ratio < best ||
                        (ratio == best && basis_[i] < basis_[leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
            }
            if (leave == rows_.size())
                return false;
            pivot(leave, enter);
        }
    }
};

} // namespace detail

/// Maximize c.x subject to the constraints, x >= 0 componentwise.
inline Result maximize(const std::vector<Rational>& c, const std::vector<Constraint>& cons) {
    const std::size_t n = c.size();
    const std::size_t m = cons.size();
    for (const auto& con : cons)
        if (con.a.size() != n)
            throw std::invalid_argument("lp::maximize: constraint arity mismatch");

    // Column layout: structural | slack/surplus | artificial.
    std::size_t nslack = 0, nart = 0;
    for (const auto& con : cons) {
        bool flip = con.b < Rational(0);
        Sense s = con.sense;
        if (flip)
            s = (s == Sense::LE ? Sense::GE : (s == Sense::GE ? Sense::LE : Sense::EQ));
        if (s != Sense::EQ)
            ++nslack;
        if (s != Sense::LE)
            ++nart;
    }
    const std::size_t ncols = n + nslack + nart;

    detail::Tableau t;
    t.ncols_ = ncols;
    t.dead_.assign(ncols, 0);
    t.rows_.assign(m, std::vector<Rational>(ncols + 1, Rational(0)));
    t.basis_.assign(m, -1);

    std::size_t slack_at = n, art_at = n + nslack;
    std::vector<std::size_t> art_cols;
    for (std::size_t i = 0; i < m; ++i) {
        auto row_a = cons[i].a;
        Rational b = cons[i].b;
        Sense s = cons[i].sense;
        if (b < Rational(0)) {
            for (auto& v : row_a)
                v = -v;
            b = -b;
            s = (s == Sense::LE ? Sense::GE : (s == Sense::GE ? Sense::LE : Sense::EQ));
        }
        for (std::size_t j = 0; j < n; ++j)
            t.rows_[i][j] = row_a[j];
        t.rows_[i][ncols] = b;
        if (s == Sense::LE) {
            t.rows_[i][slack_at] = Rational(1);
            t.basis_[i] = static_cast<int>(slack_at++);
        } else {
            if (s == Sense::GE)
                t.rows_[i][slack_at++] = Rational(-1);
            t.rows_[i][art_at] = Rational(1);
            t.basis_[i] = static_cast<int>(art_at);
            art_cols.push_back(art_at++);
        }
    }

    if (!art_cols.empty()) {
        std::vector<Rational> phase1(ncols, Rational(0));
        for (std::size_t a : art_cols)
            phase1[a] = Rational(-1);
        t.set_objective(phase1);
        bool ok = t.run();
        if (!ok)
            throw std::logic_error("lp::maximize: phase 1 unbounded");
        // objective value = -sum of artificials = -obj constant; feasible iff 0
        Rational p1 = Rational(0) - t.obj_[ncols];
        // obj_[ncols] after pricing holds -(value); recompute directly instead:
        Rational art_sum(0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a : art_cols)
                if (t.basis_[i] == static_cast<int>(a))
                    art_sum += t.rows_[i][ncols];
        (void)p1;
        if (!art_sum.is_zero())
            return {Status::Infeasible, Rational(0), {}};
        // Drive remaining zero-valued artificials out of the basis.
        for (std::size_t i = 0; i < m; ++i) {
            bool is_art = false;
            for (std::size_t a : art_cols)
                if (t.basis_[i] == static_cast<int>(a))
                    is_art = true;
            if (!is_art)
                continue;
            std::size_t c2 = ncols;
            for (std::size_t j = 0; j < n + nslack; ++j)
                if (!t.rows_[i][j].is_zero()) {
                    c2 = j;
                    break;
                }
            if (c2 < ncols)
                t.pivot(i, c2);
            // else: redundant row; the artificial stays basic at zero and its
            // column goes dead, which keeps it at zero forever.
        }
        for (std::size_t a : art_cols)
            t.dead_[a] = 1;
    }

    std::vector<Rational> phase2(ncols, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        phase2[j] = c[j];
    t.set_objective(phase2);
    if (!t.run())
        return {Status::Unbounded, Rational(0), {}};

    Result res;
    res.status = Status::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis_[i] >= 0 && static_cast<std::size_t>(t.basis_[i]) < n)
            res.x[static_cast<std::size_t>(t.basis_[i])] = t.rows_[i][ncols];
    for (std::size_t j = 0; j < n; ++j)
        res.value += c[j] * res.x[j];
    return res;
}

} // namespace cpa::lp
