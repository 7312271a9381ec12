#include "debtflow/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "debtflow/error.hpp"

namespace debtflow::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kZeroTol = 1e-9;
constexpr int kIterationCap = 50000;

struct Tableau {
    int rows = 0;  // constraint rows
    int cols = 0;  // variable columns (structural + slack + artificial)
    std::vector<double> a;     // rows x cols
    std::vector<double> rhs;   // per row
    std::vector<double> rc;    // reduced costs per column
    double neg_obj = 0.0;      // objective row rhs (= -objective)
    std::vector<int> basis;    // basic variable per row
    std::vector<bool> allowed; // columns eligible to enter

    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    double get(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    void pivot(int prow, int pcol) {
        double p = get(prow, pcol);
        for (int c = 0; c < cols; ++c) at(prow, c) /= p;
        rhs[prow] /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            double factor = get(r, pcol);
            if (factor == 0.0) continue;
            for (int c = 0; c < cols; ++c) at(r, c) -= factor * get(prow, c);
            at(r, pcol) = 0.0;
            rhs[r] -= factor * rhs[prow];
        }
        double factor = rc[pcol];
        if (factor != 0.0) {
            for (int c = 0; c < cols; ++c) rc[c] -= factor * get(prow, c);
            rc[pcol] = 0.0;
            neg_obj -= factor * rhs[prow];
        }
        basis[prow] = pcol;
    }

    // Entering column: most negative reduced cost, lowest index on ties;
    // under Bland's rule the first negative column.
    int entering(bool bland) const {
        int best = -1;
        double best_rc = -kPivotTol;
        for (int c = 0; c < cols; ++c) {
            if (!allowed[c]) continue;
            if (rc[c] < best_rc) {
                if (bland) return c;
                best_rc = rc[c];
                best = c;
            }
        }
        return best;
    }

    // Leaving row: minimum ratio, lowest basic-variable index on ties.
    int leaving(int pcol) const {
        int best = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int r = 0; r < rows; ++r) {
            double coef = get(r, pcol);
            if (coef <= kPivotTol) continue;
            double ratio = rhs[r] / coef;
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && best >= 0 && basis[r] < basis[best])) {
                best_ratio = ratio;
                best = r;
            }
        }
        return best;
    }

    // Returns true on optimal, false on unbounded.
    bool iterate() {
        bool bland = false;
        int degenerate_streak = 0;
        const int bland_trigger = 2 * (rows + cols);
        for (int iter = 0; iter < kIterationCap; ++iter) {
            int pcol = entering(bland);
            if (pcol < 0) return true;
            int prow = leaving(pcol);
            if (prow < 0) return false;
            double before = neg_obj;
            pivot(prow, pcol);
            if (std::abs(neg_obj - before) <= 1e-15 * (1.0 + std::abs(before))) {
                if (++degenerate_streak > bland_trigger) bland = true;
            } else {
                degenerate_streak = 0;
                bland = false;
            }
        }
        fail(errc::numerical_failure, "simplex pivot limit exhausted");
    }
};

}  // namespace

Solution solve(const Problem& problem) {
    const int n = static_cast<int>(problem.objective.size());
    const int m = static_cast<int>(problem.constraints.size());
    for (const auto& con : problem.constraints)
        if (static_cast<int>(con.coeffs.size()) != n)
            fail(errc::invalid_argument, "constraint arity mismatch");

    // Normalize rows to nonnegative rhs; <= with negative rhs becomes >=.
    enum RowKind { kLe, kGe, kEq };
    std::vector<RowKind> kind(static_cast<std::size_t>(m));
    std::vector<std::vector<double>> rowa(static_cast<std::size_t>(m));
    std::vector<double> rowb(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const auto& con = problem.constraints[static_cast<std::size_t>(r)];
        double sign = con.rhs < 0.0 ? -1.0 : 1.0;
        rowb[r] = sign * con.rhs;
        rowa[r].resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) rowa[r][c] = sign * con.coeffs[static_cast<std::size_t>(c)];
        if (con.type == ConstraintType::equal)
            kind[r] = kEq;
        else
            kind[r] = sign > 0.0 ? kLe : kGe;
    }

    int n_slack = 0, n_art = 0;
    for (int r = 0; r < m; ++r) {
        if (kind[r] != kEq) ++n_slack;
        if (kind[r] != kLe) ++n_art;
    }

    Tableau t;
    t.rows = m;
    t.cols = n + n_slack + n_art;
    t.a.assign(static_cast<std::size_t>(t.rows) * t.cols, 0.0);
    t.rhs = rowb;
    t.rc.assign(static_cast<std::size_t>(t.cols), 0.0);
    t.basis.assign(static_cast<std::size_t>(m), -1);
    t.allowed.assign(static_cast<std::size_t>(t.cols), true);

    int slack_at = n, art_at = n + n_slack;
    const int first_art = art_at;
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) t.at(r, c) = rowa[r][c];
        switch (kind[r]) {
            case kLe:
                t.at(r, slack_at) = 1.0;
                t.basis[r] = slack_at++;
                break;
            case kGe:
                t.at(r, slack_at) = -1.0;
                ++slack_at;
                t.at(r, art_at) = 1.0;
                t.basis[r] = art_at++;
                break;
            case kEq:
                t.at(r, art_at) = 1.0;
                t.basis[r] = art_at++;
                break;
        }
    }

    // Phase 1: minimize the sum of artificials.
    if (n_art > 0) {
        for (int c = first_art; c < t.cols; ++c) t.rc[c] = 1.0;
        for (int r = 0; r < m; ++r) {
            if (t.basis[r] < first_art) continue;
            for (int c = 0; c < t.cols; ++c) t.rc[c] -= t.get(r, c);
            t.neg_obj -= t.rhs[r];
        }
        if (!t.iterate())  // bounded below by zero, cannot be unbounded
            fail(errc::numerical_failure, "phase-1 simplex reported unbounded");
        if (-t.neg_obj > 1e-7) return Solution{Status::infeasible, {}, 0.0, {}};

        // Pivot any artificial still basic (at zero) out of the basis.
        for (int r = 0; r < m; ++r) {
            if (t.basis[r] < first_art) continue;
            int pcol = -1;
            for (int c = 0; c < first_art; ++c) {
                if (std::abs(t.get(r, c)) > kPivotTol) {
                    pcol = c;
                    break;
                }
            }
            if (pcol >= 0) t.pivot(r, pcol);
            // else: redundant row; the artificial stays basic at zero.
        }
        for (int c = first_art; c < t.cols; ++c) t.allowed[c] = false;
    }

    // Phase 2: the real objective, expressed in the current basis.
    std::fill(t.rc.begin(), t.rc.end(), 0.0);
    t.neg_obj = 0.0;
    for (int c = 0; c < n; ++c) t.rc[c] = problem.objective[static_cast<std::size_t>(c)];
    for (int r = 0; r < m; ++r) {
        int b = t.basis[r];
        if (b >= n) continue;
        double cost = problem.objective[static_cast<std::size_t>(b)];
        if (cost == 0.0) continue;
        for (int c = 0; c < t.cols; ++c) t.rc[c] -= cost * t.get(r, c);
        t.neg_obj -= cost * t.rhs[r];
    }
    for (int r = 0; r < m; ++r)
        if (t.basis[r] < n) t.rc[t.basis[r]] = 0.0;

    if (!t.iterate()) return Solution{Status::unbounded, {}, 0.0, {}};

    Solution sol;
    sol.status = Status::optimal;
    sol.x.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = 0; r < m; ++r)
        if (t.basis[r] < n) sol.x[static_cast<std::size_t>(t.basis[r])] = t.rhs[r];
    for (double& v : sol.x)
        if (std::abs(v) < 1e-12) v = 0.0;

    sol.objective = 0.0;
    for (int c = 0; c < n; ++c)
        sol.objective += problem.objective[static_cast<std::size_t>(c)] * sol.x[static_cast<std::size_t>(c)];

    for (int r = 0; r < m; ++r) {
        const auto& con = problem.constraints[static_cast<std::size_t>(r)];
        if (con.type != ConstraintType::less_equal) continue;
        double lhs = 0.0;
        for (int c = 0; c < n; ++c) lhs += con.coeffs[static_cast<std::size_t>(c)] * sol.x[static_cast<std::size_t>(c)];
        if (std::abs(lhs - con.rhs) <= kZeroTol * std::max(1.0, std::abs(con.rhs)))
            sol.binding.push_back(con.name.empty() ? "c" + std::to_string(r) : con.name);
    }
    return sol;
}

}  // namespace debtflow::lp
