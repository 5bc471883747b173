#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sperner/rational.hpp"

// Small exact linear-programming kernel: maximize c.v subject to E v = f,
// v >= 0, in rational arithmetic. Two-phase tableau simplex with Bland's
// rule, so it terminates on every input. Intended for the tiny feasibility
// problems of the face-condition check (a handful of rows and columns);
// nothing here is tuned for large programs.

namespace sperner {

struct LpResult {
    bool feasible = false;
    Rational value = 0;               // objective optimum when feasible
    std::vector<Rational> solution;   // an optimal vertex when feasible
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                   std::size_t real_vars)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), real_vars_(real_vars) {
        const std::size_t m = rows_.size();
        // Flip rows so the right-hand side is nonnegative, then add one
        // artificial basic variable per row.
        for (std::size_t i = 0; i < m; ++i) {
            if (rhs_[i] < 0) {
                rhs_[i] = -rhs_[i];
                for (Rational& a : rows_[i]) a = -a;
            }
        }
        total_vars_ = real_vars_ + m;
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            rows_[i].resize(total_vars_, Rational(0));
            rows_[i][real_vars_ + i] = 1;
            basis_[i] = real_vars_ + i;
        }
    }

    // Runs phase 1. Returns false when the constraints are infeasible.
    bool make_feasible() {
        std::vector<Rational> phase1(total_vars_, Rational(0));
        for (std::size_t j = real_vars_; j < total_vars_; ++j) phase1[j] = -1;
        const Rational opt = optimize(phase1, /*allow_artificials=*/true);
        if (opt != 0) return false;
        drop_artificials();
        return true;
    }

    Rational maximize(const std::vector<Rational>& objective) {
        std::vector<Rational> padded = objective;
        padded.resize(total_vars_, Rational(0));
        return optimize(padded, /*allow_artificials=*/false);
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> v(real_vars_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < real_vars_) v[basis_[i]] = rhs_[i];
        return v;
    }

private:
    Rational optimize(const std::vector<Rational>& obj, bool allow_artificials) {
        // z-row expressed over nonbasic variables: price out the basis first.
        std::vector<Rational> z(total_vars_, Rational(0));
        Rational zval = 0;
        for (std::size_t j = 0; j < total_vars_; ++j) z[j] = -obj[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = obj[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < total_vars_; ++j) z[j] += cb * rows_[i][j];
            zval += cb * rhs_[i];
        }
        const std::size_t limit = allow_artificials ? total_vars_ : real_vars_;
        for (;;) {
            // Bland: entering column = smallest index with negative reduced cost.
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (z[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return zval;

            std::size_t leave = rows_.size();
            Rational best_ratio = 0;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                const Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows_.size())
                throw std::logic_error("SimplexTableau: unbounded objective");

            pivot(leave, enter);
            const Rational factor = z[enter];
            if (factor != 0) {
                for (std::size_t j = 0; j < total_vars_; ++j) z[j] -= factor * rows_[leave][j];
                zval -= factor * rhs_[leave];
            }
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = rows_[row][col];
        for (Rational& a : rows_[row]) a /= inv;
        rhs_[row] /= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            const Rational factor = rows_[i][col];
            for (std::size_t j = 0; j < total_vars_; ++j)
                rows_[i][j] -= factor * rows_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        basis_[row] = col;
    }

    // After a zero-cost phase 1, pivot leftover artificial basics onto real
    // columns; rows with no real coefficient are redundant and get dropped.
    void drop_artificials() {
        for (std::size_t i = rows_.size(); i-- > 0;) {
            if (basis_[i] < real_vars_) continue;
            std::size_t col = real_vars_;
            for (std::size_t j = 0; j < real_vars_; ++j) {
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col < real_vars_) {
                // rhs is 0 here, so the pivot is degenerate and keeps feasibility
                // regardless of the coefficient's sign.
                pivot(i, col);
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (auto& row : rows_) row.resize(real_vars_);
        total_vars_ = real_vars_;
    }

    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::size_t real_vars_ = 0;
    std::size_t total_vars_ = 0;
};

}  // namespace detail

// Maximizes c.v over {v >= 0 : E v = f}. The feasible set must be bounded
// in the direction of c (always the case for the weight polytopes used
// here); otherwise std::logic_error is thrown.
inline LpResult maximize_linear(const std::vector<std::vector<Rational>>& equations,
                                const std::vector<Rational>& rhs,
                                const std::vector<Rational>& objective) {
    if (equations.empty() || equations.size() != rhs.size())
        throw std::invalid_argument("maximize_linear: bad system shape");
    for (const auto& row : equations)
        if (row.size() != objective.size())
            throw std::invalid_argument("maximize_linear: bad row width");

    detail::SimplexTableau tableau(equations, rhs, objective.size());
    LpResult result;
    if (!tableau.make_feasible()) return result;
    result.feasible = true;
    result.value = tableau.maximize(objective);
    result.solution = tableau.solution();
    return result;
}

}  // namespace sperner
