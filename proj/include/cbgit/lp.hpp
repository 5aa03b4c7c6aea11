#pragma once

// Exact rational simplex (phase-one feasibility) with Bland's pivoting rule.

#include "cbgit/rational.hpp"

#include <optional>
#include <vector>

namespace cbgit {

using RationalMatrix = std::vector<RationalVector>;

/// Finds x >= 0 with A x = b, or returns absent when none exists.
/// A is rows x cols; an empty A means every row constraint is vacuous.
inline std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& A, const RationalVector& b) {
    const std::size_t rows = A.size();
    if (b.size() != rows) throw invalid_input("right-hand side length does not match row count");
    const std::size_t cols = rows ? A.front().size() : 0;
    for (const auto& r : A)
        if (r.size() != cols) throw invalid_input("ragged constraint matrix");
    if (rows == 0) return RationalVector(cols, Rational(0));

    // Columns: [structural | artificial | rhs]; one artificial per row.
    const std::size_t total = cols + rows;
    RationalMatrix T(rows, RationalVector(total + 1, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < cols; ++j) T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
        T[i][cols + i] = 1;
        T[i][total] = flip ? Rational(-b[i]) : b[i];
        basis[i] = cols + i;
    }

    // Reduced costs of "minimize the sum of artificials"; last entry is minus the objective.
    RationalVector cost(total + 1, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= T[i][j];
        cost[total] -= T[i][total];
    }

    for (;;) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == total) break;

        std::size_t leave = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][total] / T[i][enter];
            if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        if (leave == rows) throw std::logic_error("phase-one simplex reported an unbounded ray");

        const Rational pivot = T[leave][enter];
        for (auto& v : T[leave]) v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rational f = T[i][enter];
            for (std::size_t j = 0; j <= total; ++j)
                if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= total; ++j)
                if (T[leave][j] != 0) cost[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    if (cost[total] != 0) return std::nullopt;
    RationalVector x(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < cols) x[basis[i]] = T[i][total];
    return x;
}

}  // namespace cbgit
