#pragma once

// Invariant-theory oracle for the polarization degree of (P^1)^4 // SL_2:
// SL_2-invariant sections of O(Y_1,...,Y_4) have a basis of semistandard
// 2 x (|Y|/2) tableaux in which i appears Y_i times, and the quotient is P^1,
// so deg O(1) = (number of sections) - 1 after rescaling.

#include "cbgit/rational.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace cbgit {

struct Tableau {
    std::vector<int> top;
    std::vector<int> bottom;

    std::size_t width() const noexcept { return top.size(); }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

/// All semistandard 2-row tableaux with content Y, sorted by (top row, bottom row).
inline std::vector<Tableau> enumerate_tableaux(const std::array<int, 4>& content) {
    int total = 0;
    for (int y : content) {
        if (y < 0) throw invalid_input("tableau content must be nonnegative");
        total += y;
    }
    if (total % 2 != 0) throw invalid_input("tableau content must have even total, got " + std::to_string(total));
    const int width = total / 2;

    std::vector<Tableau> out;
    std::array<int, 4> left = content;
    Tableau cur;
    cur.top.reserve(static_cast<std::size_t>(width));
    cur.bottom.reserve(static_cast<std::size_t>(width));

    // Columns are (a, b) with a < b; both rows weakly increase.
    auto fill = [&](auto&& self, int col) -> void {
        if (col == width) {
            out.push_back(cur);
            return;
        }
        const int a0 = col ? cur.top.back() : 1;
        const int b0 = col ? cur.bottom.back() : 1;
        for (int a = a0; a <= 4; ++a) {
            if (!left[a - 1]) continue;
            for (int b = std::max(a + 1, b0); b <= 4; ++b) {
                if (!left[b - 1]) continue;
                --left[a - 1];
                --left[b - 1];
                cur.top.push_back(a);
                cur.bottom.push_back(b);
                self(self, col + 1);
                cur.top.pop_back();
                cur.bottom.pop_back();
                ++left[a - 1];
                ++left[b - 1];
            }
        }
    };
    fill(fill, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline void check_delta24(const std::array<Rational, 4>& y) {
    Rational sum = 0;
    for (const auto& yi : y) {
        if (yi < 0 || yi > 1) throw invalid_input("weights must lie in [0,1]");
        sum += yi;
    }
    if (sum != 2) throw invalid_input("weights must sum to 2, got " + to_string(sum));
}

/// Degree by counting invariant sections at the smallest integral rescaling.
inline Rational degree_bruteforce(const std::array<Rational, 4>& y) {
    check_delta24(y);
    Integer scale = 1;
    for (const auto& yi : y) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), yi.get_den_mpz_t());
    std::array<int, 4> content{};
    for (std::size_t i = 0; i < 4; ++i) content[i] = static_cast<int>(to_long(Integer(y[i] * scale)));
    const auto count = enumerate_tableaux(content).size();
    if (count <= 1) return 0;
    Rational deg(Integer(static_cast<unsigned long>(count - 1)), scale);
    deg.canonicalize();
    return deg;
}

/// min{y_1,...,y_4, 1-y_1,...,1-y_4}
inline Rational degree_closedform(const std::array<Rational, 4>& y) {
    check_delta24(y);
    Rational best = 1;
    for (const auto& yi : y) {
        best = std::min(best, yi);
        best = std::min(best, Rational(1 - yi));
    }
    return best;
}

}  // namespace cbgit
