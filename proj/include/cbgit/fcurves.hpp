#pragma once

// F-curve partitions: set partitions of {1,...,n} into four nonempty blocks.
// Indices are 1-based. The canonical form sorts each block and orders the
// blocks by their minimum element; the F-curve list for a given n is sorted
// lexicographically on that representation and indexes every class vector.

#include "cbgit/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace cbgit {

using Block = std::vector<int>;
using Permutation = std::vector<int>;  // perm[i-1] is the image of i

class FCurvePartition {
public:
    /// Validates and canonicalizes; throws invalid_input on a non-partition.
    static FCurvePartition canonical_form(std::array<Block, 4> blocks, int n);

    int n() const noexcept { return n_; }
    const std::array<Block, 4>& blocks() const noexcept { return blocks_; }
    const Block& block(std::size_t i) const { return blocks_.at(i); }

    /// Block sizes sorted decreasingly, e.g. {3,1,1,1}.
    std::array<int, 4> shape() const {
        std::array<int, 4> s{};
        for (std::size_t i = 0; i < 4; ++i) s[i] = static_cast<int>(blocks_[i].size());
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < 4; ++i) {
            if (i) out += ',';
            out += '{';
            for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                if (j) out += ',';
                out += std::to_string(blocks_[i][j]);
            }
            out += '}';
        }
        return out + ")";
    }

    friend bool operator==(const FCurvePartition&, const FCurvePartition&) = default;
    friend auto operator<=>(const FCurvePartition& a, const FCurvePartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    FCurvePartition(int n, std::array<Block, 4> blocks) : n_(n), blocks_(std::move(blocks)) {}

    int n_ = 0;
    std::array<Block, 4> blocks_;
};

inline FCurvePartition FCurvePartition::canonical_form(std::array<Block, 4> blocks, int n) {
    if (n < 4) throw invalid_input("an F-curve needs n >= 4 marked points, got n = " + std::to_string(n));
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (auto& b : blocks) {
        if (b.empty()) throw invalid_input("invalid partition: empty block");
        for (int j : b) {
            if (j < 1 || j > n) throw invalid_input("invalid partition: index " + std::to_string(j) + " outside 1.." + std::to_string(n));
            if (seen[static_cast<std::size_t>(j)]++) throw invalid_input("invalid partition: index " + std::to_string(j) + " repeated");
        }
        std::sort(b.begin(), b.end());
    }
    for (int j = 1; j <= n; ++j)
        if (!seen[static_cast<std::size_t>(j)]) throw invalid_input("invalid partition: index " + std::to_string(j) + " missing");
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return FCurvePartition(n, std::move(blocks));
}

/// All four-block partitions of {1,...,n} in canonical order.
/// Restricted growth strings a_1..a_n (a_1 = 0, a_j <= 1 + max(a_1..a_{j-1})) capped at four labels;
/// labels are assigned in order of first appearance, so each string already yields blocks ordered by minimum.
inline std::vector<FCurvePartition> enumerate_fcurves(int n) {
    if (n < 4) throw invalid_input("enumerate_fcurves requires n >= 4, got n = " + std::to_string(n));
    std::vector<FCurvePartition> out;
    std::vector<int> label(static_cast<std::size_t>(n), 0);

    auto emit = [&] {
        std::array<Block, 4> blocks;
        for (int j = 0; j < n; ++j) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(j + 1);
        out.push_back(FCurvePartition::canonical_form(std::move(blocks), n));
    };
    auto recurse = [&](auto&& self, int pos, int used) -> void {
        if (n - pos < 4 - used) return;  // not enough points left to open the remaining blocks
        if (pos == n) {
            if (used == 4) emit();
            return;
        }
        for (int b = 0; b < std::min(used + 1, 4); ++b) {
            label[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(used, b + 1));
        }
    };
    recurse(recurse, 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline void check_permutation(const Permutation& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) throw invalid_input("permutation has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || hit[static_cast<std::size_t>(v)]) throw invalid_input("not a bijection of {1..n}");
        hit[static_cast<std::size_t>(v)] = 1;
    }
}

/// Image of p under the relabeling i -> sigma(i).
inline FCurvePartition permute(const FCurvePartition& p, const Permutation& sigma) {
    check_permutation(sigma, p.n());
    std::array<Block, 4> img;
    for (std::size_t i = 0; i < 4; ++i)
        for (int j : p.block(i)) img[i].push_back(sigma[static_cast<std::size_t>(j - 1)]);
    return FCurvePartition::canonical_form(std::move(img), p.n());
}

/// Image under the forgetful map dropping point i; absent when {i} is a singleton block
/// (that F-curve is contracted).
inline std::optional<FCurvePartition> forget(const FCurvePartition& p, int i) {
    const int n = p.n();
    if (n == 4) throw invalid_input("cannot forget a point when n = 4");
    if (i < 1 || i > n) throw invalid_input("forget index out of range");
    std::array<Block, 4> out;
    for (std::size_t b = 0; b < 4; ++b) {
        const auto& blk = p.block(b);
        if (blk.size() == 1 && blk.front() == i) return std::nullopt;
        for (int j : blk)
            if (j != i) out[b].push_back(j > i ? j - 1 : j);
    }
    return FCurvePartition::canonical_form(std::move(out), n - 1);
}

/// Shared, immutable copy of enumerate_fcurves(n).
inline const std::vector<FCurvePartition>& fcurve_list(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<FCurvePartition>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_fcurves(n)).first;
    return it->second;
}

/// Position of p in enumerate_fcurves(p.n()), by binary search on the canonical order.
inline std::size_t fcurve_index(const std::vector<FCurvePartition>& list, const FCurvePartition& p) {
    auto it = std::lower_bound(list.begin(), list.end(), p);
    if (it == list.end() || *it != p) throw invalid_input("partition not in F-curve list");
    return static_cast<std::size_t>(it - list.begin());
}

struct FCurveEvaluation {
    std::array<Rational, 4> block_sums;
    std::array<Integer, 4> floors;
    std::array<Rational, 4> dists;
    std::optional<std::array<long, 4>> residues;
};

inline FCurveEvaluation evaluate_blocks(const FCurvePartition& p, const RationalVector& v,
                                        std::optional<long> modulus = std::nullopt) {
    if (static_cast<int>(v.size()) != p.n())
        throw invalid_input("vector length " + std::to_string(v.size()) + " does not match n = " + std::to_string(p.n()));
    if (modulus) {
        if (*modulus <= 0) throw invalid_input("modulus must be positive");
        for (const auto& x : v)
            if (!is_integer(x)) throw invalid_input("residues need integer entries");
    }
    FCurveEvaluation ev;
    for (std::size_t i = 0; i < 4; ++i) {
        Rational s = 0;
        for (int j : p.block(i)) s += v[static_cast<std::size_t>(j - 1)];
        ev.floors[i] = floor_of(s);
        ev.dists[i] = dist_to_integers(s);
        ev.block_sums[i] = std::move(s);
    }
    if (modulus) {
        std::array<long, 4> res{};
        for (std::size_t i = 0; i < 4; ++i) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), ev.block_sums[i].get_num_mpz_t(), static_cast<unsigned long>(*modulus));
            res[i] = r.get_si();
        }
        ev.residues = res;
    }
    return ev;
}

}  // namespace cbgit
