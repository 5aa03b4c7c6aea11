#pragma once

// Exact polyhedral routines: the wall arrangement of the hypersimplex,
// vertices of its chamber decomposition, cone membership and extremal rays.

#include "cbgit/lp.hpp"
#include "cbgit/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace cbgit {

/// Hyperplane sum_{i in subset} x_i = level. Facets of the unit box are the
/// singleton subsets with level 0 or 1 and carry is_facet.
struct Wall {
    std::vector<int> subset;
    int level = 0;
    bool is_facet = false;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Interior walls (one representative per complement pair, the one containing 1,
/// levels 1..d) followed by the 2n box facets.
inline std::vector<Wall> walls(int d, int n) {
    if (n < 4 || n > 30) throw invalid_input("walls: n out of range");
    if (d < 1 || d > n - 3) throw invalid_input("walls: need 1 <= d <= n-3, got d = " + std::to_string(d));
    std::vector<Wall> out;
    const unsigned long full = (1UL << n) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        if (!(mask & 1UL)) continue;
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1UL) subset.push_back(i + 1);
        for (int k = 1; k <= d; ++k) out.push_back(Wall{subset, k, false});
    }
    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        return std::tie(a.subset, a.level) < std::tie(b.subset, b.level);
    });
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k <= 1; ++k) out.push_back(Wall{{i}, k, true});
    return out;
}

/// Positive integer multiple of v with coprime entries.
inline IntegerVector primitive(const RationalVector& v) {
    Integer lcm = 1;
    bool nonzero = false;
    for (const auto& q : v) {
        if (q != 0) nonzero = true;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    if (!nonzero) throw invalid_input("primitive: zero vector");
    IntegerVector out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = q.get_num() * (lcm / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    for (auto& z : out) z /= g;
    return out;
}

inline RationalVector to_rational(const IntegerVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto& z : v) out.emplace_back(z);
    return out;
}

/// Rank over Q by fraction-free (Bareiss) elimination on denominator-cleared rows.
inline std::size_t rank(const std::vector<RationalVector>& vectors) {
    if (vectors.empty()) throw invalid_input("rank: empty list");
    const std::size_t cols = vectors.front().size();
    std::vector<IntegerVector> M;
    for (const auto& v : vectors) {
        if (v.size() != cols) throw invalid_input("rank: dimension mismatch");
        bool nonzero = std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
        if (nonzero) M.push_back(primitive(v));
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t piv = r;
        while (piv < M.size() && M[piv][c] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[r]);
        for (std::size_t i = r + 1; i < M.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                M[i][j] = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        ++r;
    }
    return r;
}

struct ConeMembership {
    bool contained = false;
    RationalVector coefficients;  // nonnegative, sum_j coefficients[j] * generators[j] == v
};

inline ConeMembership cone_contains(const std::vector<RationalVector>& generators, const RationalVector& v) {
    const std::size_t dim = v.size();
    for (const auto& g : generators)
        if (g.size() != dim) throw invalid_input("cone_contains: dimension mismatch");
    RationalMatrix A(dim, RationalVector(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) A[i][j] = generators[j][i];
    auto sol = find_nonnegative_solution(A, v);
    if (!sol) return {};
    return {true, std::move(*sol)};
}

struct RationalCone {
    std::size_t dimension = 0;
    std::vector<IntegerVector> generators;
    std::vector<bool> extremal;

    std::vector<IntegerVector> extremal_generators() const {
        std::vector<IntegerVector> out;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (extremal[i]) out.push_back(generators[i]);
        return out;
    }
    std::vector<std::size_t> extremal_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (extremal[i]) out.push_back(i);
        return out;
    }
};

/// Normalizes to primitive integer rays (sorted, deduplicated, zeros dropped) and flags
/// each ray that is not a nonnegative combination of the others.
inline RationalCone extremal_rays(const std::vector<RationalVector>& generators) {
    RationalCone cone;
    if (generators.empty()) return cone;
    cone.dimension = generators.front().size();
    std::set<IntegerVector> rays;
    for (const auto& g : generators) {
        if (g.size() != cone.dimension) throw invalid_input("extremal_rays: dimension mismatch");
        if (std::any_of(g.begin(), g.end(), [](const Rational& q) { return q != 0; })) rays.insert(primitive(g));
    }
    cone.generators.assign(rays.begin(), rays.end());
    std::vector<RationalVector> as_rational;
    for (const auto& r : cone.generators) as_rational.push_back(to_rational(r));
    cone.extremal.resize(cone.generators.size());
    for (std::size_t i = 0; i < as_rational.size(); ++i) {
        std::vector<RationalVector> others;
        for (std::size_t j = 0; j < as_rational.size(); ++j)
            if (j != i) others.push_back(as_rational[j]);
        cone.extremal[i] = !cone_contains(others, as_rational[i]).contained;
    }
    return cone;
}

/// Largest n supported by chamber_vertices for a given d.
inline int chamber_vertex_cap(int d) { return d == 1 ? 7 : 6; }

namespace detail {

// Affine subspace of Q^n held as the reduced row echelon form of [A | b].
struct AffineFlat {
    RationalMatrix rows;
    std::vector<std::size_t> pivots;

    std::string key() const {
        std::string s;
        for (const auto& r : rows) {
            for (const auto& q : r) {
                s += q.get_str();
                s += ',';
            }
            s += ';';
        }
        return s;
    }
};

enum class Incidence { contains, disjoint, transversal };

// Reduces the augmented row against the flat; the remainder classifies the hyperplane.
inline Incidence reduce(const AffineFlat& F, RationalVector& row) {
    for (std::size_t r = 0; r < F.rows.size(); ++r) {
        const std::size_t p = F.pivots[r];
        if (row[p] == 0) continue;
        const Rational f = row[p];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (F.rows[r][j] != 0) row[j] -= f * F.rows[r][j];
    }
    const std::size_t n = row.size() - 1;
    for (std::size_t j = 0; j < n; ++j)
        if (row[j] != 0) return Incidence::transversal;
    return row[n] == 0 ? Incidence::contains : Incidence::disjoint;
}

// Adds a reduced, transversal row and restores reduced row echelon form.
inline AffineFlat extend(const AffineFlat& F, RationalVector row) {
    const std::size_t n = row.size() - 1;
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    const Rational lead = row[p];
    for (auto& q : row) q /= lead;
    AffineFlat G;
    for (std::size_t r = 0; r < F.rows.size(); ++r) {
        RationalVector old = F.rows[r];
        if (old[p] != 0) {
            const Rational f = old[p];
            for (std::size_t j = 0; j <= n; ++j) old[j] -= f * row[j];
        }
        G.rows.push_back(std::move(old));
        G.pivots.push_back(F.pivots[r]);
    }
    auto pos = std::lower_bound(G.pivots.begin(), G.pivots.end(), p);
    const auto at = static_cast<std::ptrdiff_t>(pos - G.pivots.begin());
    G.pivots.insert(pos, p);
    G.rows.insert(G.rows.begin() + at, std::move(row));
    return G;
}

// Does the flat meet {0 <= x <= 1, x_1 >= x_2 >= ... >= x_n}? Variables: x, box slacks, order slacks.
inline bool meets_sorted_box(const AffineFlat& F, std::size_t n) {
    const std::size_t vars = n + n + (n - 1);
    RationalMatrix A;
    RationalVector b;
    for (const auto& r : F.rows) {
        RationalVector row(vars, Rational(0));
        for (std::size_t j = 0; j < n; ++j) row[j] = r[j];
        A.push_back(std::move(row));
        b.push_back(r[n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector row(vars, Rational(0));
        row[i] = 1;
        row[n + i] = 1;
        A.push_back(std::move(row));
        b.emplace_back(1);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalVector row(vars, Rational(0));
        row[i] = 1;
        row[i + 1] = -1;
        row[2 * n + i] = -1;
        A.push_back(std::move(row));
        b.emplace_back(0);
    }
    return find_nonnegative_solution(A, b).has_value();
}

}  // namespace detail

/// Vertices of the chamber decomposition of Delta(d+1, n) cut out by the walls and box facets.
/// Flats of the arrangement are grown one hyperplane at a time, keeping only those meeting the
/// sorted part of the hypersimplex; the resulting sorted vertices are expanded over S_n.
inline std::vector<RationalVector> chamber_vertices(int d, int n) {
    if (n < 4 || d < 1 || d > n - 3) throw invalid_input("chamber_vertices: need 1 <= d <= n-3");
    if (n > chamber_vertex_cap(d))
        throw unsupported_size("chamber_vertices: n = " + std::to_string(n) + " exceeds the supported cap " +
                               std::to_string(chamber_vertex_cap(d)) + " for d = " + std::to_string(d));
    const auto un = static_cast<std::size_t>(n);

    // Distinct hyperplanes as augmented rows.
    std::set<RationalVector> hyperplanes;
    for (const auto& w : walls(d, n)) {
        RationalVector row(un + 1, Rational(0));
        for (int i : w.subset) row[static_cast<std::size_t>(i - 1)] = 1;
        row[un] = w.level;
        hyperplanes.insert(std::move(row));
    }

    detail::AffineFlat start;
    start.rows.push_back(RationalVector(un + 1, Rational(1)));
    start.rows.front()[un] = d + 1;
    start.pivots.push_back(0);

    std::map<std::string, detail::AffineFlat> level{{start.key(), start}};
    for (std::size_t r = 1; r < un; ++r) {
        std::map<std::string, detail::AffineFlat> next;
        std::unordered_set<std::string> rejected;
        for (const auto& [_, flat] : level) {
            for (const auto& h : hyperplanes) {
                RationalVector row = h;
                if (detail::reduce(flat, row) != detail::Incidence::transversal) continue;
                auto child = detail::extend(flat, std::move(row));
                auto key = child.key();
                if (next.count(key) || rejected.count(key)) continue;
                if (detail::meets_sorted_box(child, un))
                    next.emplace(std::move(key), std::move(child));
                else
                    rejected.insert(std::move(key));
            }
        }
        level = std::move(next);
    }

    std::set<RationalVector> points;
    for (const auto& [_, flat] : level) {
        RationalVector x(un);
        for (std::size_t r = 0; r < un; ++r) x[flat.pivots[r]] = flat.rows[r][un];
        std::sort(x.begin(), x.end());
        do points.insert(x);
        while (std::next_permutation(x.begin(), x.end()));
    }
    return {points.begin(), points.end()};
}

}  // namespace cbgit
