#pragma once

// Type A, level one conformal blocks degrees on F-curves, the matching GIT
// polarization degrees on quasi-Veronese quotients, and the class-level
// identities relating them.

#include "cbgit/fcurves.hpp"
#include "cbgit/rational.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cbgit {

/// Conformal blocks datum for sl_m at level one with weights omega_{c_1},...,omega_{c_n}.
/// c_i = 0 and c_i = m both denote the trivial weight.
struct WeightData {
    long m = 2;
    std::vector<long> c;

    int n() const noexcept { return static_cast<int>(c.size()); }

    static WeightData make(long m, std::vector<long> c) {
        if (m < 2) throw invalid_input("m must be >= 2, got " + std::to_string(m));
        if (c.size() < 4) throw invalid_input("need at least 4 weights, got " + std::to_string(c.size()));
        for (long ci : c)
            if (ci < 0 || ci > m) throw invalid_input("weight index " + std::to_string(ci) + " outside 0.." + std::to_string(m));
        return WeightData{m, std::move(c)};
    }

    long total() const { return std::accumulate(c.begin(), c.end(), 0L); }
    friend bool operator==(const WeightData&, const WeightData&) = default;
};

/// A point of the hypersimplex Delta(d+1, n), i.e. a GIT linearization for V_{d,n}.
struct Linearization {
    int d = 1;
    RationalVector x;

    int n() const noexcept { return static_cast<int>(x.size()); }

    static Linearization make(int d, RationalVector x) {
        const int n = static_cast<int>(x.size());
        if (n < 4) throw invalid_input("need at least 4 coordinates, got " + std::to_string(n));
        if (d < 1 || d > n - 3) throw invalid_input("d must satisfy 1 <= d <= n-3, got d = " + std::to_string(d));
        Rational sum = 0;
        for (const auto& xi : x) {
            if (xi < 0 || xi > 1) throw invalid_input("coordinate " + to_string(xi) + " outside [0,1]");
            sum += xi;
        }
        if (sum != d + 1) throw invalid_input("coordinates sum to " + to_string(sum) + ", expected d+1 = " + std::to_string(d + 1));
        return Linearization{d, std::move(x)};
    }

    friend bool operator==(const Linearization&, const Linearization&) = default;
};

/// Numerical divisor class as intersection numbers with the canonical F-curve list.
struct DivisorClass {
    int n = 4;
    RationalVector values;

    static DivisorClass zero(int n) { return DivisorClass{n, RationalVector(fcurve_list(n).size(), Rational(0))}; }

    bool is_zero() const {
        for (const auto& v : values)
            if (v != 0) return false;
        return true;
    }

    DivisorClass scaled(const Rational& s) const {
        DivisorClass out{n, values};
        for (auto& v : out.values) v *= s;
        return out;
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// d with sum(c) = m(d+1) and 1 <= d <= n-3, or absent when the bundle is trivial.
inline std::optional<int> nontrivial_level(const WeightData& w) {
    const long total = w.total();
    if (total % w.m != 0) return std::nullopt;
    const long d = total / w.m - 1;
    if (d < 1 || d > w.n() - 3) return std::nullopt;
    return static_cast<int>(d);
}

inline RationalVector to_rational(const std::vector<long>& c) {
    RationalVector v;
    v.reserve(c.size());
    for (long ci : c) v.emplace_back(ci);
    return v;
}

/// Fakhruddin's degree: with nu_i the block sums mod m, zero unless sum(nu) = 2m,
/// otherwise min(nu_min, m - nu_max).
inline long cb_fcurve_degree(const WeightData& w, const FCurvePartition& p) {
    if (p.n() != w.n()) throw invalid_input("F-curve and weights disagree on n");
    if (!nontrivial_level(w)) return 0;
    const auto ev = evaluate_blocks(p, to_rational(w.c), w.m);
    const auto& nu = *ev.residues;
    if (nu[0] + nu[1] + nu[2] + nu[3] != 2 * w.m) return 0;
    const long lo = *std::min_element(nu.begin(), nu.end());
    const long hi = *std::max_element(nu.begin(), nu.end());
    return std::min(lo, w.m - hi);
}

/// Degree of the pulled-back GIT polarization: min dist(x_{n_i}, Z) when the block-sum floors add to d-1, else 0.
inline Rational git_fcurve_degree(const Linearization& L, const FCurvePartition& p) {
    if (p.n() != L.n()) throw invalid_input("F-curve and linearization disagree on n");
    const auto ev = evaluate_blocks(p, L.x);
    Integer floor_sum = ev.floors[0] + ev.floors[1] + ev.floors[2] + ev.floors[3];
    if (floor_sum != L.d - 1) return 0;
    return *std::min_element(ev.dists.begin(), ev.dists.end());
}

inline DivisorClass cb_class(const WeightData& w) {
    const auto& curves = fcurve_list(w.n());
    DivisorClass out{w.n(), {}};
    out.values.reserve(curves.size());
    const bool trivial = !nontrivial_level(w);
    for (const auto& p : curves) out.values.emplace_back(trivial ? 0L : cb_fcurve_degree(w, p));
    return out;
}

inline DivisorClass git_class(const Linearization& L) {
    const auto& curves = fcurve_list(L.n());
    DivisorClass out{L.n(), {}};
    out.values.reserve(curves.size());
    for (const auto& p : curves) out.values.push_back(git_fcurve_degree(L, p));
    return out;
}

/// The linearization c/m in Delta(d+1, n) matched with w; requires a nontrivial level.
inline Linearization linearization_of(const WeightData& w) {
    const auto d = nontrivial_level(w);
    if (!d) throw invalid_input("weight datum has no nontrivial level");
    RationalVector x;
    for (long ci : w.c) x.push_back(make_rational(ci, w.m));
    return Linearization{*d, std::move(x)};
}

/// Gale transform x -> (1 - x_1, ..., 1 - x_n), landing in Delta(n-d-1, n).
inline Linearization gale(const Linearization& L) {
    const int dual = L.n() - L.d - 2;
    if (dual < 1) throw invalid_input("Gale dual degree n-d-2 = " + std::to_string(dual) + " is < 1");
    RationalVector x;
    x.reserve(L.x.size());
    for (const auto& xi : L.x) x.push_back(1 - xi);
    return Linearization{dual, std::move(x)};
}

struct IdentityReport {
    bool equal = true;
    std::vector<std::string> mismatches;  // "F-curve: lhs vs rhs"
};

/// Compares D^{sl_m}_{1,c} with (1/k) D^{sl_{km}}_{1,kc} on every F-curve.
inline IdentityReport check_scaling_identity(const WeightData& w, long k) {
    if (k < 1) throw invalid_input("k must be >= 1");
    WeightData big{w.m * k, w.c};
    for (auto& ci : big.c) ci *= k;
    const auto lhs = cb_class(w);
    const auto rhs = cb_class(big).scaled(Rational(1, k));
    IdentityReport rep;
    const auto& curves = fcurve_list(w.n());
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (lhs.values[i] != rhs.values[i]) {
            rep.equal = false;
            rep.mismatches.push_back(curves[i].to_string() + ": " + to_string(lhs.values[i]) + " vs " + to_string(rhs.values[i]));
        }
    return rep;
}

enum class LambdaKind { hyperelliptic, trigonal };

/// Pullback of the Hodge class along the hyperelliptic (n = 2g+2) or cyclic trigonal (n = g+2) map.
inline DivisorClass special_lambda_class(LambdaKind kind, int g) {
    if (g < 2) throw invalid_input("genus must be >= 2");
    if (kind == LambdaKind::hyperelliptic) {
        const int n = 2 * g + 2;
        return cb_class(WeightData::make(2, std::vector<long>(static_cast<std::size_t>(n), 1))).scaled(Rational(1, 2));
    }
    if ((g + 2) % 3 != 0) throw invalid_input("trigonal class needs 3 | g+2, got g = " + std::to_string(g));
    const int n = g + 2;
    return cb_class(WeightData::make(n, std::vector<long>(static_cast<std::size_t>(n), n / 3))).scaled(Rational(2, 3));
}

/// Class vector of the relabeled divisor: entry at p moves to sigma(p).
inline DivisorClass permute_class(const DivisorClass& D, const Permutation& sigma) {
    const auto& curves = fcurve_list(D.n);
    DivisorClass out{D.n, RationalVector(curves.size())};
    for (std::size_t i = 0; i < curves.size(); ++i) out.values[fcurve_index(curves, permute(curves[i], sigma))] = D.values[i];
    return out;
}

}  // namespace cbgit
