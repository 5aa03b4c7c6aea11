#pragma once

// GIT cones from chamber vertices, the cone spanned by CB(A,1), and the
// census of symmetric conformal blocks rays.

#include "cbgit/divisors.hpp"
#include "cbgit/parallel.hpp"
#include "cbgit/polyhedra.hpp"

#include <map>
#include <variant>
#include <vector>

namespace cbgit {

using GeneratorSource = std::variant<Linearization, WeightData>;

struct ConeReport {
    int n = 4;
    std::vector<std::vector<GeneratorSource>> sources;  // parallel to cone.generators
    RationalCone cone;
    std::size_t rank = 0;
};

namespace detail {

inline RationalCone extremal_rays_parallel(const std::vector<IntegerVector>& rays, unsigned threads) {
    RationalCone cone;
    if (rays.empty()) return cone;
    cone.dimension = rays.front().size();
    cone.generators = rays;
    std::vector<RationalVector> as_rational;
    for (const auto& r : rays) as_rational.push_back(to_rational(r));
    std::vector<char> flags(rays.size(), 0);
    parallel_for(rays.size(), threads, [&](std::size_t i) {
        std::vector<RationalVector> others;
        for (std::size_t j = 0; j < as_rational.size(); ++j)
            if (j != i) others.push_back(as_rational[j]);
        flags[i] = !cone_contains(others, as_rational[i]).contained;
    });
    cone.extremal.assign(flags.begin(), flags.end());
    return cone;
}

inline ConeReport assemble(int n, const std::map<IntegerVector, std::vector<GeneratorSource>>& grouped, unsigned threads) {
    ConeReport rep;
    rep.n = n;
    std::vector<IntegerVector> rays;
    for (const auto& [ray, src] : grouped) {
        rays.push_back(ray);
        rep.sources.push_back(src);
    }
    rep.cone = extremal_rays_parallel(rays, threads);
    if (rep.cone.dimension == 0) rep.cone.dimension = fcurve_list(n).size();
    if (!rays.empty()) {
        std::vector<RationalVector> as_rational;
        for (const auto& r : rays) as_rational.push_back(to_rational(r));
        rep.rank = rank(as_rational);
    }
    return rep;
}

inline void collect_git_generators(int d, int n, unsigned threads, std::map<IntegerVector, std::vector<GeneratorSource>>& grouped) {
    const auto vertices = chamber_vertices(d, n);
    std::vector<DivisorClass> classes(vertices.size());
    parallel_for(vertices.size(), threads, [&](std::size_t i) { classes[i] = git_class(Linearization{d, vertices[i]}); });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (classes[i].is_zero()) continue;
        grouped[primitive(classes[i].values)].push_back(Linearization{d, vertices[i]});
    }
}

}  // namespace detail

/// Cone spanned by the GIT classes at the chamber vertices of Delta(d+1, n); zero classes are dropped.
inline ConeReport git_cone(int d, int n, unsigned threads = default_threads()) {
    std::map<IntegerVector, std::vector<GeneratorSource>> grouped;
    detail::collect_git_generators(d, n, threads, grouped);
    return detail::assemble(n, grouped, threads);
}

/// Cone spanned by CB(A,1): union of the GIT cones for 1 <= d <= floor(n/2) - 1
/// (the remaining degrees are their Gale duals).
inline ConeReport cb_cone(int n, unsigned threads = default_threads()) {
    if (n < 4) throw invalid_input("cb_cone: need n >= 4");
    std::map<IntegerVector, std::vector<GeneratorSource>> grouped;
    for (int d = 1; d <= n / 2 - 1; ++d) detail::collect_git_generators(d, n, threads, grouped);
    return detail::assemble(n, grouped, threads);
}

struct SymmetricEntry {
    long m = 2;
    long j = 1;
    int d = 0;                   // nj/m - 1
    bool nonzero = false;
    bool proportional = false;   // equals j/(d+1) * D^{sl_n}_{1,(d+1,...,d+1)}
};

struct SymmetricReport {
    int n = 5;
    long m_max = 5;
    std::vector<SymmetricEntry> entries;
    bool all_proportional = true;
    bool gale_pairing = true;           // D^{sl_n}_{(k^n)} == D^{sl_n}_{((n-k)^n)} for all k
    bool unit_weights_vanish = true;    // D^{sl_n}_{(1^n)} == 0
    std::vector<IntegerVector> rays;    // distinct nonzero primitive rays, sorted
    std::vector<long> ray_levels;       // k with D^{sl_n}_{(k^n)} on each ray, smallest k
    bool rays_pairwise_distinct = true;

    bool ok() const {
        return all_proportional && gale_pairing && unit_weights_vanish && rays_pairwise_distinct &&
               rays.size() == static_cast<std::size_t>(n / 2 - 1);
    }
};

inline DivisorClass symmetric_class(long m, long j, int n) {
    return cb_class(WeightData::make(m, std::vector<long>(static_cast<std::size_t>(n), j)));
}

inline SymmetricReport symmetric_report(int n, long m_max) {
    if (n < 5) throw invalid_input("symmetric_report: need n >= 5");
    if (m_max < n) throw invalid_input("symmetric_report: need m_max >= n");
    SymmetricReport rep;
    rep.n = n;
    rep.m_max = m_max;

    std::vector<DivisorClass> base(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) base[static_cast<std::size_t>(k)] = symmetric_class(n, k, n);
    for (long k = 1; k < n; ++k)
        if (base[static_cast<std::size_t>(k)] != base[static_cast<std::size_t>(n - k)]) rep.gale_pairing = false;
    rep.unit_weights_vanish = base[1].is_zero();

    std::map<IntegerVector, long> rays;
    for (long m = 2; m <= m_max; ++m) {
        for (long j = 1; j < m; ++j) {
            if ((n * j) % m != 0) continue;
            const long level = n * j / m;  // d + 1
            if (level < 1 || level > n - 2) continue;
            SymmetricEntry e{m, j, static_cast<int>(level - 1), false, false};
            const auto cls = symmetric_class(m, j, n);
            e.nonzero = !cls.is_zero();
            e.proportional = cls == base[static_cast<std::size_t>(level)].scaled(make_rational(j, level));
            if (!e.proportional) rep.all_proportional = false;
            if (e.nonzero) {
                auto ray = primitive(cls.values);
                auto [it, fresh] = rays.emplace(std::move(ray), std::min(level, n - level));
                if (!fresh) it->second = std::min(it->second, std::min(level, n - level));
            }
            rep.entries.push_back(e);
        }
    }
    for (const auto& [ray, k] : rays) {
        rep.rays.push_back(ray);
        rep.ray_levels.push_back(k);
    }
    // Distinct primitive rays are non-proportional; confirm with pairwise rank.
    for (std::size_t a = 0; a < rep.rays.size(); ++a)
        for (std::size_t b = a + 1; b < rep.rays.size(); ++b)
            if (rank({to_rational(rep.rays[a]), to_rational(rep.rays[b])}) != 2) rep.rays_pairwise_distinct = false;
    return rep;
}

}  // namespace cbgit
