// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every comparison is exact rational equality; each criterion also has a wall-clock budget.

#include "cbgit/cones.hpp"
#include "cbgit/divisors.hpp"
#include "cbgit/polyhedra.hpp"
#include "cbgit/tableaux.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace cbgit;
using cbgit::testing::for_each_vector;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1. cb degree = m * git degree at x = c/m on every F-curve.
Outcome cb_git_cross_oracle() {
    long data = 0, curves = 0;
    for (int n : {5, 6})
        for (long m = 2; m <= 6; ++m) {
            bool ok = true;
            std::string where;
            for_each_vector(n, 1, m - 1, [&](const std::vector<long>& c) {
                auto w = WeightData::make(m, c);
                if (!ok || !nontrivial_level(w)) return;
                ++data;
                auto L = linearization_of(w);
                for (const auto& p : fcurve_list(n)) {
                    ++curves;
                    if (Rational(cb_fcurve_degree(w, p)) != git_fcurve_degree(L, p) * m) {
                        ok = false;
                        where = "m=" + std::to_string(m) + " at " + p.to_string();
                    }
                }
            });
            if (!ok) return fail(where);
        }
    return {true, std::to_string(data) + " weight data, " + std::to_string(curves) + " F-curve checks"};
}

// 2. tableaux count vs closed form.
Outcome tableaux_oracle() {
    long checked = 0;
    for (int total = 2; total <= 24; total += 2) {
        const int half = total / 2;
        for (int a = 0; a <= half; ++a)
            for (int b = 0; b <= half; ++b)
                for (int c = 0; c <= half; ++c) {
                    const int e = total - a - b - c;
                    if (e < 0 || e > half) continue;
                    std::array<Rational, 4> y{make_rational(a, half), make_rational(b, half), make_rational(c, half), make_rational(e, half)};
                    const auto count = enumerate_tableaux({a, b, c, e}).size();
                    const Rational at_half = count <= 1 ? Rational(0) : make_rational(static_cast<long>(count) - 1, half);
                    const auto closed = degree_closedform(y);
                    if (degree_bruteforce(y) != closed || at_half != closed)
                        return fail("content " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(e));
                    ++checked;
                }
    }
    std::mt19937 rng(2024);
    int random_points = 0;
    while (random_points < 500) {
        const long N = 1 + static_cast<long>(rng() % 20);
        std::array<long, 4> a{};
        long s = 0;
        for (auto& v : a) s += (v = static_cast<long>(rng() % static_cast<unsigned long>(N + 1)));
        if (s != 2 * N) continue;
        std::array<Rational, 4> y{make_rational(a[0], N), make_rational(a[1], N), make_rational(a[2], N), make_rational(a[3], N)};
        if (degree_bruteforce(y) != degree_closedform(y)) return fail("random point " + to_string(y[0]) + "," + to_string(y[1]) + "," + to_string(y[2]) + "," + to_string(y[3]));
        ++random_points;
    }
    return {true, std::to_string(checked) + " contents, " + std::to_string(random_points) + " random points"};
}

// 3. D^{sl_m}_{1,c} = (1/k) D^{sl_km}_{1,kc}.
Outcome scaling_identity() {
    long checks = 0;
    for (int n : {5, 6})
        for (long m = 2; m <= 4; ++m) {
            std::string bad;
            for_each_vector(n, 0, m, [&](const std::vector<long>& c) {
                if (!bad.empty()) return;
                auto w = WeightData::make(m, c);
                for (long k = 1; k <= 4; ++k) {
                    ++checks;
                    if (!check_scaling_identity(w, k).equal) bad = "m=" + std::to_string(m) + " k=" + std::to_string(k);
                }
            });
            if (!bad.empty()) return fail(bad);
        }
    return {true, std::to_string(checks) + " (w, k) pairs"};
}

// 4. Gale invariance of GIT classes; gale is an involution.
Outcome gale_duality() {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 5 + trial % 3;
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 3));
        auto L = cbgit::testing::random_linearization(d, n, 1 + static_cast<long>(rng() % 12), rng);
        auto G = gale(L);
        if (gale(G) != L) return fail("gale is not an involution at trial " + std::to_string(trial));
        if (git_class(L) != git_class(G)) return fail("class changed under Gale at trial " + std::to_string(trial));
    }
    return {true, "500 random linearizations"};
}

// 5. Duality c -> m - c and propagation of vacua.
Outcome duality_and_propagation() {
    long dual_checks = 0, prop_checks = 0;
    for (int n : {5, 6})
        for (long m = 2; m <= 4; ++m) {
            std::string bad;
            for_each_vector(n, 0, m, [&](const std::vector<long>& c) {
                if (!bad.empty()) return;
                auto w = WeightData::make(m, c);
                std::vector<long> dual(c.size());
                for (std::size_t i = 0; i < c.size(); ++i) dual[i] = m - c[i];
                ++dual_checks;
                if (cb_class(w) != cb_class(WeightData::make(m, dual))) bad = "duality, m=" + std::to_string(m);
                for (int i = 1; i <= n; ++i) {
                    const long ci = c[static_cast<std::size_t>(i - 1)];
                    if (ci != 0 && ci != m) continue;
                    std::vector<long> rest;
                    for (int j = 1; j <= n; ++j)
                        if (j != i) rest.push_back(c[static_cast<std::size_t>(j - 1)]);
                    auto wr = WeightData::make(m, rest);
                    ++prop_checks;
                    for (const auto& p : fcurve_list(n)) {
                        auto img = forget(p, i);
                        if (cb_fcurve_degree(w, p) != (img ? cb_fcurve_degree(wr, *img) : 0)) bad = "propagation at " + p.to_string();
                    }
                }
            });
            if (!bad.empty()) return fail(bad);
        }
    return {true, std::to_string(dual_checks) + " duality, " + std::to_string(prop_checks) + " propagation checks"};
}

// 6. floor(n/2) - 1 symmetric rays, proportionality factor j/(d+1), D^{sl_n}_{(1^n)} = 0.
Outcome symmetric_census() {
    std::string detail;
    for (int n : {6, 7, 8}) {
        auto rep = symmetric_report(n, 2L * n);
        if (!rep.all_proportional) return fail("proportionality failed at n=" + std::to_string(n));
        if (!rep.unit_weights_vanish) return fail("unit weights nonzero at n=" + std::to_string(n));
        if (!rep.gale_pairing) return fail("Gale pairing failed at n=" + std::to_string(n));
        if (!rep.rays_pairwise_distinct) return fail("rays not distinct at n=" + std::to_string(n));
        if (rep.rays.size() != static_cast<std::size_t>(n / 2 - 1))
            return fail("n=" + std::to_string(n) + ": " + std::to_string(rep.rays.size()) + " rays");
        detail += "n=" + std::to_string(n) + ":" + std::to_string(rep.rays.size()) + " ";
    }
    return {true, detail + "rays"};
}

// 7. Span of nonzero cb_class(2, w), w in {0,1}^n, has dimension 2^{n-1} - C(n,2) - 1.
Outcome full_dimensionality() {
    std::string detail;
    for (int n : {5, 6}) {
        std::vector<RationalVector> rows;
        for_each_vector(n, 0, 1, [&](const std::vector<long>& c) {
            auto D = cb_class(WeightData::make(2, c));
            if (!D.is_zero()) rows.push_back(D.values);
        });
        const long expected = (1L << (n - 1)) - n * (n - 1) / 2 - 1;
        const auto r = static_cast<long>(rank(rows));
        if (r != expected) return fail("n=" + std::to_string(n) + ": rank " + std::to_string(r) + " vs " + std::to_string(expected));
        detail += "n=" + std::to_string(n) + " rank " + std::to_string(r) + " ";
    }
    return {true, detail};
}

bool stable_under_permutations(const std::vector<RationalVector>& pts) {
    std::set<RationalVector> all(pts.begin(), pts.end());
    for (auto x : pts) {
        std::sort(x.begin(), x.end());
        do
            if (!all.count(x)) return false;
        while (std::next_permutation(x.begin(), x.end()));
    }
    return true;
}

// 8. chamber_vertices sanity.
Outcome vertex_enumeration() {
    const Rational h(1, 2);
    auto four = chamber_vertices(1, 4);
    std::set<RationalVector> expected{RationalVector(4, h)};
    RationalVector x{0, 0, 1, 1};
    do expected.insert(x);
    while (std::next_permutation(x.begin(), x.end()));
    if (std::set<RationalVector>(four.begin(), four.end()) != expected || four.size() != 7) return fail("(1,4) vertex set");
    std::string detail = "(1,4):7 ";
    for (auto [d, n] : {std::pair{1, 5}, {1, 6}, {2, 6}}) {
        auto pts = chamber_vertices(d, n);
        auto dual = chamber_vertices(n - d - 2, n);
        if (!stable_under_permutations(pts)) return fail("not S_n-stable at d=" + std::to_string(d) + " n=" + std::to_string(n));
        std::set<RationalVector> image;
        for (const auto& p : pts) {
            RationalVector y;
            for (const auto& q : p) y.push_back(1 - q);
            image.insert(y);
        }
        if (image != std::set<RationalVector>(dual.begin(), dual.end()))
            return fail("Gale mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n));
        detail += "(" + std::to_string(d) + "," + std::to_string(n) + "):" + std::to_string(pts.size()) + " ";
    }
    return {true, detail};
}

// 9. Every conformal blocks class at n = 5 lies in cb_cone(5); extremal set is stable and spanning.
Outcome cone_consistency() {
    auto rep = cb_cone(5);
    std::vector<RationalVector> ext;
    for (const auto& g : rep.cone.extremal_generators()) ext.push_back(to_rational(g));
    long members = 0;
    for (long m = 2; m <= 6; ++m) {
        bool ok = true;
        for_each_vector(5, 0, m, [&](const std::vector<long>& c) {
            if (!ok) return;
            auto D = cb_class(WeightData::make(m, c));
            ok = cone_contains(ext, D.values).contained;
            ++members;
        });
        if (!ok) return fail("a class with m=" + std::to_string(m) + " is outside the cone");
    }
    auto again = extremal_rays(ext);
    if (again.generators != rep.cone.extremal_generators() || again.extremal_indices().size() != ext.size())
        return fail("extremal_rays is not idempotent");
    for (const auto& g : rep.cone.generators)
        if (!cone_contains(ext, to_rational(g)).contained) return fail("a generator is outside the extremal cone");
    return {true, std::to_string(members) + " classes in a cone with " + std::to_string(ext.size()) + " extremal rays of " +
                      std::to_string(rep.cone.generators.size())};
}

// 10. Hodge pullbacks.
Outcome special_classes() {
    if (special_lambda_class(LambdaKind::hyperelliptic, 2) != cb_class(WeightData::make(2, {1, 1, 1, 1, 1, 1})).scaled(Rational(1, 2)))
        return fail("hyperelliptic g=2");
    if (special_lambda_class(LambdaKind::trigonal, 4) != cb_class(WeightData::make(6, {2, 2, 2, 2, 2, 2})).scaled(Rational(2, 3)))
        return fail("trigonal g=4");
    return {true, "hyperelliptic g=2, trigonal g=4"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "CB/GIT cross-oracle", 120, cb_git_cross_oracle},
        {2, "tableaux oracle", 60, tableaux_oracle},
        {3, "scaling identity", 120, scaling_identity},
        {4, "Gale duality", 60, gale_duality},
        {5, "duality and propagation", 60, duality_and_propagation},
        {6, "symmetric-ray census", 120, symmetric_census},
        {7, "full-dimensionality", 10, full_dimensionality},
        {8, "vertex enumeration", 300, vertex_enumeration},
        {9, "cone consistency", 300, cone_consistency},
        {10, "special classes", 10, special_classes},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.budget_seconds) o = fail("over budget " + std::to_string(c.budget_seconds) + "s (" + o.detail + ")");
        if (!o.pass) ++failures;
        std::printf("[%s] %2d %-26s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
