#pragma once

// JSON and CSV forms of partitions, rationals, class vectors, vertex lists and cone reports.
// Rationals are always exact strings; keys are emitted in sorted order.

#include "cbgit/cones.hpp"
#include "cbgit/divisors.hpp"
#include "cbgit/fcurves.hpp"
#include "cbgit/tableaux.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace cbgit::io {

using json = nlohmann::json;

inline json to_json(const FCurvePartition& p) {
    json out = json::array();
    for (const auto& b : p.blocks()) out.push_back(b);
    return out;
}

inline FCurvePartition fcurve_from_json(const json& j, int n) {
    if (!j.is_array() || j.size() != 4) throw invalid_input("an F-curve is an array of four blocks");
    std::array<Block, 4> blocks;
    for (std::size_t i = 0; i < 4; ++i) blocks[i] = j[i].get<Block>();
    return FCurvePartition::canonical_form(std::move(blocks), n);
}

inline json to_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

inline json to_json(const IntegerVector& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back(to_string(z));
    return out;
}

inline RationalVector rationals_from_json(const json& j) {
    if (!j.is_array()) throw invalid_input("expected an array of rational strings");
    RationalVector out;
    for (const auto& e : j) {
        if (!e.is_string()) throw invalid_input("rationals are serialized as strings");
        out.push_back(parse_rational(e.get<std::string>()));
    }
    return out;
}

inline json to_json(const DivisorClass& D) {
    json curves = json::array();
    for (const auto& p : fcurve_list(D.n)) curves.push_back(to_json(p));
    return json{{"n", D.n}, {"fcurves", std::move(curves)}, {"values", to_json(D.values)}};
}

inline DivisorClass class_from_json(const json& j) {
    DivisorClass D{j.at("n").get<int>(), rationals_from_json(j.at("values"))};
    const auto& curves = fcurve_list(D.n);
    if (D.values.size() != curves.size()) throw invalid_input("class vector length does not match the F-curve count");
    if (j.contains("fcurves")) {
        const auto& fc = j.at("fcurves");
        if (fc.size() != curves.size()) throw invalid_input("fcurve list length mismatch");
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (fcurve_from_json(fc[i], D.n) != curves[i]) throw invalid_input("fcurves are not in canonical order");
    }
    return D;
}

inline json vertices_to_json(const std::vector<RationalVector>& pts) {
    json out = json::array();
    for (const auto& x : pts) out.push_back(to_json(x));
    return out;
}

inline std::vector<RationalVector> vertices_from_json(const json& j) {
    std::vector<RationalVector> out;
    for (const auto& e : j) out.push_back(rationals_from_json(e));
    return out;
}

inline json to_json(const GeneratorSource& s) {
    if (const auto* L = std::get_if<Linearization>(&s)) return json{{"d", L->d}, {"x", to_json(L->x)}};
    const auto& w = std::get<WeightData>(s);
    return json{{"m", w.m}, {"c", w.c}};
}

inline json to_json(const RationalCone& cone) {
    json gens = json::array();
    for (const auto& g : cone.generators) gens.push_back(to_json(g));
    return json{{"generators", std::move(gens)}, {"extremal", cone.extremal_indices()}};
}

inline json to_json(const ConeReport& rep) {
    json out = to_json(rep.cone);
    json sources = json::array();
    for (const auto& per : rep.sources) {
        json list = json::array();
        for (const auto& s : per) list.push_back(to_json(s));
        sources.push_back(std::move(list));
    }
    out["n"] = rep.n;
    out["rank"] = rep.rank;
    out["sources"] = std::move(sources);
    return out;
}

inline json to_json(const SymmetricReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back(json{{"m", e.m}, {"j", e.j}, {"d", e.d}, {"nonzero", e.nonzero}, {"proportional", e.proportional}});
    json rays = json::array();
    for (const auto& r : rep.rays) rays.push_back(to_json(r));
    return json{{"n", rep.n},
                {"m_max", rep.m_max},
                {"entries", std::move(entries)},
                {"all_proportional", rep.all_proportional},
                {"gale_pairing", rep.gale_pairing},
                {"unit_weights_vanish", rep.unit_weights_vanish},
                {"rays", std::move(rays)},
                {"ray_levels", rep.ray_levels},
                {"ray_count", rep.rays.size()},
                {"expected_ray_count", rep.n / 2 - 1},
                {"ok", rep.ok()}};
}

inline json to_json(const Tableau& t) { return json{{"top", t.top}, {"bottom", t.bottom}}; }

/// "1 3|2|4 5|6": blocks separated by '|', entries by spaces.
inline std::string fcurve_csv_label(const FCurvePartition& p) {
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) s += '|';
        for (std::size_t j = 0; j < p.block(i).size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(p.block(i)[j]);
        }
    }
    return s;
}

inline std::string class_to_csv(const DivisorClass& D) {
    std::ostringstream out;
    out << "fcurve,value\n";
    const auto& curves = fcurve_list(D.n);
    for (std::size_t i = 0; i < curves.size(); ++i) out << fcurve_csv_label(curves[i]) << ',' << to_string(D.values[i]) << '\n';
    return out.str();
}

inline std::string vertices_to_csv(const std::vector<RationalVector>& pts) {
    std::ostringstream out;
    if (!pts.empty())
        for (std::size_t i = 0; i < pts.front().size(); ++i) out << (i ? ",x" : "x") << i + 1;
    out << '\n';
    for (const auto& x : pts) {
        for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << to_string(x[i]);
        out << '\n';
    }
    return out.str();
}

}  // namespace cbgit::io
