#pragma once

// Command-line front end. parse_and_dispatch is kept separate from main() so
// the test suite can drive it with in-memory streams.
//
// Exit codes: 0 success, 2 invalid input or usage, 3 unsupported size, 4 unwritable output.

#include "cbgit/cones.hpp"
#include "cbgit/divisors.hpp"
#include "cbgit/io.hpp"
#include "cbgit/parallel.hpp"
#include "cbgit/polyhedra.hpp"
#include "cbgit/tableaux.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cbgit::cli {

enum ExitCode : int { ok = 0, bad_input = 2, too_large = 3, unwritable = 4 };

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// Rethrows module validation errors tagged with the offending option.
template <class F>
auto for_option(const std::string& option, F&& f) {
    try {
        return f();
    } catch (const invalid_input& e) {
        throw invalid_input(option + ": " + e.what());
    }
}

inline RationalVector parse_rationals(const std::string& option, const std::string& text) {
    return for_option(option, [&] {
        RationalVector out;
        for (const auto& tok : split(text, ',')) out.push_back(parse_rational(tok));
        return out;
    });
}

inline std::vector<long> parse_integers(const std::string& option, const std::string& text) {
    return for_option(option, [&] {
        std::vector<long> out;
        for (const auto& q : parse_rationals(option, text)) {
            if (!is_integer(q)) throw invalid_input("expected integers, got " + to_string(q));
            out.push_back(to_long(q.get_num()));
        }
        return out;
    });
}

// "1 3|2|4 5|6" or "1,3|2|4,5|6".
inline FCurvePartition parse_fcurve(const std::string& option, const std::string& text, int n) {
    return for_option(option, [&] {
        auto parts = split(text, '|');
        if (parts.size() != 4) throw invalid_input("expected four blocks separated by '|'");
        std::array<Block, 4> blocks;
        for (std::size_t i = 0; i < 4; ++i)
            for (long v : parse_integers(option, parts[i])) blocks[i].push_back(static_cast<int>(v));
        return FCurvePartition::canonical_form(std::move(blocks), n);
    });
}

struct Emitted {
    std::string json_text;
    std::optional<std::string> csv_text;
};

inline Emitted json_only(const io::json& j) { return {j.dump(2) + "\n", std::nullopt}; }

}  // namespace detail

/// Writes the rendered report to `path` (or `out` when empty). Returns an exit code.
inline int write_report(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty() || path == "-") {
        out << text;
        return ok;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output path '" << path << "' for writing\n";
        return unwritable;
    }
    file << text;
    file.flush();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return unwritable;
    }
    return ok;
}

inline int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact conformal blocks and GIT divisor classes on M_{0,n}", "cbgit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output;
    std::string format = "json";
    unsigned threads = 0;
    app.add_option("-o,--output", output, "Write the report here instead of standard output");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "Worker threads (default: CBGIT_THREADS or hardware concurrency)");

    int n = 0, d = 0, g = 0;
    long m = 0, k = 1, m_max = 0;
    std::string weights, lin, fcurve, content, y, kind;

    auto* fcurves = app.add_subcommand("fcurves", "List the F-curve partitions for n points");
    fcurves->add_option("--n", n)->required();

    auto* cbc = app.add_subcommand("cb-class", "Conformal blocks class D^{sl_m}_{1,c}");
    cbc->add_option("--m", m)->required();
    cbc->add_option("--weights", weights, "Comma-separated c_1,...,c_n")->required();

    auto* gitc = app.add_subcommand("git-class", "GIT polarization class at a linearization");
    gitc->add_option("--d", d)->required();
    gitc->add_option("--x,--linearization", lin, "Comma-separated rationals in Delta(d+1,n)")->required();

    auto* deg = app.add_subcommand("degree", "Degree on one F-curve (give --m/--weights or --d/--x)");
    deg->add_option("--fcurve", fcurve, "Blocks separated by '|', e.g. 1,2|3|4|5")->required();
    deg->add_option("--m", m);
    deg->add_option("--weights", weights);
    deg->add_option("--d", d);
    deg->add_option("--x,--linearization", lin);

    auto* ident = app.add_subcommand("identity", "Check D^{sl_m}_{1,c} = (1/k) D^{sl_km}_{1,kc}");
    ident->add_option("--m", m)->required();
    ident->add_option("--weights", weights)->required();
    ident->add_option("--k", k)->required();

    auto* gal = app.add_subcommand("gale", "Gale transform of a linearization");
    gal->add_option("--d", d)->required();
    gal->add_option("--x,--linearization", lin)->required();

    auto* tab = app.add_subcommand("tableaux", "Semistandard tableaux and four-point degrees");
    tab->add_option("--content", content, "Integer content Y_1,...,Y_4");
    tab->add_option("--y", y, "Rational weights in Delta(2,4)");

    auto* vert = app.add_subcommand("vertices", "Vertices of the chamber decomposition of Delta(d+1,n)");
    vert->add_option("--d", d)->required();
    vert->add_option("--n", n)->required();

    auto* gcone = app.add_subcommand("git-cone", "Degree d GIT cone and its extremal rays");
    gcone->add_option("--d", d)->required();
    gcone->add_option("--n", n)->required();

    auto* ccone = app.add_subcommand("cb-cone", "Cone spanned by CB(A,1) and its extremal rays");
    ccone->add_option("--n", n)->required();

    auto* sym = app.add_subcommand("symmetric", "Census of symmetric conformal blocks rays");
    sym->add_option("--n", n)->required();
    sym->add_option("--m-max", m_max)->required();

    auto* lam = app.add_subcommand("lambda", "Hodge class pullbacks along hyperelliptic/trigonal maps");
    lam->add_option("--kind", kind)->required()->check(CLI::IsMember({"hyperelliptic", "trigonal"}));
    lam->add_option("--g", g)->required();

    if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "error: unknown command '" << args.front() << "'\n\n" << app.help();
        return bad_input;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return bad_input;
    }

    if (threads == 0) {
        if (const char* env = std::getenv("CBGIT_THREADS"); env && std::atoi(env) > 0)
            threads = static_cast<unsigned>(std::atoi(env));
        else
            threads = default_threads();
    }

    using io::json;
    auto weight_data = [&] {
        auto c = detail::parse_integers("--weights", weights);
        return detail::for_option("--weights", [&] { return WeightData::make(m, c); });
    };
    auto linearization = [&] {
        auto x = detail::parse_rationals("--x", lin);
        return detail::for_option("--x", [&] { return Linearization::make(d, std::move(x)); });
    };
    auto class_doc = [](const DivisorClass& D) { return detail::Emitted{io::to_json(D).dump(2) + "\n", io::class_to_csv(D)}; };

    try {
        detail::Emitted rep;
        if (*fcurves) {
            const auto list = detail::for_option("--n", [&] { return enumerate_fcurves(n); });
            json arr = json::array();
            std::string csv = "index,fcurve\n";
            for (std::size_t i = 0; i < list.size(); ++i) {
                arr.push_back(io::to_json(list[i]));
                csv += std::to_string(i) + "," + io::fcurve_csv_label(list[i]) + "\n";
            }
            rep = {arr.dump() + "\n", csv};
        } else if (*cbc) {
            rep = class_doc(cb_class(weight_data()));
        } else if (*gitc) {
            rep = class_doc(git_class(linearization()));
        } else if (*deg) {
            const bool cb_mode = !weights.empty();
            if (cb_mode == !lin.empty()) throw invalid_input("degree: give exactly one of --weights (with --m) or --x (with --d)");
            if (cb_mode) {
                const auto w = weight_data();
                const auto p = detail::parse_fcurve("--fcurve", fcurve, w.n());
                const auto ev = evaluate_blocks(p, to_rational(w.c), w.m);
                rep = detail::json_only(json{{"fcurve", io::to_json(p)},
                                             {"degree", std::to_string(cb_fcurve_degree(w, p))},
                                             {"residues", *ev.residues}});
            } else {
                const auto L = linearization();
                const auto p = detail::parse_fcurve("--fcurve", fcurve, L.n());
                const auto ev = evaluate_blocks(p, L.x);
                json floors = json::array();
                for (const auto& f : ev.floors) floors.push_back(to_string(f));
                rep = detail::json_only(json{{"fcurve", io::to_json(p)},
                                             {"degree", to_string(git_fcurve_degree(L, p))},
                                             {"block_sums", io::to_json(RationalVector(ev.block_sums.begin(), ev.block_sums.end()))},
                                             {"floors", floors},
                                             {"dists", io::to_json(RationalVector(ev.dists.begin(), ev.dists.end()))}});
            }
        } else if (*ident) {
            const auto w = weight_data();
            if (k < 1) throw invalid_input("--k: must be >= 1");
            const auto r = check_scaling_identity(w, k);
            json j{{"equal", r.equal}};
            if (!r.mismatches.empty()) j["mismatches"] = r.mismatches;
            rep = detail::json_only(j);
        } else if (*gal) {
            const auto G = detail::for_option("--d", [&] { return gale(linearization()); });
            rep = detail::json_only(json{{"d", G.d}, {"x", io::to_json(G.x)}});
        } else if (*tab) {
            if (content.empty() == y.empty()) throw invalid_input("tableaux: give exactly one of --content or --y");
            json j;
            std::array<int, 4> Y{};
            if (!content.empty()) {
                auto c = detail::parse_integers("--content", content);
                if (c.size() != 4) throw invalid_input("--content: expected four integers");
                for (std::size_t i = 0; i < 4; ++i) Y[i] = static_cast<int>(c[i]);
            } else {
                auto v = detail::parse_rationals("--y", y);
                if (v.size() != 4) throw invalid_input("--y: expected four rationals");
                std::array<Rational, 4> yy{v[0], v[1], v[2], v[3]};
                j["degree_bruteforce"] = to_string(detail::for_option("--y", [&] { return degree_bruteforce(yy); }));
                j["degree_closedform"] = to_string(degree_closedform(yy));
                Integer scale = 1;
                for (const auto& q : yy) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
                for (std::size_t i = 0; i < 4; ++i) Y[i] = static_cast<int>(to_long(Integer(yy[i] * scale)));
            }
            const auto list = detail::for_option("--content", [&] { return enumerate_tableaux(Y); });
            json arr = json::array();
            std::string csv = "top,bottom\n";
            for (const auto& t : list) {
                arr.push_back(io::to_json(t));
                auto row = [](const std::vector<int>& r) {
                    std::string s;
                    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
                    return s;
                };
                csv += row(t.top) + "," + row(t.bottom) + "\n";
            }
            j["content"] = Y;
            j["count"] = list.size();
            j["tableaux"] = std::move(arr);
            rep = {j.dump(2) + "\n", csv};
        } else if (*vert) {
            const auto pts = chamber_vertices(d, n);
            rep = {io::vertices_to_json(pts).dump() + "\n", io::vertices_to_csv(pts)};
        } else if (*gcone) {
            rep = detail::json_only(io::to_json(git_cone(d, n, threads)));
        } else if (*ccone) {
            if (n < 4) throw invalid_input("--n: need n >= 4");
            if (n / 2 - 1 >= 2 && n > chamber_vertex_cap(2))
                throw unsupported_size("cb-cone: n = " + std::to_string(n) + " exceeds the supported cap " + std::to_string(chamber_vertex_cap(2)));
            rep = detail::json_only(io::to_json(cb_cone(n, threads)));
        } else if (*sym) {
            rep = detail::json_only(io::to_json(symmetric_report(n, m_max)));
        } else if (*lam) {
            rep = class_doc(special_lambda_class(kind == "trigonal" ? LambdaKind::trigonal : LambdaKind::hyperelliptic, g));
        }

        if (format == "csv" && !rep.csv_text) throw invalid_input("--format: csv is not available for this command");
        return write_report(format == "csv" ? *rep.csv_text : rep.json_text, output, out, err);
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const unsupported_size& e) {
        err << "error: " << e.what() << "\n";
        return too_large;
    }
}

}  // namespace cbgit::cli
