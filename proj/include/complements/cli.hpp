// Subcommand dispatcher for the `complements` executable.
//
// Exit status: 0 on success, 1 when a golden comparison fails, 2 on malformed
// input or usage errors.

#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "complements/reproduce.hpp"

#ifndef COMPLEMENTS_DATA_DIR
#define COMPLEMENTS_DATA_DIR "data/v1"
#endif

namespace complements::cli {

using io::json;

enum ExitCode : int { ok = 0, golden_failure = 1, bad_input = 2 };

namespace detail {

/// Human form of a report: one "key: value" line per field, strings bare,
/// nested values as compact JSON.
inline void print_human(std::ostream& out, const json& report) {
    for (const auto& [key, value] : report.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

inline json read_input(const std::string& path, std::istream& in) {
    try {
        if (path.empty() || path == "-") return json::parse(in);
        std::ifstream file(path);
        if (!file) throw io::schema_error("cannot open input file " + path);
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw io::schema_error(std::string("input is not valid JSON: ") + e.what());
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical complements on curves and surfaces", "complements"};
    app.require_subcommand(1);

    std::string input;
    bool as_json = false;
    std::int64_t bound = default_index_bound;
    std::int64_t max_den = 60;
    int max_comp = 4;
    unsigned workers = 0;
    std::int64_t n = 1;
    bool n_given = false;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("--in", input, "input JSON document (default: standard input)");
        sub->add_flag("--json", as_json, "emit the report as JSON");
    };
    auto with_index = [&](CLI::App* sub) {
        sub->add_option("-n,--index", n, "complement index")->check(CLI::PositiveNumber)->each([&](const std::string&) {
            n_given = true;
        });
    };

    auto* curve = app.add_subcommand("curve-complement", "decide whether a curve pair has an n-complement");
    with_input(curve);
    with_index(curve);
    auto* min_index = app.add_subcommand("min-index", "smallest complementary index of a curve pair");
    with_input(min_index);
    min_index->add_option("--bound", bound, "search bound")->check(CLI::PositiveNumber);
    auto* table = app.add_subcommand("multiplier-table", "multipliers m of the (n+1)m-complements");
    table->add_flag("--json", as_json, "emit the report as JSON");
    with_index(table);
    table->add_option("--max-den", max_den, "largest denominator")->check(CLI::Range(2, 1000));
    table->add_option("--max-comp", max_comp, "largest number of points")->check(CLI::Range(1, 8));
    table->add_option("--workers", workers, "worker threads (0: available parallelism)");
    auto* pd = app.add_subcommand("pd-check", "hyperplanes in general position on P^d");
    with_input(pd);
    with_index(pd);
    auto* inv = app.add_subcommand("invariant-complement", "Galois-invariant complements on P^1");
    with_input(inv);
    with_index(inv);

    auto* crepant = app.add_subcommand("crepant", "crepant pull-back of a dual graph");
    with_input(crepant);
    auto* mld_cmd = app.add_subcommand("mld", "minimal log discrepancy and log canonical status");
    with_input(mld_cmd);
    auto* delta = app.add_subcommand("delta", "number of divisors with log discrepancy <= 1/7");
    with_input(delta);
    auto* duval = app.add_subcommand("classify-duval", "ADE type of each exceptional component");
    with_input(duval);
    auto* contractible = app.add_subcommand("contractible", "negative definiteness of the exceptional curves");
    with_input(contractible);

    auto* fiber = app.add_subcommand("classify-fiber", "Kodaira type, index and different of a fibre model");
    with_input(fiber);
    auto* label = app.add_subcommand("type-label", "complement type label");
    with_input(label);
    auto* toric = app.add_subcommand("toric-check", "defect rho - (sum b - 2)");
    with_input(toric);
    std::string case_name;
    auto* verify = app.add_subcommand("verify-exceptional", "check the claims of a named exceptional configuration");
    verify->add_option("case", case_name, "A21..A26, I21 or I22")->required();
    with_input(verify);
    auto* rxb = app.add_subcommand("rxb", "invariants of the incidence complex R(X,B)");
    with_input(rxb);

    std::string data_dir = COMPLEMENTS_DATA_DIR;
    bool skip_enumeration = false;
    auto* reproduce = app.add_subcommand("reproduce-tables", "run every golden comparison");
    reproduce->add_flag("--json", as_json, "emit the matrix as JSON");
    reproduce->add_option("--data", data_dir, "fixture directory");
    reproduce->add_flag("--skip-enumeration", skip_enumeration, "skip the multiplier-table enumeration");
    reproduce->add_option("--max-den", max_den, "largest denominator")->check(CLI::Range(2, 1000));
    reproduce->add_option("--max-comp", max_comp, "largest number of points")->check(CLI::Range(1, 8));
    reproduce->add_option("--workers", workers, "worker threads (0: available parallelism)");

    std::vector<const char*> argv{"complements"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    auto emit = [&](const json& report, const std::string& human = {}) {
        if (as_json)
            out << report.dump(2) << '\n';
        else if (!human.empty())
            out << human << '\n';
        else
            detail::print_human(out, report);
    };

    try {
        if (curve->parsed()) {
            auto c = io::curve_from_json(detail::read_input(input, in));
            json degrees = json::array();
            for (std::size_t i = 0; i < c.size(); ++i) degrees.push_back(complements::detail::component_degree(c, i, n).str());
            emit({{"n", n}, {"complement", complement_exists(c, n)}, {"degrees", degrees}});
        } else if (min_index->parsed()) {
            auto c = io::curve_from_json(detail::read_input(input, in));
            auto r = curve_report(c, bound);
            emit(r, complements::detail::json_scalar(r["min_index"]));
        } else if (table->parsed()) {
            std::vector<std::int64_t> ns;
            if (n_given)
                ns.push_back(n);
            else
                ns = {1, 2, 3, 4, 6};
            json report = json::array();
            std::ostringstream human;
            for (auto k : ns) {
                auto t = multiplier_table({k, max_comp, max_den, workers});
                json witnesses = json::object();
                for (const auto& [m, b] : t.witnesses) {
                    json bs = json::array();
                    for (const auto& v : b) bs.push_back(v.str());
                    witnesses[std::to_string(m)] = bs;
                }
                report.push_back({{"n", k},
                                  {"multipliers", t.multipliers},
                                  {"witnesses", witnesses},
                                  {"search_depth", t.search_depth},
                                  {"representatives", t.representatives}});
                human << "n=" << k << ": m in " << set_str(t.multipliers) << '\n';
            }
            std::string h = human.str();
            h.pop_back();
            emit(report, h);
        } else if (pd->parsed()) {
            auto doc = detail::read_input(input, in);
            auto d = io::detail::get<std::int64_t>(doc, "d", "pd input");
            auto b = io::boundary_from_json(io::detail::field(doc, "boundary", "pd input"));
            emit({{"d", d}, {"n", n}, {"complement", pd_complement_exists(d, b, n)}, {"ec", pd_ec_check(d, b)}});
        } else if (inv->parsed()) {
            auto doc = detail::read_input(input, in);
            if (!n_given && doc.is_object() && doc.contains("n")) n = doc["n"].get<std::int64_t>();
            auto r = orbit_report(io::orbits_from_json(doc), n);
            r["n"] = n;
            emit(r);
        } else if (crepant->parsed()) {
            auto g = io::graph_from_json(detail::read_input(input, in));
            auto cr = crepant_discrepancies(g);
            json rows = json::array();
            for (std::size_t t = 0; t < cr.exceptional.size(); ++t)
                rows.push_back({{"id", g.curve(cr.exceptional[t]).id}, {"d", cr.d[t].str()}, {"a", cr.a[t].str()}});
            std::ostringstream human;
            for (std::size_t t = 0; t < cr.exceptional.size(); ++t)
                human << g.curve(cr.exceptional[t]).id << ": d = " << cr.d[t] << ", a = " << cr.a[t] << '\n';
            human << "sub_boundary: " << (cr.sub_boundary ? "true" : "false");
            emit({{"exceptional", rows}, {"sub_boundary", cr.sub_boundary}}, human.str());
        } else if (mld_cmd->parsed()) {
            auto g = io::graph_from_json(detail::read_input(input, in));
            auto m = mld(g);
            emit({{"mld", m ? m->str() : "not-lc"}, {"status", log_canonical_status(g).str()}});
        } else if (delta->parsed()) {
            auto g = io::graph_from_json(detail::read_input(input, in));
            auto d = delta_invariant(g).str();
            emit({{"delta", d}}, d);
        } else if (duval->parsed()) {
            auto g = io::graph_from_json(detail::read_input(input, in));
            json comps = json::array();
            for (const auto& c : classify_singularities(g))
                comps.push_back({{"type", c.str()}, {"exceptional", c.exceptional()}});
            std::string human;
            for (const auto& c : comps) human += (human.empty() ? "" : "\n") + c["type"].get<std::string>();
            emit({{"components", comps}}, human.empty() ? "no exceptional curves" : human);
        } else if (contractible->parsed()) {
            auto g = io::graph_from_json(detail::read_input(input, in));
            bool c = is_contractible(g);
            emit({{"contractible", c}}, c ? "true" : "false");
        } else if (fiber->parsed()) {
            auto r = fiber_report(io::fiber_from_json(detail::read_input(input, in)));
            std::string diff;
            std::map<std::string, int> counts;
            for (const auto& v : r["different"]) ++counts[v.get<std::string>()];
            for (const auto& [v, k] : counts) diff += (diff.empty() ? "" : " + ") + std::to_string(k) + "x(" + v + ")";
            emit(r, r["type"].get<std::string>() + ", index " + std::to_string(r["index"].get<int>()) + ", different " +
                        (diff.empty() ? "0" : diff));
        } else if (label->parsed()) {
            auto t = type_label(io::datum_from_json(detail::read_input(input, in)));
            emit({{"label", t.str()}, {"exceptional_family", t.exceptional_family()}}, t.str());
        } else if (toric->parsed()) {
            auto r = toric_report(detail::read_input(input, in));
            if (!r["consistent"].get<bool>())
                throw invalid_input("negative defect " + r["defect"].get<std::string>() +
                                    ": rho >= sum b - 2 fails, so the input is not a surface pair");
            emit(r);
        } else if (verify->parsed()) {
            auto g = io::graph_from_json(detail::read_input(input, in));
            auto report = verify_exceptional_config(case_name, g);
            std::ostringstream human;
            for (const auto& c : report.checks)
                human << (c.pass ? "PASS " : "FAIL ") << c.claim << ": expected " << c.expected << ", got " << c.actual
                      << '\n';
            human << report.name << (report.passed() ? ": all claims hold" : ": some claims fail");
            emit(io::to_json(report), human.str());
            return report.passed() ? ok : golden_failure;
        } else if (rxb->parsed()) {
            auto space = build_complex(io::strata_from_json(detail::read_input(input, in)));
            emit(rxb_report(space));
        } else if (reproduce->parsed()) {
            ReproduceOptions opt{data_dir, !skip_enumeration, {1, max_comp, max_den, workers}};
            auto rows = reproduce_tables(opt);
            bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
            json report = json::array();
            std::ostringstream human;
            for (const auto& r : rows) {
                report.push_back({{"group", r.group},
                                  {"item", r.item},
                                  {"expected", r.expected},
                                  {"actual", r.actual},
                                  {"pass", r.pass}});
                human << (r.pass ? "PASS " : "FAIL ") << r.group << " / " << r.item << ": expected " << r.expected
                      << ", got " << r.actual << '\n';
            }
            human << rows.size() << " comparisons, " << (all ? "all pass" : "failures present");
            emit(report, human.str());
            return all ? ok : golden_failure;
        }
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return bad_input;
    }
    return ok;
}

}  // namespace complements::cli
