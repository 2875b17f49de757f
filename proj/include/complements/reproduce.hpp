// Golden comparisons behind `complements reproduce-tables`: the multiplier
// tables, the fibre indices, and every fixture under the data directory that
// carries an "expected" block.

#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "complements/json_io.hpp"
#include "complements/multiplier_table.hpp"

namespace complements {

struct TableRow {
    std::string group;
    std::string item;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReproduceOptions {
    std::filesystem::path data_dir;
    bool enumerate = true;
    MultiplierTableOptions table;
};

/// Published multiplier sets for n = 1, 2, 3, 4, 6.
inline const std::map<std::int64_t, std::set<std::int64_t>>& published_multipliers() {
    static const std::map<std::int64_t, std::set<std::int64_t>> t{
        {1, {1, 2, 3, 4, 5, 6, 7, 8, 9, 11}},
        {2, {1, 2, 3, 4, 5, 6, 7, 8, 10}},
        {3, {1, 3, 4, 5, 6}},
        {4, {2, 3, 4, 5, 6, 8}},
        {6, {3, 4, 5, 6, 8}},
    };
    return t;
}

inline std::string set_str(const std::set<std::int64_t>& s) {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
    return "{" + out + "}";
}

/// The eight Kodaira types, with mI represented by 1I_0.
inline std::vector<KodairaType> kodaira_types() {
    using T = KodairaType::Tag;
    return {KodairaType::multiplicative(1, 0), KodairaType::istar(0), {T::II, 1, 0},  {T::IIstar, 1, 0},
            {T::III, 1, 0},                    {T::IIIstar, 1, 0},     {T::IV, 1, 0}, {T::IVstar, 1, 0}};
}

namespace detail {

inline io::json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw invalid_input("cannot open " + p.string());
    try {
        return io::json::parse(in);
    } catch (const io::json::parse_error& e) {
        throw io::schema_error(p.filename().string() + ": " + e.what());
    }
}

inline std::vector<std::filesystem::path> fixtures(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string json_scalar(const io::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

/// Compares each key of `expected` with the same key of `actual`.
inline void compare(std::vector<TableRow>& rows, const std::string& group, const std::string& item,
                    const io::json& expected, const io::json& actual) {
    for (const auto& [key, want] : expected.items()) {
        std::string got = actual.contains(key) ? json_scalar(actual[key]) : "<missing>";
        rows.push_back({group, item + " " + key, json_scalar(want), got, json_scalar(want) == got});
    }
}

}  // namespace detail

// Per-fixture evaluators, shared with the CLI subcommands.

inline io::json curve_report(const CurveConfig& c, std::int64_t bound) {
    auto idx = minimal_complement_index(c, bound);
    io::json r = {{"min_index", idx ? io::json(*idx) : io::json("none")}};
    if (idx) r["regularity"] = to_string(regular_or_exceptional(*idx));
    return r;
}

inline io::json graph_report(const DualGraph& g) {
    io::json r;
    bool has_exceptional = !g.exceptional_vertices().empty();
    if (has_exceptional) r["contractible"] = is_contractible(g);
    CrepantResult cr;
    try {
        cr = crepant_discrepancies(g);
    } catch (const singular_configuration&) {
        // A degenerate intersection matrix (a fibre, not a contraction):
        // nothing downstream of the crepant solve is defined.
        r["crepant"] = "singular";
        return r;
    }
    io::json d = io::json::object();
    for (std::size_t t = 0; t < cr.exceptional.size(); ++t) d[g.curve(cr.exceptional[t]).id] = cr.d[t].str();
    r["crepant"] = d;
    r["sub_boundary"] = cr.sub_boundary;
    auto status = log_canonical_status(g);
    r["status"] = status.str();
    auto m = mld(g);
    r["mld"] = m ? m->str() : "not-lc";
    if (m) r["delta"] = delta_invariant(g).str();
    io::json classes = io::json::array();
    for (const auto& c : classify_singularities(g)) classes.push_back(c.str());
    r["singularities"] = classes;
    return r;
}

inline io::json fiber_report(const FiberModel& f) {
    auto t = classify_fiber(f);
    io::json diff = io::json::array();
    for (const auto& v : fiber_different(t).values()) diff.push_back(v.str());
    return {{"type", t.str()},
            {"index", complement_index(t)},
            {"different", diff},
            {"resolved_graph", io::to_json(resolved_graph(normalize_fiber(f)))}};
}

inline io::json rxb_report(const SimplicialSpace& c) {
    auto eg = euler_genus(c);
    io::json r = {{"reg", reg_str(c)}, {"chi", eg.chi}, {"q", eg.q}, {"components", connected_components(c)}};
    if (c.dimension() <= 2) r["manifold"] = is_manifold_with_boundary(c);
    return r;
}

inline io::json toric_report(const io::json& doc) {
    auto rho = io::detail::get<std::int64_t>(doc, "rho", "toric input");
    auto b = io::boundary_from_json(io::detail::field(doc, "boundary", "toric input"));
    auto c = toric_check(rho, b);
    return {{"defect", c.defect.str()}, {"formally_toric", c.formally_toric}, {"consistent", c.consistent}};
}

inline io::json orbit_report(const OrbitBoundary& o, std::int64_t n) {
    return {{"invariant", invariant_complement_exists(o, n)},
            {"invariant_at_most", invariant_complement_exists(o, n, DegreeConvention::AtMost)},
            {"plain", complement_exists(CurveConfig::rational(expand_orbits(o)), n)}};
}

inline std::vector<TableRow> reproduce_tables(const ReproduceOptions& opt) {
    std::vector<TableRow> rows;

    if (opt.enumerate) {
        for (const auto& [n, want] : published_multipliers()) {
            auto o = opt.table;
            o.n = n;
            auto got = multiplier_table(o).multipliers;
            rows.push_back({"multiplier-table", "n=" + std::to_string(n), set_str(want), set_str(got), got == want});
        }
    }

    for (const auto& t : kodaira_types()) {
        auto idx = minimal_complement_index(fiber_curve(t), default_index_bound);
        std::string got = idx ? std::to_string(*idx) : "none";
        rows.push_back({"fiber-index", t.str(), std::to_string(complement_index(t)), got,
                        got == std::to_string(complement_index(t))});
    }

    const auto& dir = opt.data_dir;
    auto guarded = [&](const std::string& group, const std::filesystem::path& p, auto body) {
        try {
            body();
        } catch (const std::exception& e) {
            rows.push_back({group, p.filename().string(), "evaluates", e.what(), false});
        }
    };

    for (const auto& p : detail::fixtures(dir / "curves"))
        guarded("curves", p, [&] {
            auto doc = detail::read_json_file(p);
            detail::compare(rows, "curves", p.stem().string(), doc.at("expected"),
                            curve_report(io::curve_from_json(doc), default_index_bound));
        });
    for (const auto& p : detail::fixtures(dir / "orbits"))
        guarded("orbits", p, [&] {
            auto doc = detail::read_json_file(p);
            detail::compare(rows, "orbits", p.stem().string(), doc.at("expected"),
                            orbit_report(io::orbits_from_json(doc), doc.at("n").get<std::int64_t>()));
        });
    for (const auto& p : detail::fixtures(dir / "graphs"))
        guarded("graphs", p, [&] {
            auto doc = detail::read_json_file(p);
            detail::compare(rows, "graphs", p.stem().string(), doc.at("expected"), graph_report(io::graph_from_json(doc)));
        });
    for (const auto& p : detail::fixtures(dir / "fibers"))
        guarded("fibers", p, [&] {
            auto doc = detail::read_json_file(p);
            detail::compare(rows, "fibers", p.stem().string(), doc.at("expected"), fiber_report(io::fiber_from_json(doc)));
        });
    for (const auto& p : detail::fixtures(dir / "toric"))
        guarded("toric", p, [&] {
            auto doc = detail::read_json_file(p);
            detail::compare(rows, "toric", p.stem().string(), doc.at("expected"), toric_report(doc));
        });
    for (const auto& p : detail::fixtures(dir / "rxb"))
        guarded("rxb", p, [&] {
            auto doc = detail::read_json_file(p);
            detail::compare(rows, "rxb", p.stem().string(), doc.at("expected"),
                            rxb_report(build_complex(io::strata_from_json(doc))));
        });
    for (const auto& p : detail::fixtures(dir / "exceptional"))
        guarded("exceptional", p, [&] {
            auto doc = detail::read_json_file(p);
            auto name = doc.at("case").get<std::string>();
            bool expect_pass = doc.value("expect_pass", true);
            auto report = verify_exceptional_config(name, io::graph_from_json(doc));
            std::string failing;
            for (const auto& c : report.failures()) failing += (failing.empty() ? "" : "; ") + c.claim;
            rows.push_back({"exceptional", p.stem().string(), expect_pass ? "all claims hold" : "some claim fails",
                            report.passed() ? "all claims hold" : "fails: " + failing,
                            report.passed() == expect_pass});
        });
    return rows;
}

}  // namespace complements
