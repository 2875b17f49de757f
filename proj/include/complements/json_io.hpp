// JSON readers for every input document and writers for the reports.
// Rationals travel as "p/q" strings (integers may also be given as numbers).

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "complements/complement_types.hpp"
#include "complements/curve_complements.hpp"
#include "complements/dual_graph.hpp"
#include "complements/fiber.hpp"
#include "complements/simplicial.hpp"

namespace complements::io {

using nlohmann::json;

/// Malformed document: wrong shape, missing field, bad value.
class schema_error : public invalid_input {
public:
    using invalid_input::invalid_input;
};

inline constexpr const char* schema_version = "v1";

namespace detail {

inline const json& field(const json& j, const char* key, const char* where) {
    if (!j.is_object()) throw schema_error(std::string(where) + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(std::string(where) + ": missing field \"" + key + "\"");
    return *it;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw schema_error(std::string("field \"") + key + "\" has the wrong type");
    }
}

template <typename T>
T get(const json& j, const char* key, const char* where) {
    const json& v = field(j, key, where);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw schema_error(std::string(where) + ": field \"" + key + "\" has the wrong type");
    }
}

inline const json& array_field(const json& j, const char* key, const char* where) {
    const json& v = field(j, key, where);
    if (!v.is_array()) throw schema_error(std::string(where) + ": \"" + key + "\" must be an array");
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalars

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw schema_error("rationals are written as \"p/q\" strings");
}

inline Multiplicity multiplicity_from_json(const json& j) { return Multiplicity(rational_from_json(j)); }

// ---------------------------------------------------------------------------
// Boundaries and curves

/// [{label?, mult}] or ["p/q", ...].
inline Boundary boundary_from_json(const json& j) {
    if (!j.is_array()) throw schema_error("boundary must be an array");
    Boundary b;
    for (const auto& e : j) {
        if (e.is_object()) {
            auto m = multiplicity_from_json(detail::field(e, "mult", "boundary entry"));
            if (e.contains("label"))
                b.add(detail::get<std::string>(e, "label", "boundary entry"), m);
            else
                b.add(m);
        } else {
            b.add(multiplicity_from_json(e));
        }
    }
    return b;
}

inline json to_json(const Boundary& b) {
    json out = json::array();
    for (const auto& e : b.entries()) out.push_back({{"label", e.label}, {"mult", e.mult.str()}});
    return out;
}

inline CurveShape shape_from_json(const json& j) {
    auto s = j.get<std::string>();
    if (s == "irreducible") return CurveShape::Irreducible;
    if (s == "chain") return CurveShape::Chain;
    if (s == "wheel") return CurveShape::Wheel;
    throw schema_error("shape must be irreducible, chain or wheel (got \"" + s + "\")");
}

/// {shape, components: [{genus, boundary}]}.
inline CurveConfig curve_from_json(const json& j) {
    auto shape = shape_from_json(detail::field(j, "shape", "curve"));
    std::vector<CurveComponent> comps;
    for (const auto& c : detail::array_field(j, "components", "curve")) {
        CurveComponent cc;
        cc.genus = detail::get_or<int>(c, "genus", 0);
        if (c.contains("boundary")) cc.boundary = boundary_from_json(c["boundary"]);
        comps.push_back(std::move(cc));
    }
    return CurveConfig(shape, std::move(comps));
}

inline json to_json(const CurveConfig& c) {
    json comps = json::array();
    for (const auto& comp : c.components()) comps.push_back({{"genus", comp.genus}, {"boundary", to_json(comp.boundary)}});
    return {{"shape", to_string(c.shape())}, {"components", comps}};
}

/// {orbits: [{size, mult}]} or the bare array.
inline OrbitBoundary orbits_from_json(const json& j) {
    const json& arr = j.is_array() ? j : detail::array_field(j, "orbits", "orbit boundary");
    OrbitBoundary out;
    for (const auto& o : arr)
        out.push_back({detail::get<std::int64_t>(o, "size", "orbit"),
                       multiplicity_from_json(detail::field(o, "mult", "orbit"))});
    return out;
}

// ---------------------------------------------------------------------------
// Dual graphs

/// {vertices: [{id, role, self_int, genus, nodes, mult?}], edges: [[i, j, k]]}.
/// Edge endpoints are vertex ids or zero-based positions.
inline DualGraph graph_from_json(const json& j) {
    DualGraph g;
    for (const auto& v : detail::array_field(j, "vertices", "graph")) {
        Curve c;
        c.id = detail::get<std::string>(v, "id", "vertex");
        auto role = detail::get<std::string>(v, "role", "vertex");
        if (role == "exceptional")
            c.role = CurveRole::Exceptional;
        else if (role == "ambient" || role == "boundary")
            c.role = CurveRole::Ambient;
        else
            throw schema_error("vertex \"" + c.id + "\": role must be exceptional or ambient");
        c.self_intersection = detail::get<std::int64_t>(v, "self_int", "vertex");
        c.genus = detail::get_or<int>(v, "genus", 0);
        c.node_count = detail::get_or<int>(v, "nodes", 0);
        if (v.contains("mult")) {
            if (c.role == CurveRole::Exceptional)
                throw schema_error("vertex \"" + c.id + "\": exceptional curves take no mult (it is solved for)");
            c.boundary = multiplicity_from_json(v["mult"]);
        }
        g.add_curve(std::move(c));
    }
    auto endpoint = [&](const json& e) -> std::size_t {
        if (e.is_number_integer()) {
            auto i = e.get<std::int64_t>();
            if (i < 0 || static_cast<std::size_t>(i) >= g.size()) throw schema_error("edge endpoint out of range");
            return static_cast<std::size_t>(i);
        }
        if (e.is_string()) return g.index_of(e.get<std::string>());
        throw schema_error("edge endpoints are vertex ids or indices");
    };
    if (j.contains("edges")) {
        for (const auto& e : detail::array_field(j, "edges", "graph")) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3) throw schema_error("edges are [i, j] or [i, j, k]");
            std::int64_t k = e.size() == 3 ? e[2].get<std::int64_t>() : 1;
            g.add_edge(endpoint(e[0]), endpoint(e[1]), k);
        }
    }
    return g;
}

inline json to_json(const DualGraph& g) {
    json vs = json::array(), es = json::array();
    for (const auto& c : g.curves()) {
        json v = {{"id", c.id},
                  {"role", c.exceptional() ? "exceptional" : "ambient"},
                  {"self_int", c.self_intersection},
                  {"genus", c.genus},
                  {"nodes", c.node_count}};
        if (!c.exceptional()) v["mult"] = c.boundary.str();
        vs.push_back(v);
    }
    for (const auto& e : g.edges()) es.push_back({g.curve(e.a).id, g.curve(e.b).id, e.multiplicity});
    return {{"vertices", vs}, {"edges", es}};
}

// ---------------------------------------------------------------------------
// Fibres

/// {shape, smooth_ambient?, multiplicity?, components: [{genus, nodes,
/// self_int, decorations: ["A1", "(-3)", ...], multiplicity?}]}.
inline FiberModel fiber_from_json(const json& j) {
    FiberModel f;
    f.shape = shape_from_json(detail::field(j, "shape", "fibre"));
    f.smooth_ambient = detail::get_or<bool>(j, "smooth_ambient", false);
    const auto m = detail::get_or<std::int64_t>(j, "multiplicity", 1);
    for (const auto& c : detail::array_field(j, "components", "fibre")) {
        FiberComponent fc;
        fc.genus = detail::get_or<int>(c, "genus", 0);
        fc.node_count = detail::get_or<int>(c, "nodes", 0);
        fc.self_intersection = detail::get_or<std::int64_t>(c, "self_int", -2);
        fc.multiplicity = detail::get_or<std::int64_t>(c, "multiplicity", m);
        if (c.contains("decorations"))
            for (const auto& d : c["decorations"]) fc.decorations.push_back(Decoration::parse(d.get<std::string>()));
        f.components.push_back(std::move(fc));
    }
    if (f.shape == CurveShape::Wheel && f.components.size() < 2) throw schema_error("a wheel needs two components");
    return f;
}

// ---------------------------------------------------------------------------
// Complement data and strata

inline ComplementDatum datum_from_json(const json& j) {
    ComplementDatum d;
    d.index = detail::get<std::int64_t>(j, "index", "complement datum");
    d.n_reduced = detail::get_or<std::int64_t>(j, "n", 0);
    d.m_exceptional = detail::get_or<std::int64_t>(j, "m", 0);
    d.lcs_connected = detail::get_or<bool>(j, "lcs_connected", true);
    if (j.contains("lcs_genus") && !j["lcs_genus"].is_null()) d.lcs_genus = j["lcs_genus"].get<int>();
    d.support_singular_connected = detail::get_or<bool>(j, "support_singular_connected", false);
    d.global = detail::get_or<bool>(j, "global", false);
    d.klt = detail::get_or<bool>(j, "klt", false);
    return d;
}

/// {divisors: [...], strata: [{divisors: [...], tag?, faces?}], ambient_dim?}.
inline Stratification strata_from_json(const json& j) {
    Stratification s;
    s.divisors = detail::get<std::vector<std::string>>(j, "divisors", "stratification");
    if (j.contains("strata"))
        for (const auto& st : detail::array_field(j, "strata", "stratification")) {
            Stratum out;
            out.divisors = detail::get<std::vector<std::string>>(st, "divisors", "stratum");
            out.tag = detail::get_or<std::string>(st, "tag", "");
            out.faces = detail::get_or<std::vector<std::string>>(st, "faces", {});
            s.strata.push_back(std::move(out));
        }
    if (j.contains("ambient_dim")) s.ambient_dim = j["ambient_dim"].get<int>();
    return s;
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const ExceptionalReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return {{"case", r.name}, {"pass", r.passed()}, {"checks", checks}};
}

}  // namespace complements::io
