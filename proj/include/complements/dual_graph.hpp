// Weighted dual graphs of curves on a surface and the discrepancy calculus
// on them.
//
// Vertices are curves on a resolution: Exceptional ones are contracted, Ambient
// ones carry a boundary coefficient. Edges record transversal intersection
// points; an edge of multiplicity k stands for k distinct crossings. All
// computations are exact.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complements/boundary.hpp"
#include "complements/detail/linalg.hpp"

namespace complements {

enum class CurveRole { Exceptional, Ambient };

struct Curve {
    std::string id;
    CurveRole role = CurveRole::Exceptional;
    std::int64_t self_intersection = -2;
    int genus = 0;
    int node_count = 0;
    /// Boundary coefficient of an Ambient curve; zero for exceptional curves,
    /// whose coefficients are solved for.
    Multiplicity boundary;

    int arithmetic_genus() const { return genus + node_count; }
    /// K.E = 2 p_a - 2 - E^2.
    std::int64_t canonical_degree() const { return 2 * arithmetic_genus() - 2 - self_intersection; }
    bool exceptional() const { return role == CurveRole::Exceptional; }
};

struct GraphEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::int64_t multiplicity = 1;
};

class DualGraph {
public:
    std::size_t add_curve(Curve c) {
        if (c.id.empty()) c.id = std::to_string(curves_.size());
        if (index_.count(c.id)) throw invalid_input("duplicate vertex id \"" + c.id + "\"");
        if (c.genus < 0 || c.node_count < 0) throw invalid_input("negative genus or node count on \"" + c.id + "\"");
        if (c.exceptional() && !c.boundary.is_zero())
            throw invalid_input("exceptional curve \"" + c.id + "\" cannot carry a boundary coefficient");
        index_[c.id] = curves_.size();
        curves_.push_back(std::move(c));
        return curves_.size() - 1;
    }

    std::size_t add_exceptional(std::string id, std::int64_t self_int, int genus = 0, int nodes = 0) {
        return add_curve({std::move(id), CurveRole::Exceptional, self_int, genus, nodes, {}});
    }
    std::size_t add_ambient(std::string id, std::int64_t self_int, Multiplicity b, int genus = 0, int nodes = 0) {
        return add_curve({std::move(id), CurveRole::Ambient, self_int, genus, nodes, std::move(b)});
    }

    void add_edge(std::size_t a, std::size_t b, std::int64_t k = 1) {
        if (a >= curves_.size() || b >= curves_.size()) throw invalid_input("edge refers to a missing vertex");
        if (a == b)
            throw invalid_input("self-loop on \"" + curves_[a].id + "\" (encode nodes through node_count)");
        if (k < 1) throw invalid_input("edge multiplicity must be positive");
        edges_.push_back({a, b, k});
    }
    void add_edge(const std::string& a, const std::string& b, std::int64_t k = 1) {
        add_edge(index_of(a), index_of(b), k);
    }

    std::size_t index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw invalid_input("unknown vertex id \"" + id + "\"");
        return it->second;
    }

    const std::vector<Curve>& curves() const { return curves_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const Curve& curve(std::size_t i) const { return curves_.at(i); }
    std::size_t size() const { return curves_.size(); }

    /// Intersection number of two vertices (self-intersection on the diagonal).
    std::int64_t intersection(std::size_t i, std::size_t j) const {
        if (i == j) return curves_.at(i).self_intersection;
        std::int64_t s = 0;
        for (const auto& e : edges_)
            if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) s += e.multiplicity;
        return s;
    }

    std::vector<std::size_t> exceptional_vertices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < curves_.size(); ++i)
            if (curves_[i].exceptional()) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> ambient_vertices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < curves_.size(); ++i)
            if (!curves_[i].exceptional()) out.push_back(i);
        return out;
    }

    /// Intersection matrix of an arbitrary vertex subset.
    std::vector<std::vector<std::int64_t>> matrix_of(const std::vector<std::size_t>& vs) const {
        std::vector<std::vector<std::int64_t>> m(vs.size(), std::vector<std::int64_t>(vs.size()));
        for (std::size_t r = 0; r < vs.size(); ++r)
            for (std::size_t c = 0; c < vs.size(); ++c) m[r][c] = intersection(vs[r], vs[c]);
        return m;
    }

private:
    std::vector<Curve> curves_;
    std::vector<GraphEdge> edges_;
    std::map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Intersection matrix and contractibility

inline std::vector<std::vector<std::int64_t>> intersection_matrix(const DualGraph& g) {
    auto ex = g.exceptional_vertices();
    if (ex.empty()) throw invalid_input("graph has no exceptional vertices");
    return g.matrix_of(ex);
}

/// Negative definiteness of the exceptional intersection matrix, decided by
/// the signs of its leading principal minors.
inline bool is_contractible(const DualGraph& g) {
    return detail::negative_definite(detail::to_rational(intersection_matrix(g)));
}

// ---------------------------------------------------------------------------
// Crepant pull-back

/// Raised when the exceptional intersection matrix is singular (fibre type).
class singular_configuration : public invalid_input {
public:
    using invalid_input::invalid_input;
};

struct CrepantResult {
    /// Vertex indices of the exceptional curves, in graph order.
    std::vector<std::size_t> exceptional;
    /// Boundary multiplicity d of each exceptional curve in the pull-back.
    std::vector<Rational> d;
    /// Log discrepancy a = 1 - d of each exceptional curve.
    std::vector<Rational> a;
    /// Some d is negative (the pull-back is only a sub-boundary).
    bool sub_boundary = false;

    /// Pull-back coefficient of every vertex: b for Ambient curves, d for
    /// exceptional ones.
    std::vector<Rational> coefficients;
};

/// Solves (K + sum d_j E_j + sum b_k C_k).E_i = 0 for every exceptional E_i.
inline CrepantResult crepant_discrepancies(const DualGraph& g) {
    CrepantResult r;
    r.exceptional = g.exceptional_vertices();
    r.coefficients.resize(g.size());
    for (std::size_t v : g.ambient_vertices()) r.coefficients[v] = g.curve(v).boundary.value();
    if (r.exceptional.empty()) return r;

    const auto& ex = r.exceptional;
    detail::Matrix m = detail::to_rational(g.matrix_of(ex));
    std::vector<Rational> rhs;
    for (std::size_t i : ex) {
        Rational s(g.curve(i).canonical_degree());
        for (std::size_t k : g.ambient_vertices()) {
            auto meet = g.intersection(i, k);
            if (meet) s += g.curve(k).boundary.value() * Rational(meet);
        }
        rhs.push_back(-s);
    }
    auto sol = detail::solve(std::move(m), std::move(rhs));
    if (!sol) throw singular_configuration("exceptional intersection matrix is singular (fibre type, not contractible)");
    r.d = std::move(*sol);
    for (std::size_t t = 0; t < ex.size(); ++t) {
        r.a.push_back(Rational(1) - r.d[t]);
        if (r.d[t].sign() < 0) r.sub_boundary = true;
        r.coefficients[ex[t]] = r.d[t];
    }
    return r;
}

/// (K + sum coeff_j V_j).V_test.
inline Rational pairing(const DualGraph& g, const std::vector<Rational>& coeffs, std::size_t test) {
    if (coeffs.size() != g.size()) throw invalid_input("pairing needs one coefficient per vertex");
    Rational s(g.curve(test).canonical_degree());
    for (std::size_t j = 0; j < g.size(); ++j) {
        auto meet = g.intersection(j, test);
        if (meet && !coeffs[j].is_zero()) s += coeffs[j] * Rational(meet);
    }
    return s;
}

/// (K + B).V for the crepant pull-back of the graph's own boundary.
inline Rational log_canonical_degree(const DualGraph& g, std::size_t test) {
    return pairing(g, crepant_discrepancies(g).coefficients, test);
}

// ---------------------------------------------------------------------------
// Log discrepancies, mld, delta

/// Log discrepancy of every vertex: 1 - b for Ambient curves, 1 - d for
/// exceptional curves.
inline std::vector<Rational> log_discrepancies(const DualGraph& g, const CrepantResult& cr) {
    std::vector<Rational> a(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) a[i] = Rational(1) - cr.coefficients[i];
    return a;
}

/// A transversal crossing of two divisors with the given log discrepancies.
/// Nodes of a single curve appear with both entries equal.
struct CrossingPoint {
    std::size_t first = 0;
    std::size_t second = 0;
};

inline std::vector<CrossingPoint> crossing_points(const DualGraph& g) {
    std::vector<CrossingPoint> out;
    for (const auto& e : g.edges())
        for (std::int64_t k = 0; k < e.multiplicity; ++k) out.push_back({e.a, e.b});
    for (std::size_t i = 0; i < g.size(); ++i)
        for (int k = 0; k < g.curve(i).node_count; ++k) out.push_back({i, i});
    return out;
}

/// Minimal log discrepancy over the model and its infinitely near divisors:
/// min(a_i, a_i + a_j over crossings, 2). nullopt when some a_i < 0.
inline std::optional<Rational> mld(const DualGraph& g) {
    auto cr = crepant_discrepancies(g);
    auto a = log_discrepancies(g, cr);
    Rational best(2);
    for (const auto& v : a) {
        if (v.sign() < 0) return std::nullopt;
        best = min(best, v);
    }
    for (const auto& p : crossing_points(g)) best = min(best, a[p.first] + a[p.second]);
    return best;
}

struct LogCanonicalStatus {
    enum class Kind { KawamataLT, LogCanonicalNotKLT, NotLogCanonical };
    Kind kind = Kind::KawamataLT;
    /// Minimal log discrepancy when kind == KawamataLT.
    Rational epsilon;

    std::string str() const {
        switch (kind) {
            case Kind::KawamataLT: return "klt(" + epsilon.str() + ")";
            case Kind::LogCanonicalNotKLT: return "lc";
            case Kind::NotLogCanonical: return "not-lc";
        }
        return "?";
    }
};

inline LogCanonicalStatus log_canonical_status(const DualGraph& g) {
    auto m = mld(g);
    if (!m) return {LogCanonicalStatus::Kind::NotLogCanonical, {}};
    if (m->is_zero()) return {LogCanonicalStatus::Kind::LogCanonicalNotKLT, {}};
    return {LogCanonicalStatus::Kind::KawamataLT, *m};
}

struct DeltaInvariant {
    bool infinite = false;
    std::int64_t count = 0;

    std::string str() const { return infinite ? "infinite" : std::to_string(count); }
    friend bool operator==(const DeltaInvariant&, const DeltaInvariant&) = default;
};

/// Number of divisors with log discrepancy <= threshold (1/7 by default),
/// counting the curves of the graph and the toric divisors over its crossings:
/// over a crossing with discrepancies a1, a2 those are k1 a1 + k2 a2 for
/// coprime k1, k2 >= 1. Divisors over free points or smooth points have
/// discrepancy >= 1.
inline DeltaInvariant delta_invariant(const DualGraph& g, const Rational& threshold = Rational(1, 7)) {
    auto cr = crepant_discrepancies(g);
    auto a = log_discrepancies(g, cr);
    for (const auto& v : a)
        if (v.sign() < 0) throw invalid_input("delta is undefined for a pair that is not log canonical");

    DeltaInvariant out;
    for (const auto& v : a)
        if (v <= threshold) ++out.count;
    for (const auto& p : crossing_points(g)) {
        const Rational& a1 = a[p.first];
        const Rational& a2 = a[p.second];
        if ((a1.is_zero() && a2 <= threshold) || (a2.is_zero() && a1 <= threshold)) {
            out.infinite = true;
            continue;
        }
        if (a1.is_zero() || a2.is_zero()) continue;  // every value is k * (the other) > threshold
        for (std::int64_t k1 = 1; Rational(k1) * a1 + a2 <= threshold; ++k1)
            for (std::int64_t k2 = 1; Rational(k1) * a1 + Rational(k2) * a2 <= threshold; ++k2)
                if (std::gcd(k1, k2) == 1) ++out.count;
    }
    if (out.infinite) out.count = 0;
    return out;
}

// ---------------------------------------------------------------------------
// Du Val classification

struct SingularityClass {
    enum class Kind { A, D, E6, E7, E8, NonDuVal };
    Kind kind = Kind::NonDuVal;
    int rank = 0;

    /// E6, E7 and E8 are the exceptional types; A and D are not.
    bool exceptional() const { return kind == Kind::E6 || kind == Kind::E7 || kind == Kind::E8; }
    bool du_val() const { return kind != Kind::NonDuVal; }

    std::string str() const {
        switch (kind) {
            case Kind::A: return "A" + std::to_string(rank);
            case Kind::D: return "D" + std::to_string(rank);
            case Kind::E6: return "E6";
            case Kind::E7: return "E7";
            case Kind::E8: return "E8";
            case Kind::NonDuVal: return "non-Du-Val";
        }
        return "?";
    }
    friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

namespace detail {

inline SingularityClass classify_tree(const DualGraph& g, const std::vector<std::size_t>& vs) {
    SingularityClass non{SingularityClass::Kind::NonDuVal, 0};
    for (std::size_t v : vs) {
        const auto& c = g.curve(v);
        if (c.self_intersection != -2 || c.genus != 0 || c.node_count != 0) return non;
    }
    std::map<std::size_t, std::size_t> local;
    for (std::size_t t = 0; t < vs.size(); ++t) local[vs[t]] = t;
    std::vector<std::vector<std::size_t>> adj(vs.size());
    std::size_t edge_count = 0;
    for (const auto& e : g.edges()) {
        if (!local.count(e.a) || !local.count(e.b)) continue;
        if (e.multiplicity != 1) return non;
        adj[local[e.a]].push_back(local[e.b]);
        adj[local[e.b]].push_back(local[e.a]);
        ++edge_count;
    }
    if (edge_count + 1 != vs.size()) return non;  // connected by construction, so a tree iff E = V - 1
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return non;
    }

    std::vector<std::size_t> branch;
    for (std::size_t t = 0; t < adj.size(); ++t) {
        if (adj[t].size() > 3) return non;
        if (adj[t].size() == 3) branch.push_back(t);
    }
    const int n = static_cast<int>(vs.size());
    if (branch.empty()) return {SingularityClass::Kind::A, n};
    if (branch.size() > 1) return non;

    std::vector<int> arms;
    for (std::size_t start : adj[branch[0]]) {
        int len = 1;
        std::size_t prev = branch[0], cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {SingularityClass::Kind::D, n};
    if (arms == std::vector<int>{1, 2, 2}) return {SingularityClass::Kind::E6, 6};
    if (arms == std::vector<int>{1, 2, 3}) return {SingularityClass::Kind::E7, 7};
    if (arms == std::vector<int>{1, 2, 4}) return {SingularityClass::Kind::E8, 8};
    return non;
}

}  // namespace detail

/// Connected components of the exceptional part of the graph (each one is a
/// singular point of the contracted surface).
inline std::vector<std::vector<std::size_t>> exceptional_components(const DualGraph& g) {
    auto ex = g.exceptional_vertices();
    std::vector<std::size_t> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges())
        if (g.curve(e.a).exceptional() && g.curve(e.b).exceptional()) parent[find(e.a)] = find(e.b);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v : ex) groups[find(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, vs] : groups) out.push_back(std::move(vs));
    std::sort(out.begin(), out.end());
    return out;
}

/// ADE type of the exceptional configuration, which must be connected.
inline SingularityClass classify_duval(const DualGraph& g) {
    auto comps = exceptional_components(g);
    if (comps.size() != 1) return {SingularityClass::Kind::NonDuVal, 0};
    return detail::classify_tree(g, comps.front());
}

/// Type of each exceptional component, in component order.
inline std::vector<SingularityClass> classify_singularities(const DualGraph& g) {
    std::vector<SingularityClass> out;
    for (const auto& c : exceptional_components(g)) out.push_back(detail::classify_tree(g, c));
    return out;
}

// ---------------------------------------------------------------------------
// Adjunction

/// Different at a point of local index l on a curve crossing a boundary
/// component of multiplicity (m-1)/m: (lm - 1)/(lm).
inline Rational adjunction_mult(std::int64_t l, std::int64_t m) {
    if (l < 1 || m < 1) throw invalid_input("adjunction_mult needs l, m >= 1");
    return Rational(l * m - 1, l * m);
}

struct CrossingMult {
    std::int64_t k = 1;
    Multiplicity d;
};

struct DifferentResult {
    Rational value;
    /// value > 1: the adjunction is not log canonical.
    bool exceeds_one = false;
    /// value >= d_i for every crossing, strictly when m >= 2 and d_i < 1.
    bool monotone = true;
};

/// (m-1)/m + sum k_i d_i / m.
inline DifferentResult different_at_point(std::int64_t m, const std::vector<CrossingMult>& crossings) {
    if (m < 1) throw invalid_input("different_at_point needs m >= 1");
    DifferentResult r;
    r.value = Rational(m - 1, m);
    for (const auto& c : crossings) {
        if (c.k < 1) throw invalid_input("crossing multiplicity must be positive");
        r.value += Rational(c.k) * c.d.value() / Rational(m);
    }
    r.exceeds_one = r.value > Rational(1);
    for (const auto& c : crossings) {
        const Rational& d = c.d.value();
        bool strict = m >= 2 && d < Rational(1);
        if (strict ? !(r.value > d) : !(r.value >= d)) r.monotone = false;
    }
    return r;
}

}  // namespace complements
