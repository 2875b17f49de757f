// The incidence complex R(X,B) of the reduced boundary.
//
// Vertices are the reduced prime divisors; an l-simplex is an irreducible
// component of an intersection of l+1 of them. Two components of the same
// intersection are distinct simplices on the same vertex set, so the space is
// a Delta-complex rather than an abstract simplicial complex.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complements/rational.hpp"

namespace complements {

/// A component of an intersection of divisors.
struct Stratum {
    std::vector<std::string> divisors;
    /// Distinguishes components of one intersection; may be empty when the
    /// intersection is irreducible.
    std::string tag;
    /// Tags of the facets, one per divisor in `divisors` order: the facet
    /// opposite divisors[i] is the stratum on the remaining divisors with tag
    /// faces[i]. Optional when every facet is unambiguous.
    std::vector<std::string> faces;
};

struct Stratification {
    std::vector<std::string> divisors;
    /// Strata of codimension >= 2 in X (the divisors themselves are the
    /// vertices and are not repeated here).
    std::vector<Stratum> strata;
    /// When set, build_complex enforces dim R(X,B) <= ambient_dim - 1.
    std::optional<int> ambient_dim;
};

struct Simplex {
    /// Sorted vertex indices.
    std::vector<std::size_t> vertices;
    std::string tag;
    /// faces[i]: index among the (l-1)-simplices of the facet opposite
    /// vertices[i].
    std::vector<std::size_t> faces;
};

class SimplicialSpace {
public:
    SimplicialSpace() = default;
    explicit SimplicialSpace(std::vector<std::string> vertex_names) : names_(std::move(vertex_names)) {
        if (!names_.empty()) {
            levels_.emplace_back();
            for (std::size_t i = 0; i < names_.size(); ++i) levels_[0].push_back({{i}, "", {}});
        }
    }

    /// -1 for the empty space.
    int dimension() const { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Simplex>& simplices(int l) const {
        static const std::vector<Simplex> none;
        return l >= 0 && l < static_cast<int>(levels_.size()) ? levels_[static_cast<std::size_t>(l)] : none;
    }
    std::size_t count(int l) const { return simplices(l).size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }

    /// Adds an l-simplex (l >= 1) whose facets already exist.
    std::size_t add(Simplex s) {
        const std::size_t l = s.vertices.size() - 1;
        if (s.vertices.size() < 2) throw invalid_input("only simplices of dimension >= 1 can be added");
        if (s.faces.size() != s.vertices.size()) throw invalid_input("simplex needs one facet per vertex");
        while (levels_.size() <= l) levels_.emplace_back();
        levels_[l].push_back(std::move(s));
        return levels_[l].size() - 1;
    }

    /// No two simplices share a vertex set.
    bool is_simplicial() const {
        for (const auto& level : levels_) {
            std::set<std::vector<std::size_t>> seen;
            for (const auto& s : level)
                if (!seen.insert(s.vertices).second) return false;
        }
        return true;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Simplex>> levels_;
};

// ---------------------------------------------------------------------------
// Construction

inline SimplicialSpace build_complex(const Stratification& s) {
    std::map<std::string, std::size_t> vid;
    for (std::size_t i = 0; i < s.divisors.size(); ++i)
        if (!vid.emplace(s.divisors[i], i).second) throw invalid_input("duplicate divisor \"" + s.divisors[i] + "\"");
    SimplicialSpace space(s.divisors);

    struct Pending {
        std::vector<std::size_t> vertices;
        std::vector<std::string> names;  // aligned with vertices
        const Stratum* source;
    };
    std::vector<Pending> pending;
    for (const auto& st : s.strata) {
        if (st.divisors.size() < 2) throw invalid_input("a stratum lies on at least two divisors");
        if (!st.faces.empty() && st.faces.size() != st.divisors.size())
            throw invalid_input("stratum faces must list one tag per divisor");
        std::vector<std::pair<std::size_t, std::string>> vs;
        for (std::size_t i = 0; i < st.divisors.size(); ++i) {
            auto it = vid.find(st.divisors[i]);
            if (it == vid.end()) throw invalid_input("stratum refers to unknown divisor \"" + st.divisors[i] + "\"");
            vs.emplace_back(it->second, st.faces.empty() ? std::string() : st.faces[i]);
        }
        std::sort(vs.begin(), vs.end());
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (vs[i].first == vs[i - 1].first) throw invalid_input("stratum repeats a divisor");
        Pending p{{}, {}, &st};
        for (auto& [v, face_tag] : vs) {
            p.vertices.push_back(v);
            p.names.push_back(face_tag);
        }
        pending.push_back(std::move(p));
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Pending& a, const Pending& b) { return a.vertices.size() < b.vertices.size(); });

    auto label = [&](const std::vector<std::size_t>& vs, const std::string& tag) {
        std::string out;
        for (std::size_t v : vs) out += (out.empty() ? "" : "^") + s.divisors[v];
        return tag.empty() ? out : out + "#" + tag;
    };

    for (const auto& p : pending) {
        const int l = static_cast<int>(p.vertices.size()) - 1;
        if (s.ambient_dim && l > *s.ambient_dim - 1)
            throw invalid_input("stratum " + label(p.vertices, p.source->tag) + " exceeds dim R(X,B) <= " +
                                std::to_string(*s.ambient_dim - 1));
        for (const auto& other : space.simplices(l))
            if (other.vertices == p.vertices && other.tag == p.source->tag)
                throw invalid_input("duplicate stratum " + label(p.vertices, p.source->tag));

        Simplex simplex{p.vertices, p.source->tag, {}};
        const auto& lower = space.simplices(l - 1);
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            std::vector<std::size_t> facet = p.vertices;
            facet.erase(facet.begin() + static_cast<long>(i));
            std::vector<std::size_t> matches;
            for (std::size_t j = 0; j < lower.size(); ++j)
                if (lower[j].vertices == facet && (p.source->faces.empty() || lower[j].tag == p.names[i]))
                    matches.push_back(j);
            if (matches.empty())
                throw invalid_input("stratum " + label(p.vertices, p.source->tag) + " is missing its face " +
                                    label(facet, p.source->faces.empty() ? "" : p.names[i]));
            if (matches.size() > 1)
                throw invalid_input("stratum " + label(p.vertices, p.source->tag) + " has an ambiguous face " +
                                    label(facet, "") + " (list the face tags)");
            simplex.faces.push_back(matches.front());
        }
        space.add(std::move(simplex));
    }
    return space;
}

/// Builds an abstract simplicial complex from vertex sets (all faces are
/// added automatically).
inline SimplicialSpace complex_from_sets(std::vector<std::string> names, const std::vector<std::vector<std::size_t>>& sets) {
    std::set<std::vector<std::size_t>> closed;
    for (auto s : sets) {
        std::sort(s.begin(), s.end());
        const std::size_t k = s.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<std::size_t> f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) f.push_back(s[i]);
            if (f.size() >= 2) closed.insert(f);
        }
    }
    Stratification st{std::move(names), {}, std::nullopt};
    for (const auto& f : closed) {
        Stratum s;
        for (std::size_t v : f) s.divisors.push_back(st.divisors.at(v));
        st.strata.push_back(std::move(s));
    }
    return build_complex(st);
}

// ---------------------------------------------------------------------------
// Invariants

/// dim R(X,B); nullopt stands for -infinity (the empty space).
inline std::optional<int> reg(const SimplicialSpace& c) {
    if (c.dimension() < 0) return std::nullopt;
    return c.dimension();
}

inline std::string reg_str(const SimplicialSpace& c) {
    auto r = reg(c);
    return r ? std::to_string(*r) : "-inf";
}

struct EulerGenus {
    std::int64_t chi = 0;
    /// 2 - chi.
    std::int64_t q = 2;
    friend bool operator==(const EulerGenus&, const EulerGenus&) = default;
};

inline EulerGenus euler_genus(const SimplicialSpace& c) {
    std::int64_t chi = 0;
    for (int l = 0; l <= c.dimension(); ++l) chi += (l % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.count(l));
    return {chi, 2 - chi};
}

inline std::size_t connected_components(const SimplicialSpace& c) {
    const std::size_t n = c.count(0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (const auto& e : c.simplices(1)) {
        auto a = find(e.vertices[0]), b = find(e.vertices[1]);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

namespace detail {

/// Connected multigraph with all degrees <= 2 that is a path with at least
/// one edge or a cycle.
inline bool path_or_cycle(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (nodes == 0 || edges.empty()) return false;
    std::vector<std::size_t> degree(nodes, 0), parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = nodes;
    for (auto [a, b] : edges) {
        if (++degree[a] > 2 || ++degree[b] > 2) return false;
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1 && (edges.size() == nodes - 1 || edges.size() == nodes);
}

}  // namespace detail

/// Manifold with boundary in dimensions 0-2. Components of different
/// dimensions are allowed in dimension 1; in dimension 2 every vertex link
/// must be a path or a cycle.
inline bool is_manifold_with_boundary(const SimplicialSpace& c) {
    const int dim = c.dimension();
    if (dim > 2) throw invalid_input("manifold test is implemented in dimensions <= 2 only");
    if (dim <= 0) return true;
    if (dim == 1) {
        std::vector<std::size_t> degree(c.count(0), 0);
        for (const auto& e : c.simplices(1))
            for (std::size_t v : e.vertices)
                if (++degree[v] > 2) return false;
        return true;
    }
    std::vector<std::size_t> edge_use(c.count(1), 0);
    for (const auto& t : c.simplices(2))
        for (std::size_t f : t.faces)
            if (++edge_use[f] > 2) return false;

    for (std::size_t v = 0; v < c.count(0); ++v) {
        // Link of v: nodes are the edges at v, arcs are the triangles at v
        // joining their two facets through v.
        std::map<std::size_t, std::size_t> node;
        const auto& edges = c.simplices(1);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].vertices[0] == v || edges[e].vertices[1] == v) node.emplace(e, node.size());
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        for (const auto& t : c.simplices(2)) {
            std::vector<std::size_t> through_v;
            for (std::size_t i = 0; i < 3; ++i)
                if (t.vertices[i] != v && std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end())
                    through_v.push_back(node.at(t.faces[i]));
            if (through_v.size() == 2) arcs.emplace_back(through_v[0], through_v[1]);
        }
        if (!detail::path_or_cycle(node.size(), arcs)) return false;
    }
    return true;
}

/// Stellar subdivision of one simplex (the monoidal transform of the
/// corresponding stratum). Requires a simplicial complex; the new vertex is
/// appended with the given name.
inline SimplicialSpace subdivide(const SimplicialSpace& c, int l, std::size_t index, const std::string& new_vertex) {
    if (!c.is_simplicial()) throw invalid_input("subdivision needs simplices determined by their vertices");
    const auto& target = c.simplices(l).at(index).vertices;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::string> names = c.vertex_names();
    const std::size_t w = names.size();
    names.push_back(new_vertex);
    for (const auto& s : c.simplices(0)) sets.push_back(s.vertices);
    sets.push_back({w});
    for (int k = 1; k <= c.dimension(); ++k) {
        for (const auto& s : c.simplices(k)) {
            if (!std::includes(s.vertices.begin(), s.vertices.end(), target.begin(), target.end())) {
                sets.push_back(s.vertices);
                continue;
            }
            std::vector<std::size_t> rest;
            std::set_difference(s.vertices.begin(), s.vertices.end(), target.begin(), target.end(),
                                std::back_inserter(rest));
            // w joined with (proper face of the target) and the complement.
            for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << target.size()); ++mask) {
                std::vector<std::size_t> f = rest;
                for (std::size_t i = 0; i < target.size(); ++i)
                    if (mask >> i & 1) f.push_back(target[i]);
                f.push_back(w);
                sets.push_back(f);
            }
        }
    }
    if (l == 0) {
        // Subdividing a vertex only renames it.
        sets.erase(std::remove(sets.begin(), sets.end(), std::vector<std::size_t>{target[0]}), sets.end());
    }
    // Remove the star of the target vertex set and keep isolated vertices.
    std::vector<std::size_t> keep_vertices;
    std::vector<std::vector<std::size_t>> higher;
    for (auto& s : sets) {
        if (s.size() == 1) keep_vertices.push_back(s[0]);
        else higher.push_back(s);
    }
    std::vector<std::size_t> remap(names.size(), SIZE_MAX);
    std::vector<std::string> out_names;
    std::sort(keep_vertices.begin(), keep_vertices.end());
    keep_vertices.erase(std::unique(keep_vertices.begin(), keep_vertices.end()), keep_vertices.end());
    for (std::size_t v : keep_vertices) {
        remap[v] = out_names.size();
        out_names.push_back(names[v]);
    }
    for (auto& s : higher)
        for (auto& v : s) v = remap[v];
    return complex_from_sets(std::move(out_names), higher);
}

}  // namespace complements
