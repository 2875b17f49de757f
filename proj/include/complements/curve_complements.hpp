// Numerical n-complement criteria on proper curves.
//
// A pair (C, B) on a curve whose components are rational or elliptic has an
// n-complement iff
//
//     K + floor(B) + floor((n+1){B})/n
//
// has non-positive degree on every component. Intersection points with
// neighbouring components count as reduced points of the boundary.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "complements/boundary.hpp"

namespace complements {

enum class CurveShape { Irreducible, Chain, Wheel };

inline const char* to_string(CurveShape s) {
    switch (s) {
        case CurveShape::Irreducible: return "irreducible";
        case CurveShape::Chain: return "chain";
        case CurveShape::Wheel: return "wheel";
    }
    return "?";
}

struct CurveComponent {
    int genus = 0;
    /// Marked points of the component. Intersections with neighbouring
    /// components are implied and never listed here.
    Boundary boundary;
};

class CurveConfig {
public:
    CurveConfig(CurveShape shape, std::vector<CurveComponent> components)
        : shape_(shape), components_(std::move(components)) {
        if (components_.empty()) throw invalid_input("curve configuration without components");
        if (shape_ == CurveShape::Irreducible && components_.size() != 1)
            throw invalid_input("irreducible curve must have exactly one component");
        if (shape_ == CurveShape::Wheel && components_.size() < 2)
            throw invalid_input("a wheel needs at least two components (use an irreducible genus-1 curve)");
        for (const auto& c : components_)
            if (c.genus < 0) throw invalid_input("negative genus");
    }

    static CurveConfig irreducible(int genus, Boundary b) {
        return CurveConfig(CurveShape::Irreducible, {CurveComponent{genus, std::move(b)}});
    }
    static CurveConfig rational(Boundary b) { return irreducible(0, std::move(b)); }

    CurveShape shape() const { return shape_; }
    const std::vector<CurveComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }

    /// Number of implied reduced points on component i coming from its
    /// neighbours.
    int neighbour_points(std::size_t i) const {
        const std::size_t k = components_.size();
        switch (shape_) {
            case CurveShape::Irreducible: return 0;
            case CurveShape::Wheel: return 2;
            case CurveShape::Chain:
                if (k == 1) return 0;
                return (i == 0 || i + 1 == k) ? 1 : 2;
        }
        return 0;
    }

private:
    CurveShape shape_;
    std::vector<CurveComponent> components_;
};

namespace detail {

inline void require_low_genus(const CurveConfig& config) {
    for (const auto& c : config.components())
        if (c.genus > 1)
            throw invalid_input("component of genus " + std::to_string(c.genus) +
                                " (only genus 0 and 1 are supported)");
}

/// deg(K + floor(B) + floor((n+1){B})/n) restricted to component i.
inline Rational component_degree(const CurveConfig& config, std::size_t i, std::int64_t n) {
    const auto& comp = config.components()[i];
    Rational deg(2 * comp.genus - 2 + config.neighbour_points(i));
    for (const auto& e : comp.boundary.entries())
        deg += e.mult.is_reduced() ? Rational(1) : floor_shift(e.mult, n);
    return deg;
}

}  // namespace detail

/// Whether (C, B) has an n-complement.
inline bool complement_exists(const CurveConfig& config, std::int64_t n) {
    if (n < 1) throw invalid_input("complement index must be positive");
    detail::require_low_genus(config);
    for (std::size_t i = 0; i < config.size(); ++i)
        if (detail::component_degree(config, i, n).sign() > 0) return false;
    return true;
}

inline constexpr std::int64_t default_index_bound = 66;

/// Smallest n <= bound with an n-complement.
inline std::optional<std::int64_t> minimal_complement_index(const CurveConfig& config,
                                                            std::int64_t bound = default_index_bound) {
    if (bound < 1) throw invalid_input("index bound must be positive");
    detail::require_low_genus(config);
    for (std::int64_t n = 1; n <= bound; ++n)
        if (complement_exists(config, n)) return n;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chains that are 1- but not 2-complementary

struct ChainComplementReport {
    bool one_complement = false;
    bool two_complement = false;
    bool one_not_two = false;
    /// Some end component has all its fractional multiplicities in Z/3 and
    /// modified degree 1 (boundary degree plus neighbour points, minus one).
    bool end_shape = false;
    bool four_complement = false;
    bool six_complement = false;
};

inline ChainComplementReport one_not_two(const CurveConfig& config) {
    if (config.shape() != CurveShape::Chain) throw invalid_input("one_not_two expects a chain");
    ChainComplementReport r;
    r.one_complement = complement_exists(config, 1);
    r.two_complement = complement_exists(config, 2);
    r.one_not_two = r.one_complement && !r.two_complement;
    r.four_complement = complement_exists(config, 4);
    r.six_complement = complement_exists(config, 6);

    auto end_ok = [&](std::size_t i) {
        const auto& b = config.components()[i].boundary;
        for (const auto& e : b.entries())
            if (!e.mult.is_reduced() && !(e.mult.value() * Rational(3)).is_integer()) return false;
        return b.degree() + Rational(config.neighbour_points(i) - 1) == Rational(1);
    };
    r.end_shape = end_ok(0) || end_ok(config.size() - 1);
    return r;
}

// ---------------------------------------------------------------------------
// Projective space with generic hyperplanes

/// Hyperplanes in general position on P^d: n-complement criterion
/// sum floor((n+1) b_i)/n <= d + 1. All b_i must be < 1.
inline bool pd_complement_exists(std::int64_t d, const Boundary& b, std::int64_t n) {
    if (d < 1) throw invalid_input("dimension must be positive");
    if (n < 1) throw invalid_input("complement index must be positive");
    Rational sum;
    for (const auto& e : b.entries()) {
        if (e.mult.is_reduced()) throw invalid_input("pd_complement_exists needs multiplicities < 1");
        sum += floor_shift(e.mult, n);
    }
    return sum <= Rational(d + 1);
}

/// sum b_i <= d + 1.
inline bool pd_ec_check(std::int64_t d, const Boundary& b) {
    if (d < 1) throw invalid_input("dimension must be positive");
    return b.degree() <= Rational(d + 1);
}

// ---------------------------------------------------------------------------
// Galois-invariant complements on a rational curve

struct Orbit {
    std::int64_t size = 1;
    Multiplicity mult;
};

using OrbitBoundary = std::vector<Orbit>;

enum class DegreeConvention {
    Exact,   ///< sum size * b+ = 2, i.e. deg(K + B+) = 0
    AtMost,  ///< sum size * b+ <= 2
};

/// Boundary with every orbit expanded into its points.
inline Boundary expand_orbits(const OrbitBoundary& orbits) {
    Boundary b;
    for (const auto& o : orbits)
        for (std::int64_t k = 0; k < o.size; ++k) b.add(o.mult);
    return b;
}

/// Whether there is an orbit-constant b+ with b+ >= floor((n+1)b)/n,
/// b+ in Z/n and b+ <= 1 on every orbit, of total degree 2 (Exact) or at most
/// 2 (AtMost).
inline bool invariant_complement_exists(const OrbitBoundary& orbits, std::int64_t n,
                                        DegreeConvention conv = DegreeConvention::Exact) {
    if (n < 1) throw invalid_input("complement index must be positive");
    // Work in units of 1/n: orbit o starts at base_o and may rise to n.
    std::int64_t base_total = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> room;  // (size, max extra units)
    for (const auto& o : orbits) {
        if (o.size < 1) throw invalid_input("orbit size must be positive");
        std::int64_t base = o.mult.is_reduced()
                                ? n
                                : static_cast<std::int64_t>(floor_shift_units(o.mult, n));
        base_total += o.size * base;
        room.emplace_back(o.size, n - base);
    }
    const std::int64_t target = 2 * n;
    if (base_total > target) return false;
    if (conv == DegreeConvention::AtMost) return true;

    const std::int64_t need = target - base_total;
    std::vector<char> reachable(static_cast<std::size_t>(need + 1), 0);
    reachable[0] = 1;
    for (const auto& [size, extra] : room) {
        std::vector<char> next = reachable;
        for (std::int64_t s = 0; s <= need; ++s) {
            if (!reachable[static_cast<std::size_t>(s)]) continue;
            for (std::int64_t k = 1; k <= extra && s + k * size <= need; ++k)
                next[static_cast<std::size_t>(s + k * size)] = 1;
        }
        reachable.swap(next);
    }
    return reachable[static_cast<std::size_t>(need)] != 0;
}

}  // namespace complements
