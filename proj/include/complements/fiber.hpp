// Classification of log minimal models of genus-1 degenerations.
//
// A model is the reduced central curve C together with the singular points of
// the surface on it. Points are recorded as decorations: a Du Val point of
// type A(i), or a simple point whose minimal resolution is one (-k)-curve.
// Self-intersections are those of the components on the minimal resolution,
// so the central curve of types II-IV is a (-1)-curve and that of the starred
// types a (-2)-curve.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "complements/boundary.hpp"
#include "complements/curve_complements.hpp"
#include "complements/dual_graph.hpp"

namespace complements {

struct Decoration {
    enum class Kind { DuValA, Simple };
    Kind kind = Kind::DuValA;
    /// i for A(i), k for a simple point resolved by a (-k)-curve.
    std::int64_t value = 1;

    static Decoration A(std::int64_t i) {
        if (i < 1) throw invalid_input("A(i) needs i >= 1");
        return {Kind::DuValA, i};
    }
    /// A (-2)-curve is A(1); k >= 3 gives a non-Du-Val point.
    static Decoration simple(std::int64_t k) {
        if (k < 2) throw invalid_input("a simple point needs a (-k)-curve with k >= 2");
        if (k == 2) return A(1);
        return {Kind::Simple, k};
    }

    /// Parses "A3" or "(-3)".
    static Decoration parse(const std::string& text) {
        auto number = [&](std::string_view digits) {
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw invalid_input("malformed decoration \"" + text + "\"");
            return std::stoll(std::string(digits));
        };
        std::string_view t(text);
        if (t.size() > 1 && t.front() == 'A') return A(number(t.substr(1)));
        if (t.size() > 3 && t.substr(0, 2) == "(-" && t.back() == ')') return simple(number(t.substr(2, t.size() - 3)));
        throw invalid_input("malformed decoration \"" + text + "\" (expected A<i> or (-<k>))");
    }

    /// Multiplicity of the different at the point: i/(i+1) for A(i),
    /// (k-1)/k for a (-k)-curve.
    Rational different() const {
        return kind == Kind::DuValA ? Rational(value, value + 1) : Rational(value - 1, value);
    }

    std::string str() const {
        return kind == Kind::DuValA ? "A" + std::to_string(value) : "(-" + std::to_string(value) + ")";
    }
    friend bool operator==(const Decoration&, const Decoration&) = default;
    friend auto operator<=>(const Decoration& a, const Decoration& b) {
        return std::pair(a.kind, a.value) <=> std::pair(b.kind, b.value);
    }
};

struct FiberComponent {
    int genus = 0;
    int node_count = 0;
    /// Self-intersection on the minimal resolution.
    std::int64_t self_intersection = -2;
    std::vector<Decoration> decorations;
    /// Multiplicity of the component in the fibre.
    std::int64_t multiplicity = 1;
};

struct FiberModel {
    CurveShape shape = CurveShape::Irreducible;
    std::vector<FiberComponent> components;
    /// The surface is non-singular along C except at the decorated points;
    /// enables contraction of internal (-1)-curves.
    bool smooth_ambient = false;
};

struct KodairaType {
    enum class Tag { mI, Istar, II, IIstar, III, IIIstar, IV, IVstar };
    Tag tag = Tag::mI;
    std::int64_t m = 1;
    std::int64_t b = 0;

    static KodairaType multiplicative(std::int64_t m, std::int64_t b) {
        if (m < 1 || b < 0) throw invalid_input("mI_b needs m >= 1 and b >= 0");
        return {Tag::mI, m, b};
    }
    static KodairaType istar(std::int64_t b) {
        if (b < 0) throw invalid_input("I_b* needs b >= 0");
        return {Tag::Istar, 1, b};
    }

    std::string str() const {
        switch (tag) {
            case Tag::mI: return (m == 1 ? std::string() : std::to_string(m)) + "I_" + std::to_string(b);
            case Tag::Istar: return "I_" + std::to_string(b) + "*";
            case Tag::II: return "II";
            case Tag::IIstar: return "II*";
            case Tag::III: return "III";
            case Tag::IIIstar: return "III*";
            case Tag::IV: return "IV";
            case Tag::IVstar: return "IV*";
        }
        return "?";
    }
    friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// 1 for mI, 2 for I_b*, 6 for II and II*, 4 for III and III*, 3 for IV and IV*.
inline std::int64_t complement_index(const KodairaType& t) {
    using T = KodairaType::Tag;
    switch (t.tag) {
        case T::mI: return 1;
        case T::Istar: return 2;
        case T::II:
        case T::IIstar: return 6;
        case T::III:
        case T::IIIstar: return 4;
        case T::IV:
        case T::IVstar: return 3;
    }
    return 0;
}

/// The different B_C on the central rational curve (empty for mI).
inline Boundary fiber_different(const KodairaType& t) {
    using T = KodairaType::Tag;
    switch (t.tag) {
        case T::mI: return {};
        case T::Istar: return Boundary::of({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
        case T::II:
        case T::IIstar: return Boundary::of({Rational(1, 2), Rational(2, 3), Rational(5, 6)});
        case T::III:
        case T::IIIstar: return Boundary::of({Rational(1, 2), Rational(3, 4), Rational(3, 4)});
        case T::IV:
        case T::IVstar: return Boundary::of({Rational(2, 3), Rational(2, 3), Rational(2, 3)});
    }
    return {};
}

/// Curve configuration on which the index of type t is computed: the central
/// rational curve with its different, or a genus-1 curve for mI.
inline CurveConfig fiber_curve(const KodairaType& t) {
    if (t.tag == KodairaType::Tag::mI) {
        if (t.b == 0) return CurveConfig::irreducible(1, {});
        if (t.b == 1) return CurveConfig::irreducible(1, {});  // nodal, arithmetic genus 1
        return CurveConfig(CurveShape::Wheel, std::vector<CurveComponent>(static_cast<std::size_t>(t.b)));
    }
    return CurveConfig::rational(fiber_different(t));
}

// ---------------------------------------------------------------------------
// Resolution graph

/// Minimal resolution of the model: the central components followed by the
/// resolution curves of every decoration (A(i) as a chain of i (-2)-curves
/// meeting C at one end). All vertices are marked Exceptional so that the
/// intersection matrix covers the whole fibre.
inline DualGraph resolved_graph(const FiberModel& f) {
    DualGraph g;
    const std::size_t k = f.components.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = f.components[i];
        g.add_exceptional("C" + std::to_string(i + 1), c.self_intersection, c.genus, c.node_count);
    }
    if (f.shape == CurveShape::Chain)
        for (std::size_t i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    if (f.shape == CurveShape::Wheel) {
        if (k == 2) {
            g.add_edge(0, 1, 2);
        } else {
            for (std::size_t i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        int point = 0;
        for (const auto& d : f.components[i].decorations) {
            std::string base = "C" + std::to_string(i + 1) + "P" + std::to_string(++point) + "E";
            if (d.kind == Decoration::Kind::Simple) {
                g.add_edge(i, g.add_exceptional(base + "1", -d.value));
                continue;
            }
            std::size_t prev = i;
            for (std::int64_t j = 1; j <= d.value; ++j) {
                std::size_t v = g.add_exceptional(base + std::to_string(j), -2);
                g.add_edge(prev, v);
                prev = v;
            }
        }
    }
    return g;
}

/// The intersection matrix is negative semi-definite with a one-dimensional
/// kernel: det = 0 and the matrix with the first vertex removed is negative
/// definite (eigenvalue interlacing).
inline bool fiber_kernel_ok(const DualGraph& g) {
    auto m = detail::to_rational(g.matrix_of(g.exceptional_vertices()));
    if (m.empty()) return false;
    if (!detail::determinant(m).is_zero()) return false;
    detail::Matrix minor;
    for (std::size_t r = 1; r < m.size(); ++r) minor.emplace_back(m[r].begin() + 1, m[r].end());
    return detail::negative_definite(minor);
}

// ---------------------------------------------------------------------------
// Normalization and classification

/// Contracts undecorated smooth rational (-1)-components in the interior of a
/// chain or on a wheel, when the ambient surface is smooth along C.
inline FiberModel normalize_fiber(FiberModel f) {
    if (!f.smooth_ambient) return f;
    auto contractible = [](const FiberComponent& c) {
        return c.self_intersection == -1 && c.genus == 0 && c.node_count == 0 && c.decorations.empty();
    };
    bool changed = true;
    while (changed) {
        changed = false;
        auto& cs = f.components;
        if (f.shape == CurveShape::Chain) {
            for (std::size_t i = 1; i + 1 < cs.size(); ++i) {
                if (!contractible(cs[i])) continue;
                cs[i - 1].self_intersection += 1;
                cs[i + 1].self_intersection += 1;
                cs.erase(cs.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        } else if (f.shape == CurveShape::Wheel) {
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (!contractible(cs[i])) continue;
                if (cs.size() == 2) {
                    // The survivor meets the (-1)-curve twice and acquires a node.
                    auto other = cs[1 - i];
                    other.self_intersection += 4;
                    other.node_count += 1;
                    cs = {other};
                    f.shape = CurveShape::Irreducible;
                } else {
                    cs[(i + cs.size() - 1) % cs.size()].self_intersection += 1;
                    cs[(i + 1) % cs.size()].self_intersection += 1;
                    cs.erase(cs.begin() + static_cast<long>(i));
                }
                changed = true;
                break;
            }
        }
    }
    return f;
}

/// Raised for models that match none of the genus-1 log minimal models.
class unrecognized_fiber : public invalid_input {
public:
    using invalid_input::invalid_input;
};

namespace detail {

inline std::vector<Decoration> sorted(std::vector<Decoration> d) {
    std::sort(d.begin(), d.end());
    return d;
}

inline KodairaType match_decorated(const FiberComponent& c) {
    using D = Decoration;
    using T = KodairaType::Tag;
    auto decs = sorted(c.decorations);
    auto same = [&](std::vector<D> want) { return decs == sorted(std::move(want)); };

    if (c.self_intersection == -1) {
        if (same({D::A(1), D::simple(3), D::simple(6)})) return {T::II, 1, 0};
        if (same({D::A(1), D::simple(4), D::simple(4)})) return {T::III, 1, 0};
        if (same({D::simple(3), D::simple(3), D::simple(3)})) return {T::IV, 1, 0};
    }
    if (c.self_intersection == -2) {
        if (same({D::A(1), D::A(1), D::A(1), D::A(1)})) return KodairaType::istar(0);
        if (same({D::A(1), D::A(2), D::A(5)})) return {T::IIstar, 1, 0};
        if (same({D::A(1), D::A(3), D::A(3)})) return {T::IIIstar, 1, 0};
        if (same({D::A(2), D::A(2), D::A(2)})) return {T::IVstar, 1, 0};
    }
    std::string list;
    for (const auto& d : c.decorations) list += (list.empty() ? "" : ", ") + d.str();
    throw unrecognized_fiber("no fibre type has decorations {" + list + "} on a (" +
                             std::to_string(c.self_intersection) + ")-curve");
}

}  // namespace detail

inline KodairaType classify_fiber(const FiberModel& input) {
    if (input.components.empty()) throw invalid_input("fibre model without components");
    for (const auto& c : input.components) {
        if (c.genus < 0 || c.node_count < 0) throw invalid_input("negative genus or node count");
        if (c.multiplicity < 1) throw invalid_input("component multiplicity must be positive");
    }
    FiberModel f = normalize_fiber(input);
    const auto& cs = f.components;
    const std::int64_t m = cs.front().multiplicity;
    const bool uniform = std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return c.multiplicity == m; });
    auto undecorated = [](const FiberComponent& c) { return c.decorations.empty(); };
    auto smooth_rational = [](const FiberComponent& c) { return c.genus == 0 && c.node_count == 0; };

    KodairaType t;
    if (cs.size() == 1) {
        const auto& c = cs.front();
        if (c.genus == 1 && c.node_count == 0 && undecorated(c)) {
            t = KodairaType::multiplicative(m, 0);
        } else if (c.genus == 0 && c.node_count == 1 && undecorated(c)) {
            t = KodairaType::multiplicative(m, 1);
        } else if (smooth_rational(c) && !c.decorations.empty()) {
            t = detail::match_decorated(c);
        } else {
            throw unrecognized_fiber("irreducible central curve of genus " + std::to_string(c.genus) + " with " +
                                     std::to_string(c.node_count) + " nodes and " +
                                     std::to_string(c.decorations.size()) + " singular points");
        }
    } else if (f.shape == CurveShape::Wheel) {
        if (!std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return smooth_rational(c) && undecorated(c); }))
            throw unrecognized_fiber("a wheel fibre consists of smooth rational curves through smooth points");
        if (!uniform) throw invalid_input("wheel components must share one multiplicity (f*P = mC)");
        t = KodairaType::multiplicative(m, static_cast<std::int64_t>(cs.size()));
    } else {
        // Chain: I_b* with b + 1 components, two A1 points on each end.
        const std::vector<Decoration> two_a1{Decoration::A(1), Decoration::A(1)};
        for (std::size_t i = 0; i < cs.size(); ++i) {
            bool end = i == 0 || i + 1 == cs.size();
            if (!smooth_rational(cs[i]) || (end ? cs[i].decorations != two_a1 : !cs[i].decorations.empty()))
                throw unrecognized_fiber("a chain fibre must carry exactly two A1 points on each end and none inside");
        }
        t = KodairaType::istar(static_cast<std::int64_t>(cs.size()) - 1);
    }

    if (t.tag != KodairaType::Tag::mI) {
        if (m != 1 || !uniform) throw invalid_input("only fibres of type I_b can be multiple");
        if (std::any_of(cs.begin(), cs.end(), [](const auto& c) { return c.self_intersection != -2; }) &&
            !(cs.size() == 1 && cs.front().self_intersection == -1))
            throw unrecognized_fiber("central curves of types I_b*, II*, III*, IV* are (-2)-curves");
    }
    if (!fiber_kernel_ok(resolved_graph(f)))
        throw unrecognized_fiber("resolution of the " + t.str() +
                                 " pattern is not a fibre (intersection matrix is not semi-definite of corank 1)");
    return t;
}

}  // namespace complements
