// Boundary multiplicities and the floor-shift calculus on them.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "complements/rational.hpp"

namespace complements {

/// A boundary coefficient b with 0 <= b <= 1. Construction rejects anything
/// else; values are never clamped.
class Multiplicity {
public:
    Multiplicity() = default;
    Multiplicity(Rational value) : value_(std::move(value)) {  // NOLINT: implicit by intent
        if (value_.sign() < 0 || value_ > Rational(1))
            throw invalid_input("multiplicity " + value_.str() + " outside [0,1]");
    }
    Multiplicity(std::int64_t n, std::int64_t d) : Multiplicity(Rational(n, d)) {}

    static Multiplicity parse(std::string_view text) { return Multiplicity(Rational::parse(text)); }

    const Rational& value() const { return value_; }
    operator const Rational&() const { return value_; }  // NOLINT

    bool is_reduced() const { return value_ == Rational(1); }
    bool is_zero() const { return value_.is_zero(); }

    friend bool operator==(const Multiplicity& a, const Multiplicity& b) { return a.value_ == b.value_; }
    friend auto operator<=>(const Multiplicity& a, const Multiplicity& b) { return a.value_ <=> b.value_; }

    std::string str() const { return value_.str(); }

private:
    Rational value_;
};

/// Labelled multiset of multiplicities (the points or prime divisors of a
/// boundary together with their coefficients). Labels are unique.
class Boundary {
public:
    struct Entry {
        std::string label;
        Multiplicity mult;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    Boundary() = default;

    /// Unlabelled entries get labels P1, P2, ...
    static Boundary of(std::initializer_list<Rational> mults) {
        Boundary b;
        for (const auto& m : mults) b.add(Multiplicity(m));
        return b;
    }
    static Boundary of(std::span<const Rational> mults) {
        Boundary b;
        for (const auto& m : mults) b.add(Multiplicity(m));
        return b;
    }

    void add(std::string label, Multiplicity m) {
        for (const auto& e : entries_)
            if (e.label == label) throw invalid_input("duplicate boundary label \"" + label + "\"");
        entries_.push_back({std::move(label), std::move(m)});
    }
    void add(Multiplicity m) { add("P" + std::to_string(entries_.size() + 1), std::move(m)); }

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Rational degree() const {
        Rational d;
        for (const auto& e : entries_) d += e.mult.value();
        return d;
    }

    std::vector<Rational> values() const {
        std::vector<Rational> v;
        v.reserve(entries_.size());
        for (const auto& e : entries_) v.push_back(e.mult.value());
        return v;
    }

    friend bool operator==(const Boundary&, const Boundary&) = default;

private:
    std::vector<Entry> entries_;
};

// ---------------------------------------------------------------------------
// Index sets

enum class IndexSetLabel { RN1, RN2, N1 };

/// Regular complement indices. RN2 = N1 = {1,2,3,4,6}, RN1 = {1,2}.
inline std::span<const int> index_set(IndexSetLabel label) {
    static constexpr std::array<int, 5> regular{1, 2, 3, 4, 6};
    static constexpr std::array<int, 2> rn1{1, 2};
    if (label == IndexSetLabel::RN1) return rn1;
    return regular;
}

inline bool is_regular_index(std::int64_t n) {
    auto s = index_set(IndexSetLabel::RN2);
    return std::find(s.begin(), s.end(), n) != s.end();
}

// ---------------------------------------------------------------------------
// Floor shift and the multiplicity predicates

/// floor((n+1) b), the numerator of floor_shift over n.
inline BigInt floor_shift_units(const Multiplicity& b, std::int64_t n) {
    const Rational& v = b.value();
    return (v.numerator() * (n + 1)) / v.denominator();  // v >= 0, so truncation is floor
}

/// floor((n+1) b) / n.
inline Rational floor_shift(const Multiplicity& b, std::int64_t n) {
    if (n < 1) throw invalid_input("floor_shift needs n >= 1");
    return Rational(floor_shift_units(b, n), BigInt(n));
}

/// Numerator of floor_shift over n, i.e. floor((n+1) b). Cheap integer form
/// used by the enumerators.
inline std::int64_t shifted_floor(std::int64_t p, std::int64_t q, std::int64_t n) { return (n + 1) * p / q; }

/// b = 1, or b = (m-1)/m for an integer m >= 1.
inline bool is_standard(const Multiplicity& b) {
    const Rational& v = b.value();
    // (m-1)/m in lowest terms has numerator = denominator - 1.
    return v == Rational(1) || v.numerator() + 1 == v.denominator();
}

/// Standard, or at least 6/7.
inline bool satisfies_M(const Multiplicity& b) { return is_standard(b) || b.value() >= Rational(6, 7); }

/// Whether floor((n+1)(r - eps))/n = floor((n+1) r)/n for all small eps > 0;
/// equivalently r is not in Z/(n+1).
inline bool monotonicity_drop_stable(const Multiplicity& r, std::int64_t n) {
    if (n < 1) throw invalid_input("monotonicity_drop_stable needs n >= 1");
    return !(r.value() * Rational(n + 1)).is_integer();
}

}  // namespace complements
