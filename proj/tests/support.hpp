// Small helpers shared by the unit tests.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "complements.hpp"

namespace testing_support {

using complements::Boundary;
using complements::CurveConfig;
using complements::Rational;

inline Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

inline CurveConfig p1(std::initializer_list<Rational> mults) { return CurveConfig::rational(Boundary::of(mults)); }

inline CurveConfig p1(const std::vector<Rational>& mults) {
    return CurveConfig::rational(Boundary::of(std::span<const Rational>(mults)));
}

/// Independent oracle for the P^1 criterion in plain integers: with all b = p/q
/// fractional, an N-complement exists iff sum floor((N+1) p/q) <= 2N.
inline bool p1_oracle(const std::vector<std::pair<std::int64_t, std::int64_t>>& b, std::int64_t n) {
    std::int64_t s = 0;
    for (auto [p, q] : b) s += (n + 1) * p / q;
    return s <= 2 * n;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> reduced_fractions(std::int64_t max_den) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t q = 2; q <= max_den; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

}  // namespace testing_support
