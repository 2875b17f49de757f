// Enumerator for the multipliers m with which a rational curve of minimal
// complementary index n is (n+1)m-complementary.
//
// Boundaries range over multisets of at most max_components multiplicities in
// (0,1) with denominator <= max_denominator and total degree < 2. Only those
// whose minimal complementary index is exactly n contribute; for each, m is the
// least positive integer with an (n+1)m-complement.
//
// On P^1 with fractional B the N-complement test is the integer inequality
// sum floor((N+1) b_i) <= 2N, so a multiplicity only matters through its
// vector of floors over the finitely many N that are inspected. Multiplicities
// with equal floor vectors form an interval, and the smallest member of each
// interval dominates the rest for the degree constraint, so the search runs
// over interval representatives only. The depth of the m search is doubled
// until every representative settles, which makes the reduction exact.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "complements/boundary.hpp"

namespace complements {

struct MultiplierTableOptions {
    std::int64_t n = 1;
    int max_components = 4;
    std::int64_t max_denominator = 60;
    /// 0 = hardware concurrency.
    unsigned workers = 0;
};

struct MultiplierTable {
    std::int64_t n = 0;
    std::set<std::int64_t> multipliers;
    /// Number of representative boundaries realizing each m.
    std::map<std::int64_t, std::uint64_t> class_counts;
    /// Lexicographically first representative boundary for each m.
    std::map<std::int64_t, std::vector<Rational>> witnesses;
    /// Largest m that was inspected.
    std::int64_t search_depth = 0;
    std::size_t representatives = 0;
};

namespace detail {

struct FloorClass {
    std::int64_t p = 0;
    std::int64_t q = 1;
    std::vector<std::int32_t> floors;  // floor((N+1) p/q) for each inspected N
};

struct ShardResult {
    std::map<std::int64_t, std::uint64_t> counts;
    std::map<std::int64_t, std::vector<std::size_t>> witnesses;
    bool unsettled = false;
};

/// Exact running degree. Uses a fixed common denominator when it fits into
/// 128 bits, otherwise falls back to Rational.
template <typename Acc>
struct DegreeArith;

template <>
struct DegreeArith<__int128> {
    __int128 scale = 0;
    __int128 of(const FloorClass& c) const { return scale / c.q * c.p; }
    __int128 two() const { return 2 * scale; }
};

template <>
struct DegreeArith<Rational> {
    Rational of(const FloorClass& c) const { return Rational(c.p, c.q); }
    Rational two() const { return Rational(2); }
};

template <typename Acc>
class MultiplierSearch {
public:
    MultiplierSearch(std::int64_t n, int max_components, std::vector<std::int64_t> indices,
                     const std::vector<FloorClass>& classes, DegreeArith<Acc> arith)
        : n_(n),
          max_components_(max_components),
          indices_(std::move(indices)),
          classes_(classes),
          arith_(std::move(arith)) {
        values_.reserve(classes_.size());
        for (const auto& c : classes_) values_.push_back(arith_.of(c));
    }

    ShardResult run(unsigned shard, unsigned shards) {
        ShardResult out;
        std::vector<std::int64_t> sums(indices_.size(), 0);
        std::vector<std::size_t> picked;
        for (std::size_t first = shard; first < classes_.size(); first += shards) {
            if (!(values_[first] < arith_.two())) break;
            descend(first, Acc(values_[first]), sums, picked, out);
        }
        return out;
    }

private:
    // indices_[0..n-1] = 1..n, the rest = (n+1)m for m = 1, 2, ...
    void descend(std::size_t t, const Acc& degree, std::vector<std::int64_t>& sums,
                 std::vector<std::size_t>& picked, ShardResult& out) {
        const auto& f = classes_[t].floors;
        for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += f[i];
        picked.push_back(t);
        if (sums[static_cast<std::size_t>(n_ - 1)] <= 2 * n_) {
            record(sums, picked, out);
            if (static_cast<int>(picked.size()) < max_components_) {
                for (std::size_t u = t; u < classes_.size(); ++u) {
                    Acc next = degree + values_[u];
                    if (!(next < arith_.two())) break;
                    descend(u, next, sums, picked, out);
                }
            }
        }
        picked.pop_back();
        for (std::size_t i = 0; i < sums.size(); ++i) sums[i] -= f[i];
    }

    void record(const std::vector<std::int64_t>& sums, const std::vector<std::size_t>& picked,
                ShardResult& out) const {
        for (std::int64_t k = 0; k + 1 < n_; ++k)
            if (sums[static_cast<std::size_t>(k)] <= 2 * indices_[static_cast<std::size_t>(k)]) return;
        for (std::size_t j = static_cast<std::size_t>(n_); j < indices_.size(); ++j) {
            if (sums[j] <= 2 * indices_[j]) {
                const std::int64_t m = static_cast<std::int64_t>(j) - n_ + 1;
                ++out.counts[m];
                auto it = out.witnesses.find(m);
                if (it == out.witnesses.end() || picked < it->second) out.witnesses[m] = picked;
                return;
            }
        }
        out.unsettled = true;
    }

    std::int64_t n_;
    int max_components_;
    std::vector<std::int64_t> indices_;
    const std::vector<FloorClass>& classes_;
    DegreeArith<Acc> arith_;
    std::vector<Acc> values_;
};

}  // namespace detail

inline MultiplierTable multiplier_table(const MultiplierTableOptions& opt) {
    if (!is_regular_index(opt.n))
        throw invalid_input("multiplier_table needs n in {1,2,3,4,6}, got " + std::to_string(opt.n));
    if (opt.max_components < 1) throw invalid_input("max_components must be positive");
    if (opt.max_denominator < 2) throw invalid_input("max_denominator must be at least 2");

    const std::int64_t n = opt.n;
    std::vector<std::pair<std::int64_t, std::int64_t>> fractions;
    for (std::int64_t q = 2; q <= opt.max_denominator; ++q)
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
    std::sort(fractions.begin(), fractions.end(),
              [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; });

    BigInt scale = 1;
    for (std::int64_t q = 2; q <= opt.max_denominator; ++q) scale = lcm(scale, BigInt(q));
    const bool fits128 = scale * 2 * opt.max_components < (BigInt(1) << 120);

    unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());

    for (std::int64_t depth = 16;; depth *= 2) {
        std::vector<std::int64_t> indices;
        for (std::int64_t k = 1; k <= n; ++k) indices.push_back(k);
        for (std::int64_t m = 1; m <= depth; ++m) indices.push_back((n + 1) * m);

        // Fractions are sorted and floors are monotone, so equal floor vectors
        // are contiguous; keep the first of each run.
        std::vector<detail::FloorClass> classes;
        for (const auto& [p, q] : fractions) {
            std::vector<std::int32_t> f(indices.size());
            for (std::size_t i = 0; i < indices.size(); ++i)
                f[i] = static_cast<std::int32_t>(shifted_floor(p, q, indices[i]));
            if (classes.empty() || classes.back().floors != f) classes.push_back({p, q, std::move(f)});
        }

        std::vector<detail::ShardResult> shards(workers);
        auto run_all = [&](auto search) {
            std::vector<std::thread> pool;
            for (unsigned w = 1; w < workers; ++w)
                pool.emplace_back([&, w, search]() mutable { shards[w] = search.run(w, workers); });
            shards[0] = search.run(0, workers);
            for (auto& th : pool) th.join();
        };
        if (fits128) {
            detail::DegreeArith<__int128> arith;
            for (char ch : scale.str()) arith.scale = arith.scale * 10 + (ch - '0');
            run_all(detail::MultiplierSearch<__int128>(n, opt.max_components, indices, classes, arith));
        } else {
            run_all(detail::MultiplierSearch<Rational>(n, opt.max_components, indices, classes, {}));
        }

        bool unsettled = false;
        MultiplierTable table;
        table.n = n;
        table.search_depth = depth;
        table.representatives = classes.size();
        std::map<std::int64_t, std::vector<std::size_t>> witness_idx;
        for (const auto& s : shards) {
            unsettled = unsettled || s.unsettled;
            for (const auto& [m, c] : s.counts) {
                table.multipliers.insert(m);
                table.class_counts[m] += c;
            }
            for (const auto& [m, w] : s.witnesses) {
                auto it = witness_idx.find(m);
                if (it == witness_idx.end() || w < it->second) witness_idx[m] = w;
            }
        }
        if (unsettled) continue;
        for (const auto& [m, w] : witness_idx) {
            std::vector<Rational> b;
            for (std::size_t t : w) b.emplace_back(classes[t].p, classes[t].q);
            table.witnesses[m] = std::move(b);
        }
        return table;
    }
}

}  // namespace complements
