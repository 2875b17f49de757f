// Small dense exact linear algebra over Rational.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "complements/rational.hpp"

namespace complements::detail {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix to_rational(const std::vector<std::vector<std::int64_t>>& m) {
    Matrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto v : m[i]) r[i].emplace_back(v);
    return r;
}

inline Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

/// Determinants of the k x k upper-left blocks, k = 1..n.
inline std::vector<Rational> leading_minors(const Matrix& a) {
    std::vector<Rational> out;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        Matrix block(k);
        for (std::size_t i = 0; i < k; ++i) block[i].assign(a[i].begin(), a[i].begin() + static_cast<long>(k));
        out.push_back(determinant(std::move(block)));
    }
    return out;
}

/// Negative definite iff (-1)^k det(M_k) > 0 for every leading block.
inline bool negative_definite(const Matrix& a) {
    auto minors = leading_minors(a);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        int expected = (k % 2 == 0) ? -1 : 1;  // block size k+1
        if (minors[k].sign() != expected) return false;
    }
    return true;
}

inline std::size_t rank(Matrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves a x = b; nullopt when a is singular.
inline std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

}  // namespace complements::detail
