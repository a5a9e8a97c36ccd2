#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

/// Whether the rank-3 Coxeter group with these coefficients is finite:
/// all three labels finite and 1/m1 + 1/m2 + 1/m3 > 1. Decided in exact
/// integer arithmetic by clearing denominators.
inline bool triangle_is_spherical(Label m1, Label m2, Label m3) {
    if (m1.is_infinite() || m2.is_infinite() || m3.is_infinite()) return false;
    using u128 = unsigned __int128;
    const u128 a = m1.value(), b = m2.value(), c = m3.value();
    return b * c + a * c + a * b > a * b * c;
}

inline constexpr double kCosinePivotTolerance = 1e-9;

/// Finite-Coxeter recognition on a clique: the symmetric matrix with unit
/// diagonal and off-diagonal -cos(pi/m_ij) must be positive definite.
/// Positive definiteness is decided by LDL^T pivots (ratios of consecutive
/// leading principal minors) against kCosinePivotTolerance, which keeps the
/// test stable for large cliques where the raw minors underflow.
/// Every off-diagonal label must be finite; callers short-circuit infinity.
inline bool cosine_matrix_is_positive_definite(std::span<const double> matrix, int k) {
    std::vector<double> a(matrix.begin(), matrix.end());
    std::vector<double> d(k, 0.0);
    for (int j = 0; j < k; ++j) {
        double pivot = a[j * k + j];
        for (int t = 0; t < j; ++t) {
            const double l = a[j * k + t];
            pivot -= l * l * d[t];
        }
        if (!(pivot > kCosinePivotTolerance)) return false;
        d[j] = pivot;
        for (int i = j + 1; i < k; ++i) {
            double v = a[i * k + j];
            for (int t = 0; t < j; ++t) v -= a[i * k + t] * a[j * k + t] * d[t];
            a[i * k + j] = v / pivot;
        }
    }
    return true;
}

inline bool coxeter_clique_is_finite(const DefiningGraph& g, std::span<const int> clique) {
    const int k = static_cast<int>(clique.size());
    if (k <= 2) return true;  // rank <= 2 with finite labels is dihedral
    std::vector<double> a(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) {
        a[i * k + i] = 1.0;
        for (int j = i + 1; j < k; ++j) {
            const Label l = g.label(clique[i], clique[j]);
            const double v = -std::cos(std::numbers::pi / l.value());
            a[i * k + j] = v;
            a[j * k + i] = v;
        }
    }
    return cosine_matrix_is_positive_definite(a, k);
}

/// Convenience overload for an explicit label matrix over a clique.
inline bool coxeter_clique_is_finite(const std::vector<std::vector<Label>>& labels) {
    const int k = static_cast<int>(labels.size());
    if (k <= 2) return true;
    std::vector<double> a(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i) {
        a[i * k + i] = 1.0;
        for (int j = i + 1; j < k; ++j) {
            const double v = -std::cos(std::numbers::pi / labels[i][j].value());
            a[i * k + j] = v;
            a[j * k + i] = v;
        }
    }
    return cosine_matrix_is_positive_definite(a, k);
}

}  // namespace artin
