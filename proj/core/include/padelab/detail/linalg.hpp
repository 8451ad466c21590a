#ifndef PADELAB_DETAIL_LINALG_HPP
#define PADELAB_DETAIL_LINALG_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "padelab/errors.hpp"
#include "padelab/scalar.hpp"

namespace padelab::detail {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Determinant by Gaussian elimination. Exact realization pivots on the
/// first nonzero entry (division is exact); floating realization uses
/// partial pivoting by magnitude. Empty matrix has determinant one.
template <class S>
S determinant(Matrix<S> m) {
    const int n = static_cast<int>(m.size());
    S det = scalar_traits<S>::one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        if constexpr (scalar_traits<S>::is_exact) {
            for (int r = c; r < n; ++r)
                if (!scalar_traits<S>::is_zero(m[r][c])) { piv = r; break; }
        } else {
            double best = 0.0;
            for (int r = c; r < n; ++r) {
                double a = scalar_traits<S>::magnitude(m[r][c]);
                if (a > best) { best = a; piv = r; }
            }
        }
        if (piv < 0) return scalar_traits<S>::zero();
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -scalar_traits<S>::one() * det;
        }
        det = det * m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (scalar_traits<S>::is_zero(m[r][c])) continue;
            S f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Hadamard bound: product of euclidean row norms, evaluated in double.
template <class S>
double hadamard_bound(const Matrix<S>& m) {
    double prod = 1.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (const auto& x : row) {
            double a = scalar_traits<S>::magnitude(x);
            s += a * a;
        }
        prod *= std::sqrt(s);
    }
    return prod;
}

/// Solves a dense square system in place. Throws if a pivot vanishes
/// (exactly, or to machine scale in the floating realization).
template <class S>
std::vector<S> solve(Matrix<S> m, std::vector<S> rhs) {
    const int n = static_cast<int>(m.size());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        if constexpr (scalar_traits<S>::is_exact) {
            for (int r = c; r < n; ++r)
                if (!scalar_traits<S>::is_zero(m[r][c])) { piv = r; break; }
        } else {
            double best = 0.0;
            for (int r = c; r < n; ++r) {
                double a = scalar_traits<S>::magnitude(m[r][c]);
                if (a > best) { best = a; piv = r; }
            }
        }
        if (piv < 0) throw ComputationError("singular linear system");
        if (piv != c) {
            std::swap(m[piv], m[c]);
            std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(c)]);
        }
        for (int r = c + 1; r < n; ++r) {
            if (scalar_traits<S>::is_zero(m[r][c])) continue;
            S f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(c)];
        }
    }
    std::vector<S> x(static_cast<std::size_t>(n), scalar_traits<S>::zero());
    for (int r = n - 1; r >= 0; --r) {
        S acc = rhs[static_cast<std::size_t>(r)];
        for (int k = r + 1; k < n; ++k) acc -= m[r][k] * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(r)] = acc / m[r][r];
    }
    return x;
}

} // namespace padelab::detail

#endif
