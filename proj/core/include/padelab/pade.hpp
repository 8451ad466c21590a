#ifndef PADELAB_PADE_HPP
#define PADELAB_PADE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "padelab/detail/linalg.hpp"
#include "padelab/errors.hpp"
#include "padelab/polynomial.hpp"
#include "padelab/power_series.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// Default scale-aware threshold for declaring a floating determinant zero.
inline constexpr double kMembershipTol = 1e-12;
/// Relative guard for denominator evaluation near a pole.
inline constexpr double kPoleTol = 1e-12;
/// Relative tolerance for coefficient agreement in the floating realization.
inline constexpr double kOrderTol = 1e-9;

/// Rational approximant of type (p, q) about a center: numerator degree
/// <= p, denominator degree <= q, denominator constant term equal to one.
/// Both polynomials live in the shifted variable w = z - center.
template <class S>
struct PadeApproximant {
    S center;
    int p = 0;
    int q = 0;
    Polynomial<S> num;
    Polynomial<S> den;
};

/// Outcome of the Hankel normality test. In the exact realization,
/// membership is literally det != 0; in the floating realization it is
/// |det| > tol * max(scale, 1) with scale the Hadamard bound of the matrix.
template <class S>
struct NormalityVerdict {
    bool member = false;
    S det = scalar_traits<S>::zero();
    double scale = 0.0;
};

namespace detail {

/// The q x q coefficient matrix with entry (i, j) = a_{p-q+1+i+j}
/// (zero-based i, j), indices below zero contributing zero.
template <class S>
Matrix<S> hankel_matrix(const PowerSeries<S>& f, int p, int q) {
    Matrix<S> m(static_cast<std::size_t>(q), std::vector<S>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                f.coeff_or_zero(p - q + 1 + i + j);
    return m;
}

} // namespace detail

/// Tests whether the unique (p, q) approximant of f exists. Needs
/// coefficients of f through index p+q-1 when q >= 1; q = 0 is the empty
/// determinant, always a member with det = 1.
template <class S>
NormalityVerdict<S> hankel_determinant(const PowerSeries<S>& f, int p, int q,
                                       double tol = kMembershipTol) {
    if (p < 0 || q < 0) throw ArgumentError("approximant orders must be nonnegative");
    if (q == 0) return {true, scalar_traits<S>::one(), 1.0};
    if (f.order() < p + q - 1)
        throw InsufficientCoefficients("normality test needs coefficients through index p+q-1");
    auto m = detail::hankel_matrix(f, p, q);
    NormalityVerdict<S> verdict;
    verdict.scale = detail::hadamard_bound(m);
    verdict.det = detail::determinant(std::move(m));
    if constexpr (scalar_traits<S>::is_exact) {
        verdict.member = !scalar_traits<S>::is_zero(verdict.det);
    } else {
        verdict.member =
            scalar_traits<S>::magnitude(verdict.det) > tol * std::max(verdict.scale, 1.0);
    }
    return verdict;
}

/// Builds the (p, q) approximant by solving the Toeplitz system
///   sum_{j=0..q} d_j a_{p+i-j} = 0,   i = 1..q,  d_0 = 1,
/// then reading the numerator off the convolution
///   n_k = sum_{j=0..min(k,q)} d_j a_{k-j},  k = 0..p.
/// Requires coefficients through index p+q and a member verdict.
template <class S>
PadeApproximant<S> pade_from_series(const PowerSeries<S>& f, int p, int q,
                                    double tol = kMembershipTol) {
    if (p < 0 || q < 0) throw ArgumentError("approximant orders must be nonnegative");
    if (f.order() < p + q)
        throw InsufficientCoefficients("approximant construction needs coefficients through p+q");
    if (!hankel_determinant(f, p, q, tol).member)
        throw NotNormal("no unique approximant of the requested order exists");

    std::vector<S> den_coeffs(static_cast<std::size_t>(q) + 1, scalar_traits<S>::zero());
    den_coeffs[0] = scalar_traits<S>::one();
    if (q >= 1) {
        detail::Matrix<S> m(static_cast<std::size_t>(q), std::vector<S>(static_cast<std::size_t>(q)));
        std::vector<S> rhs(static_cast<std::size_t>(q));
        for (int i = 1; i <= q; ++i) {
            for (int j = 1; j <= q; ++j)
                m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    f.coeff_or_zero(p + i - j);
            rhs[static_cast<std::size_t>(i - 1)] = -f.coeff(p + i);
        }
        auto d = detail::solve(std::move(m), std::move(rhs));
        for (int j = 1; j <= q; ++j) den_coeffs[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j - 1)];
    }
    std::vector<S> num_coeffs(static_cast<std::size_t>(p) + 1, scalar_traits<S>::zero());
    for (int k = 0; k <= p; ++k) {
        S acc = scalar_traits<S>::zero();
        for (int j = 0; j <= std::min(k, q); ++j)
            acc += den_coeffs[static_cast<std::size_t>(j)] * f.coeff(k - j);
        num_coeffs[static_cast<std::size_t>(k)] = acc;
    }
    return {f.center(), p, q, Polynomial<S>(std::move(num_coeffs)),
            Polynomial<S>(std::move(den_coeffs))};
}

/// num(z-center)/den(z-center). Signals a pole when the denominator
/// vanishes (exactly, or below a relative guard in floating arithmetic).
template <class S>
S evaluate(const PadeApproximant<S>& r, const S& z) {
    const S w = z - r.center;
    const S num = r.num.evaluate(w);
    const S den = r.den.evaluate(w);
    if constexpr (scalar_traits<S>::is_exact) {
        if (scalar_traits<S>::is_zero(den)) throw PoleAtPoint("approximant pole at evaluation point");
    } else {
        if (scalar_traits<S>::magnitude(den) <
            kPoleTol * (1.0 + scalar_traits<S>::magnitude(num)))
            throw PoleAtPoint("approximant pole at evaluation point");
    }
    return num / den;
}

/// Taylor coefficients b_0..b_n of num/den about the approximant's center.
/// Well defined since the denominator's constant term is one.
template <class S>
PowerSeries<S> taylor_of_approximant(const PadeApproximant<S>& r, int n) {
    if (n < 0) throw ArgumentError("truncation order must be nonnegative");
    std::vector<S> num = r.num.coeffs();
    if (num.empty()) num.push_back(scalar_traits<S>::zero());
    return PowerSeries<S>(r.center, divide_series(num, r.den.coeffs(), n));
}

/// Smallest index v <= p+q where the approximant's expansion disagrees with
/// f (exact inequality, or beyond a relative tolerance in floating
/// arithmetic); nullopt when the order condition holds throughout.
template <class S>
std::optional<int> order_defect(const PowerSeries<S>& f, const PadeApproximant<S>& r) {
    const int n = r.p + r.q;
    if (f.order() < n)
        throw InsufficientCoefficients("order check needs coefficients through p+q");
    const auto b = taylor_of_approximant(r, n);
    for (int v = 0; v <= n; ++v) {
        if constexpr (scalar_traits<S>::is_exact) {
            if (b.coeff(v) != f.coeff(v)) return v;
        } else {
            double gap = scalar_traits<S>::magnitude(b.coeff(v) - f.coeff(v));
            if (gap > kOrderTol * (1.0 + scalar_traits<S>::magnitude(f.coeff(v)))) return v;
        }
    }
    return std::nullopt;
}

/// l-th derivative of num/den at z: recenter both polynomials at z, divide
/// as series to order l, and scale the top coefficient by l!. Avoids the
/// combinatorial blowup of the symbolic quotient rule.
template <class S>
S derivative_at(const PadeApproximant<S>& r, const S& z, int ell) {
    if (ell < 0) throw ArgumentError("derivative order must be nonnegative");
    if (ell == 0) return evaluate(r, z);
    const S w = z - r.center;
    const S num0 = r.num.evaluate(w);
    const S den0 = r.den.evaluate(w);
    if constexpr (scalar_traits<S>::is_exact) {
        if (scalar_traits<S>::is_zero(den0)) throw PoleAtPoint("approximant pole at evaluation point");
    } else {
        if (scalar_traits<S>::magnitude(den0) <
            kPoleTol * (1.0 + scalar_traits<S>::magnitude(num0)))
            throw PoleAtPoint("approximant pole at evaluation point");
    }
    const auto num_local = series_of_polynomial(r.num, w, ell);
    const auto den_local = series_of_polynomial(r.den, w, ell);
    const auto quot = divide_series(num_local.coeffs(), den_local.coeffs(), ell);
    S fact = scalar_traits<S>::one();
    for (int k = 2; k <= ell; ++k) fact = fact * scalar_traits<S>::from_int(k);
    return quot[static_cast<std::size_t>(ell)] * fact;
}

namespace detail {

/// Shared rows 2..q+1 of both Jacobi determinants: row r holds
/// a_{p-q+r} .. a_{p-q+r+q}.
template <class S>
void fill_jacobi_coefficient_rows(Matrix<S>& m, const PowerSeries<S>& f, int p, int q) {
    for (int r = 1; r <= q; ++r)
        for (int c = 0; c <= q; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                f.coeff_or_zero(p - q + r + c);
}

} // namespace detail

/// Value of the (p, q) approximant at z straight from the explicit
/// determinant formula: the ratio of two (q+1) x (q+1) determinants whose
/// first rows are (z-center)^{q-k} S_{p-q+k}(z) and (z-center)^{q-k}, with
/// S_k the k-th partial sum (zero for k < 0). Serves as an independent
/// cross-check of the Toeplitz construction.
template <class S>
S jacobi_evaluate(const PowerSeries<S>& f, int p, int q, const S& z,
                  double tol = kMembershipTol) {
    if (p < 0 || q < 0) throw ArgumentError("approximant orders must be nonnegative");
    if (f.order() < p + q)
        throw InsufficientCoefficients("explicit formula needs coefficients through p+q");
    if (!hankel_determinant(f, p, q, tol).member)
        throw NotNormal("no unique approximant of the requested order exists");

    const S w = z - f.center();
    std::vector<S> wpow(static_cast<std::size_t>(q) + 1, scalar_traits<S>::one());
    for (int k = 1; k <= q; ++k) wpow[static_cast<std::size_t>(k)] = wpow[static_cast<std::size_t>(k - 1)] * w;

    const std::size_t n = static_cast<std::size_t>(q) + 1;
    detail::Matrix<S> num_m(n, std::vector<S>(n)), den_m(n, std::vector<S>(n));
    for (int c = 0; c <= q; ++c) {
        const int k = p - q + c;
        S sk = scalar_traits<S>::zero();
        if (k >= 0) sk = partial_sum(f, k).evaluate(w);
        num_m[0][static_cast<std::size_t>(c)] = wpow[static_cast<std::size_t>(q - c)] * sk;
        den_m[0][static_cast<std::size_t>(c)] = wpow[static_cast<std::size_t>(q - c)];
    }
    detail::fill_jacobi_coefficient_rows(num_m, f, p, q);
    detail::fill_jacobi_coefficient_rows(den_m, f, p, q);

    const S num_det = detail::determinant(std::move(num_m));
    const S den_det = detail::determinant(std::move(den_m));
    if constexpr (scalar_traits<S>::is_exact) {
        if (scalar_traits<S>::is_zero(den_det))
            throw PoleAtPoint("explicit-formula denominator vanishes at evaluation point");
    } else {
        if (scalar_traits<S>::magnitude(den_det) <
            kPoleTol * (1.0 + scalar_traits<S>::magnitude(num_det)))
            throw PoleAtPoint("explicit-formula denominator vanishes at evaluation point");
    }
    return num_det / den_det;
}

inline PadeApproximant<Complex> to_float(const PadeApproximant<GaussianRational>& r) {
    return {r.center.to_complex(), r.p, r.q, to_float(r.num), to_float(r.den)};
}

} // namespace padelab

#endif
