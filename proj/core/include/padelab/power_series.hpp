#ifndef PADELAB_POWER_SERIES_HPP
#define PADELAB_POWER_SERIES_HPP

#include <utility>
#include <vector>

#include "padelab/errors.hpp"
#include "padelab/polynomial.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// Truncated Taylor series about a center: the first coefficients of
/// sum a_v (z - center)^v. Immutable after construction; the truncation
/// order is explicit and operations state how many coefficients they need.
template <class S>
class PowerSeries {
public:
    PowerSeries(S center, std::vector<S> coeffs)
        : center_(std::move(center)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw ArgumentError("power series needs at least one coefficient");
    }

    const S& center() const { return center_; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// a_v for 0 <= v <= order; throws beyond the truncation.
    const S& coeff(int v) const {
        if (v < 0 || v > order())
            throw InsufficientCoefficients("series coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(v)];
    }

    /// a_v with the convention a_v = 0 for v < 0; still throws past the
    /// truncation order, since those coefficients genuinely do not exist.
    S coeff_or_zero(int v) const {
        if (v < 0) return scalar_traits<S>::zero();
        return coeff(v);
    }

private:
    S center_;
    std::vector<S> coeffs_;
};

/// First n+1 Taylor coefficients of P about zeta, by in-place Taylor shift
/// (Horner on the shifted variable). Exact in the exact realization.
template <class S>
PowerSeries<S> series_of_polynomial(const Polynomial<S>& p, const S& zeta, int n) {
    if (n < 0) throw ArgumentError("truncation order must be nonnegative");
    std::vector<S> c = p.coeffs();
    if (c.empty()) c.push_back(scalar_traits<S>::zero());
    const int deg = static_cast<int>(c.size()) - 1;
    for (int i = 0; i <= deg; ++i)
        for (int j = deg - 1; j >= i; --j)
            c[static_cast<std::size_t>(j)] += zeta * c[static_cast<std::size_t>(j + 1)];
    c.resize(static_cast<std::size_t>(n) + 1, scalar_traits<S>::zero());
    return PowerSeries<S>(zeta, std::move(c));
}

/// Degree-<=k truncation as a polynomial in the shifted variable (z - center).
/// k < 0 yields the zero polynomial.
template <class S>
Polynomial<S> partial_sum(const PowerSeries<S>& f, int k) {
    if (k < 0) return {};
    if (k > f.order())
        throw InsufficientCoefficients("partial sum order exceeds available coefficients");
    std::vector<S> c(f.coeffs().begin(), f.coeffs().begin() + k + 1);
    return Polynomial<S>(std::move(c));
}

/// Exponential-function coefficients about zeta: a_v = exp(zeta)/v!.
/// Floating realization only (exp(zeta) is not rational).
inline PowerSeries<Complex> exp_series(Complex zeta, int n) {
    if (n < 0) throw ArgumentError("truncation order must be nonnegative");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    c[0] = std::exp(zeta);
    for (int v = 1; v <= n; ++v) c[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(v - 1)] / static_cast<double>(v);
    return PowerSeries<Complex>(zeta, std::move(c));
}

/// Coefficients of 1/(1-z) about zeta: a_v = (1-zeta)^-(v+1).
template <class S>
PowerSeries<S> geometric_series(const S& zeta, int n) {
    if (n < 0) throw ArgumentError("truncation order must be nonnegative");
    const S one = scalar_traits<S>::one();
    if (zeta == one) throw SingularCenter("geometric series centered on its singularity z = 1");
    const S r = one / (one - zeta);
    std::vector<S> c(static_cast<std::size_t>(n) + 1);
    c[0] = r;
    for (int v = 1; v <= n; ++v) c[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(v - 1)] * r;
    return PowerSeries<S>(zeta, std::move(c));
}

/// First n+1 coefficients of the quotient of two series with den[0] != 0.
/// Standard division recurrence: c_k = (num_k - sum_{j>=1} den_j c_{k-j}) / den_0.
template <class S>
std::vector<S> divide_series(const std::vector<S>& num, const std::vector<S>& den, int n) {
    if (den.empty() || scalar_traits<S>::is_zero(den[0]))
        throw ArgumentError("series division needs a nonzero constant term");
    std::vector<S> c(static_cast<std::size_t>(n) + 1, scalar_traits<S>::zero());
    for (int k = 0; k <= n; ++k) {
        S acc = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)]
                                                 : scalar_traits<S>::zero();
        const int jmax = std::min<int>(k, static_cast<int>(den.size()) - 1);
        for (int j = 1; j <= jmax; ++j)
            acc -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = acc / den[0];
    }
    return c;
}

inline PowerSeries<Complex> to_float(const PowerSeries<GaussianRational>& f) {
    std::vector<Complex> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(a.to_complex());
    return PowerSeries<Complex>(f.center().to_complex(), std::move(c));
}

} // namespace padelab

#endif
