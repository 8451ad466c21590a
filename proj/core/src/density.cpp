#include "padelab/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padelab {

namespace {

double max_abs_pow(const SampleSet& t, int p) {
    double max_abs = 0.0;
    for (auto z : t.points) max_abs = std::max(max_abs, std::abs(z));
    return std::pow(max_abs, p);
}

Polynomial<GaussianRational> with_monomial(const Polynomial<GaussianRational>& base, int p,
                                           const GaussianRational& d) {
    return base + Polynomial<GaussianRational>::monomial(p, d);
}

void check_common(int p, int q, double eps, const SampleSet& t) {
    if (p < 0 || q < 0) throw ArgumentError("approximant orders must be nonnegative");
    if (!(eps > 0.0)) throw ArgumentError("perturbation budget must be positive");
    if (t.points.empty()) throw ArgumentError("sample set must be nonempty");
}

PerturbationResult finish_polynomial(const Polynomial<GaussianRational>& base, int p, int q,
                                     double bound) {
    PerturbationResult result;
    result.d = GaussianRational::from_double(bound / 2.0);
    result.num_perturbed = with_monomial(base, p, result.d);
    result.den = Polynomial<GaussianRational>::constant(GaussianRational(1));
    result.g = RationalFn<GaussianRational>::reduce(result.num_perturbed, result.den);
    result.bound_used = bound;
    result.p = p;
    result.q = q;
    return result;
}

} // namespace

PerturbationResult perturb_polynomial(const Polynomial<GaussianRational>& base, int p, int q,
                                      double eps, const SampleSet& t) {
    check_common(p, q, eps, t);
    if (!base.degree_less_than(p))
        throw DegreeError("perturbation exponent must exceed the base degree");
    const double denom = max_abs_pow(t, p);
    // A sample set sitting at the origin makes the sup constraint vacuous.
    const double bound = denom > 0.0 ? eps / denom : eps;
    return finish_polynomial(base, p, q, bound);
}

PerturbationResult perturb_polynomial_smooth(const Polynomial<GaussianRational>& base, int p, int q,
                                             double eps, int n_smooth, const SampleSet& t) {
    check_common(p, q, eps, t);
    if (n_smooth < 0) throw ArgumentError("derivative order cap must be nonnegative");
    if (!base.degree_less_than(p))
        throw DegreeError("perturbation exponent must exceed the base degree");
    auto mono = to_float(Polynomial<GaussianRational>::monomial(p, GaussianRational(1)));
    double denom = 0.0;
    for (int ell = 0; ell <= n_smooth; ++ell) {
        for (auto z : t.points) denom = std::max(denom, std::abs(mono.evaluate(z)));
        mono = mono.derivative();
    }
    const double bound = denom > 0.0 ? eps / denom : eps;
    return finish_polynomial(base, p, q, bound);
}

PerturbationResult perturb_rational(const Polynomial<GaussianRational>& num,
                                    const Polynomial<GaussianRational>& den, int p, int q,
                                    double eps, const SampleSet& t,
                                    std::optional<int> n_smooth) {
    check_common(p, q, eps, t);
    if (n_smooth && *n_smooth < 0) throw ArgumentError("derivative order cap must be nonnegative");
    if (den.is_zero()) throw ArgumentError("rational perturbation needs a nonzero denominator");
    if (!num.is_zero() && !gcd(num, den).degree_less_than(1))
        throw ArgumentError("numerator and denominator must be coprime");
    if (!num.degree_less_than(p))
        throw DegreeError("perturbation exponent must exceed the numerator degree");
    if (den.degree() && q <= *den.degree())
        throw DegreeError("denominator order must exceed the denominator degree");

    const auto den_float = to_float(den);
    double min_den = std::numeric_limits<double>::infinity();
    for (auto z : t.points) min_den = std::min(min_den, std::abs(den_float.evaluate(z)));
    if (!(min_den > 0.0))
        throw ArgumentError("sample set touches a zero of the denominator");

    const double denom = max_abs_pow(t, p);
    const double bound = denom > 0.0 ? eps * min_den / denom : eps;

    PerturbationResult result;
    result.p = p;
    result.q = q;
    result.bound_used = bound;

    // Excluded values come from the nonzero zeros of the denominator. A
    // zero at the origin is exact (trailing zero coefficients) and needs no
    // exclusion: the reduced numerator cannot vanish there.
    const auto num_float = to_float(num);
    auto deflated = den_float.coeffs();
    while (!deflated.empty() && deflated.front() == Complex{0.0, 0.0})
        deflated.erase(deflated.begin());
    std::vector<Complex> excluded;
    if (Polynomial<Complex> tail{deflated}; !tail.degree_less_than(1)) {
        for (auto rho : polynomial_roots(tail))
            excluded.push_back(-num_float.evaluate(rho) / std::pow(rho, p));
    }
    for (auto v : excluded)
        result.excluded_values.push_back(GaussianRational::from_double(v.real(), v.imag()));

    // Largest derivative amplification of z^p / B over T, so the smooth
    // condition on a candidate d reduces to d * amplification < eps.
    double amplification = 0.0;
    if (n_smooth) {
        const auto mono = to_float(Polynomial<GaussianRational>::monomial(p, GaussianRational(1)));
        for (auto z : t.points) {
            const auto num_local = series_of_polynomial(mono, z, *n_smooth);
            const auto den_local = series_of_polynomial(den_float, z, *n_smooth);
            const auto quot = divide_series(num_local.coeffs(), den_local.coeffs(), *n_smooth);
            double fact = 1.0;
            for (int ell = 0; ell <= *n_smooth; ++ell) {
                if (ell > 1) fact *= static_cast<double>(ell);
                amplification = std::max(amplification, fact * std::abs(quot[static_cast<std::size_t>(ell)]));
            }
        }
    }

    double candidate = bound / 2.0;
    for (int iter = 0; iter < kMaxHalvings; ++iter, candidate /= 2.0) {
        bool clear = true;
        for (auto v : excluded) {
            if (std::abs(Complex{candidate, 0.0} - v) <= kExcludedGuard * (1.0 + std::abs(v))) {
                clear = false;
                break;
            }
        }
        if (clear && n_smooth && !(candidate * amplification < eps)) clear = false;
        if (!clear) continue;
        result.d = GaussianRational::from_double(candidate);
        result.num_perturbed = with_monomial(num, p, result.d);
        // The guard band is heuristic; coprimality of the outcome is the
        // exact criterion, so verify it before accepting.
        if (!gcd(result.num_perturbed, den).degree_less_than(1)) continue;
        result.den = den;
        result.g = RationalFn<GaussianRational>::reduce(result.num_perturbed, den);
        return result;
    }
    throw ConstructionFailed("no admissible perturbation coefficient within the halving budget");
}

} // namespace padelab
