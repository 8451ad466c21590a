#ifndef PADELAB_DENSITY_HPP
#define PADELAB_DENSITY_HPP

#include <optional>
#include <vector>

#include "padelab/errors.hpp"
#include "padelab/polynomial.hpp"
#include "padelab/power_series.hpp"
#include "padelab/rational_fn.hpp"
#include "padelab/roots.hpp"
#include "padelab/sample_set.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// Multiplicative guard band around each excluded value when choosing the
/// perturbation coefficient; wide enough to absorb root-finder error.
inline constexpr double kExcludedGuard = 1e-8;
/// Halving budget for the coefficient search. With finitely many excluded
/// values the search succeeds long before this.
inline constexpr int kMaxHalvings = 64;

/// Outcome of a perturbation construction. The perturbed function is its
/// own (p, q) approximant about every center; num_perturbed/den keep the
/// caller's normalization (den is constant one in the polynomial case),
/// g is the reduced canonical view of the same function.
struct PerturbationResult {
    Polynomial<GaussianRational> num_perturbed;
    Polynomial<GaussianRational> den;
    RationalFn<GaussianRational> g;
    GaussianRational d;
    double bound_used = 0.0;
    std::vector<GaussianRational> excluded_values;
    int p = 0;
    int q = 0;
};

/// g = P + d z^p with p above deg P and 0 < d below eps / max_T |z|^p, so
/// sup_T |g - P| < eps. The development of g about any center is a degree-p
/// polynomial with leading coefficient d, so its q x q coefficient
/// determinant is (-1)^{q(q-1)/2} d^q regardless of the center, and g
/// reproduces itself as its own (p, q) approximant everywhere.
PerturbationResult perturb_polynomial(const Polynomial<GaussianRational>& base, int p, int q,
                                      double eps, const SampleSet& t);

/// Derivative-norm variant: d stays below
/// eps / max_{0<=l<=n_smooth} sup_T |(z^p)^(l)|, which keeps every
/// derivative up to order n_smooth within eps of the base on T.
PerturbationResult perturb_polynomial_smooth(const Polynomial<GaussianRational>& base, int p, int q,
                                             double eps, int n_smooth, const SampleSet& t);

/// g = (A + d z^p) / B for a coprime pair (A, B) with p > deg A and
/// q > deg B, T avoiding the zeros of B. The coefficient starts at half of
/// eps * min_T |B| / max_T |z|^p and is halved until it clears the guard
/// band around every excluded value -A(rho)/rho^p (rho a nonzero zero of
/// B; the value there would cancel a factor and break irreducibility) and,
/// when n_smooth is given, until every derivative sup through that order is
/// below eps. Coprimality of the result is verified exactly.
///
/// The pair is taken as given rather than via the monic canonical form:
/// rescaling (A, B) rescales the excluded values and reparameterizes d, so
/// the caller's normalization is the meaningful one here.
PerturbationResult perturb_rational(const Polynomial<GaussianRational>& num,
                                    const Polynomial<GaussianRational>& den, int p, int q,
                                    double eps, const SampleSet& t,
                                    std::optional<int> n_smooth = std::nullopt);

inline PerturbationResult perturb_rational(const RationalFn<GaussianRational>& r, int p, int q,
                                           double eps, const SampleSet& t,
                                           std::optional<int> n_smooth = std::nullopt) {
    return perturb_rational(r.num(), r.den(), p, q, eps, t, n_smooth);
}

} // namespace padelab

#endif
