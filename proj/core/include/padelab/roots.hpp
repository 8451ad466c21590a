#ifndef PADELAB_ROOTS_HPP
#define PADELAB_ROOTS_HPP

#include <vector>

#include "padelab/polynomial.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// All complex roots of a nonzero polynomial, with multiplicity. Degrees
/// up to two use the closed-form formulas; higher degrees fall back to the
/// eigenvalues of the companion matrix. Downstream consumers guard against
/// the resulting floating error with a band around each root.
std::vector<Complex> polynomial_roots(const Polynomial<Complex>& p);

inline std::vector<Complex> polynomial_roots(const Polynomial<GaussianRational>& p) {
    return polynomial_roots(to_float(p));
}

} // namespace padelab

#endif
