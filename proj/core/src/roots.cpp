#include "padelab/roots.hpp"

#include <Eigen/Eigenvalues>

namespace padelab {

std::vector<Complex> polynomial_roots(const Polynomial<Complex>& p) {
    if (p.is_zero()) throw ArgumentError("zero polynomial has no well-defined roots");
    const int deg = *p.degree();
    if (deg == 0) return {};
    if (deg == 1) return {-p.coeff(0) / p.coeff(1)};
    if (deg == 2) {
        const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        const Complex disc = std::sqrt(b * b - 4.0 * a * c);
        // Pick the sign that avoids cancellation in -b -+ disc.
        const Complex s = (std::abs(b - disc) > std::abs(b + disc)) ? (b - disc) : (b + disc);
        if (s == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
        const Complex r1 = -s / (2.0 * a);
        const Complex r2 = c / (a * r1);
        return {r1, r2};
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    const Complex lead = p.coeff(deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p.coeff(i) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

} // namespace padelab
