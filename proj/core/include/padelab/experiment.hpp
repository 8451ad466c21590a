#ifndef PADELAB_EXPERIMENT_HPP
#define PADELAB_EXPERIMENT_HPP

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padelab/density.hpp"
#include "padelab/errors.hpp"
#include "padelab/indices.hpp"
#include "padelab/pade.hpp"
#include "padelab/rational_fn.hpp"
#include "padelab/sample_set.hpp"

namespace padelab {

/// Hard guard on batch table sizes.
inline constexpr int kTableOrderCap = 12;
/// Cap on derivative orders in convergence experiments.
inline constexpr int kDerivativeOrderCap = 8;

/// Converts a geometric (double) point into the working realization; the
/// embedding is exact, every double being a dyadic rational.
template <class S>
S lift_point(Complex z) {
    return scalar_traits<S>::from_complex(z);
}

/// A source function for experiments: its development about any admissible
/// center, a float ground truth for derivative values, and, when the
/// function is a reduced rational (or polynomial), its degree pair for the
/// membership law.
template <class S>
struct Oracle {
    std::string name;
    std::function<PowerSeries<S>(const S&, int)> series_at;
    EvalFn truth;
    std::optional<std::pair<std::optional<int>, int>> reduced_degrees;
};

inline Oracle<Complex> make_exp_oracle() {
    return {"exp",
            [](const Complex& zeta, int n) { return exp_series(zeta, n); },
            [](Complex z, int) { return std::exp(z); },
            std::nullopt};
}

template <class S>
Oracle<S> make_geometric_oracle() {
    Oracle<S> oracle;
    oracle.name = "geometric";
    oracle.series_at = [](const S& zeta, int n) { return geometric_series(zeta, n); };
    oracle.truth = [](Complex z, int ell) {
        const Complex w = 1.0 - z;
        if (std::abs(w) < kPoleTol) throw PoleAtPoint("geometric oracle pole at z = 1");
        double fact = 1.0;
        for (int k = 2; k <= ell; ++k) fact *= static_cast<double>(k);
        return fact / std::pow(w, ell + 1);
    };
    oracle.reduced_degrees = {{std::optional<int>(0), 1}};
    return oracle;
}

template <class S>
Oracle<S> make_rational_oracle(RationalFn<S> f) {
    Oracle<S> oracle;
    oracle.name = "rational";
    oracle.reduced_degrees = {{f.num_degree(), f.den_degree()}};
    auto f_float = [&] {
        if constexpr (scalar_traits<S>::is_exact)
            return to_float(f);
        else
            return f;
    }();
    oracle.series_at = [f = std::move(f)](const S& zeta, int n) { return taylor_at(f, zeta, n); };
    oracle.truth = [f_float = std::move(f_float)](Complex z, int ell) {
        try {
            const auto local = taylor_at(f_float, z, ell);
            double fact = 1.0;
            for (int k = 2; k <= ell; ++k) fact *= static_cast<double>(k);
            return local.coeff(ell) * fact;
        } catch (const CenterOnPole&) {
            throw PoleAtPoint("rational oracle pole");
        }
    };
    return oracle;
}

template <class S>
Oracle<S> make_polynomial_oracle(Polynomial<S> poly) {
    Oracle<S> oracle;
    oracle.name = "polynomial";
    oracle.reduced_degrees = {{poly.degree(), 0}};
    auto poly_float = [&] {
        if constexpr (scalar_traits<S>::is_exact)
            return to_float(poly);
        else
            return poly;
    }();
    oracle.series_at = [poly = std::move(poly)](const S& zeta, int n) {
        return series_of_polynomial(poly, zeta, n);
    };
    oracle.truth = [poly_float = std::move(poly_float)](Complex z, int ell) {
        auto d = poly_float;
        for (int k = 0; k < ell; ++k) d = d.derivative();
        return d.evaluate(z);
    };
    return oracle;
}

/// Point-and-derivative evaluator for an approximant, in float, for
/// sup-norm measurements.
template <class S>
EvalFn approximant_eval(const PadeApproximant<S>& r) {
    auto rf = [&] {
        if constexpr (scalar_traits<S>::is_exact)
            return to_float(r);
        else
            return r;
    }();
    return [rf = std::move(rf)](Complex z, int ell) { return derivative_at(rf, z, ell); };
}

/// Sup of |r^(l) - oracle^(l)| over the region. The exact realization
/// evaluates both sides exactly and only the magnitude in double, so an
/// identity (a function that is its own approximant) measures exactly zero;
/// the floating realization measures through the float evaluators.
template <class S>
std::optional<double> measure_sup(const Oracle<S>& oracle, const PadeApproximant<S>& r,
                                  const SampleSet& region, int ell) {
    if constexpr (scalar_traits<S>::is_exact) {
        double sup = 0.0;
        S fact = scalar_traits<S>::one();
        for (int k = 2; k <= ell; ++k) fact = fact * scalar_traits<S>::from_int(k);
        for (auto z : region.points) {
            const S zeta = lift_point<S>(z);
            try {
                const S approx = derivative_at(r, zeta, ell);
                const S truth = oracle.series_at(zeta, ell).coeff(ell) * fact;
                sup = std::max(sup, scalar_traits<S>::magnitude(approx - truth));
            } catch (const ComputationError&) {
                return std::nullopt; // a pole of either side on the samples
            }
        }
        return sup;
    } else {
        return sup_diff(approximant_eval(r), oracle.truth, region, ell);
    }
}

template <class S>
struct TableCell {
    int p = 0;
    int q = 0;
    NormalityVerdict<S> verdict;
    std::optional<Prediction> predicted;
    /// Engaged only in member cells; the inner pole flag mirrors sup_diff.
    std::optional<std::optional<double>> sup_error;
};

/// The (p_max+1) x (q_max+1) membership grid of the oracle about one
/// center, with the sup distance to the oracle over the region wherever
/// the approximant exists.
template <class S>
std::vector<TableCell<S>> run_table(const Oracle<S>& oracle, const S& center, int p_max, int q_max,
                                    const SampleSet& region, double tol = kMembershipTol) {
    if (p_max < 0 || q_max < 0 || p_max > kTableOrderCap || q_max > kTableOrderCap)
        throw ArgumentError("table orders must lie in [0, 12]");
    const auto series = oracle.series_at(center, p_max + q_max);
    std::vector<TableCell<S>> cells;
    cells.reserve(static_cast<std::size_t>((p_max + 1) * (q_max + 1)));
    for (int p = 0; p <= p_max; ++p) {
        for (int q = 0; q <= q_max; ++q) {
            TableCell<S> cell;
            cell.p = p;
            cell.q = q;
            cell.verdict = hankel_determinant(series, p, q, tol);
            if (oracle.reduced_degrees)
                cell.predicted = predict_rational_membership(
                    oracle.reduced_degrees->first, oracle.reduced_degrees->second, p, q);
            if (cell.verdict.member) {
                const auto r = pade_from_series(series, p, q, tol);
                cell.sup_error = measure_sup(oracle, r, region, 0);
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

/// One convergence step: the orders used, whether the oracle was a member
/// at every requested center, and per-derivative sup errors (pole flag as
/// nullopt). Rows that fail membership carry no sups; they are markers,
/// not errors.
struct ConvergeRow {
    int n = 0;
    int p = 0;
    int q = 0;
    bool member_all_centers = false;
    std::vector<std::optional<double>> sup_per_ell;
};

template <class S>
std::vector<ConvergeRow> run_converge(const Oracle<S>& oracle, const IndexFamily& family,
                                      const SampleSet& centers, const SampleSet& region, int max_n,
                                      int deriv_orders = 0, double tol = kMembershipTol) {
    if (max_n < 1) throw ArgumentError("experiment needs at least one step");
    if (deriv_orders < 0 || deriv_orders > kDerivativeOrderCap)
        throw ArgumentError("derivative orders must lie in [0, 8]");
    int steps = max_n;
    if (family.is_finite()) steps = std::min(steps, family.size());

    std::vector<ConvergeRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int n = 1; n <= steps; ++n) {
        ConvergeRow row;
        row.n = n;
        const auto [p, q] = family.at(n);
        row.p = p;
        row.q = q;
        std::vector<PadeApproximant<S>> approximants;
        approximants.reserve(centers.points.size());
        bool all_member = true;
        try {
            for (auto c : centers.points) {
                const S zeta = lift_point<S>(c);
                const auto series = oracle.series_at(zeta, p + q);
                if (!hankel_determinant(series, p, q, tol).member) {
                    all_member = false;
                    break;
                }
                approximants.push_back(pade_from_series(series, p, q, tol));
            }
        } catch (const ComputationError&) {
            all_member = false; // failed rows are markers, not errors
        }
        row.member_all_centers = all_member;
        if (all_member) {
            for (int ell = 0; ell <= deriv_orders; ++ell) {
                std::optional<double> sup = 0.0;
                for (const auto& r : approximants) {
                    auto s = measure_sup(oracle, r, region, ell);
                    if (!s) {
                        sup = std::nullopt;
                        break;
                    }
                    sup = std::max(*sup, *s);
                }
                row.sup_per_ell.push_back(sup);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Per-center verification attached to a perturbation construction: the
/// coefficient determinant of the perturbed function's development there,
/// its membership verdict, and the self-reproduction residual over the
/// sample set (exactly zero in exact arithmetic whenever the approximant
/// reproduces the function).
struct ConstructCenterCheck {
    GaussianRational center;
    GaussianRational det;
    bool member = false;
    double residual = 0.0;
};

struct ConstructReport {
    PerturbationResult result;
    std::vector<ConstructCenterCheck> centers;
};

/// Runs the membership and self-reproduction checks of a perturbation
/// result at each requested center, measuring residuals on the sample set
/// in exact arithmetic.
inline ConstructReport verify_construction(PerturbationResult result, const SampleSet& centers,
                                           const SampleSet& region) {
    ConstructReport report;
    report.centers.reserve(centers.points.size());
    const int order = result.p + result.q;
    for (auto c : centers.points) {
        ConstructCenterCheck check;
        check.center = GaussianRational::from_double(c.real(), c.imag());
        const auto series = taylor_at(result.g, check.center, order);
        const auto verdict = hankel_determinant(series, result.p, result.q);
        check.det = verdict.det;
        check.member = verdict.member;
        if (verdict.member) {
            const auto r = pade_from_series(series, result.p, result.q);
            double residual = 0.0;
            for (auto z : region.points) {
                const auto zeta = GaussianRational::from_double(z.real(), z.imag());
                try {
                    const auto diff = evaluate(r, zeta) - result.g.evaluate(zeta);
                    residual = std::max(residual, scalar_traits<GaussianRational>::magnitude(diff));
                } catch (const PoleAtPoint&) {
                    residual = std::numeric_limits<double>::infinity();
                }
            }
            check.residual = residual;
        }
        report.centers.push_back(std::move(check));
    }
    report.result = std::move(result);
    return report;
}

} // namespace padelab

#endif
