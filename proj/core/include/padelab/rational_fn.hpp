#ifndef PADELAB_RATIONAL_FN_HPP
#define PADELAB_RATIONAL_FN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "padelab/errors.hpp"
#include "padelab/pade.hpp"
#include "padelab/polynomial.hpp"
#include "padelab/power_series.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// Reduced quotient of two polynomials: numerator and denominator share no
/// common factor and the denominator is monic, so equal functions have
/// equal representations. Reduction needs exact arithmetic; floating
/// instances are obtained by converting an exact one.
template <class S>
class RationalFn {
public:
    /// The zero function 0/1.
    RationalFn() : num_(), den_(Polynomial<S>::constant(scalar_traits<S>::one())) {}

    /// Divides out the gcd and normalizes the denominator monic.
    static RationalFn reduce(const Polynomial<S>& num, const Polynomial<S>& den) {
        static_assert(scalar_traits<S>::is_exact,
                      "reduction is ill-posed in floating arithmetic; reduce exactly and convert");
        if (den.is_zero()) throw ArgumentError("rational function with zero denominator");
        Polynomial<S> a = num, b = den;
        if (!a.is_zero()) {
            auto g = gcd(a, b);
            if (!g.degree_less_than(1)) {
                a = divmod(a, g).first;
                b = divmod(b, g).first;
            }
        }
        const S lead = b.leading();
        a = (scalar_traits<S>::one() / lead) * a;
        b = (scalar_traits<S>::one() / lead) * b;
        return RationalFn(std::move(a), std::move(b));
    }

    /// Wraps an already-reduced pair without touching it. The caller
    /// certifies coprimality; used for floating conversions.
    static RationalFn from_reduced(Polynomial<S> num, Polynomial<S> den) {
        if (den.is_zero()) throw ArgumentError("rational function with zero denominator");
        return RationalFn(std::move(num), std::move(den));
    }

    const Polynomial<S>& num() const { return num_; }
    const Polynomial<S>& den() const { return den_; }
    /// Numerator degree; nullopt for the zero function.
    std::optional<int> num_degree() const { return num_.degree(); }
    int den_degree() const { return *den_.degree(); }
    bool is_zero() const { return num_.is_zero(); }

    S evaluate(const S& z) const {
        const S num_v = num_.evaluate(z);
        const S den_v = den_.evaluate(z);
        if constexpr (scalar_traits<S>::is_exact) {
            if (scalar_traits<S>::is_zero(den_v)) throw PoleAtPoint("evaluation at a pole");
        } else {
            if (scalar_traits<S>::magnitude(den_v) <
                kPoleTol * (1.0 + scalar_traits<S>::magnitude(num_v)))
                throw PoleAtPoint("evaluation at a pole");
        }
        return num_v / den_v;
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    RationalFn(Polynomial<S> num, Polynomial<S> den)
        : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial<S> num_;
    Polynomial<S> den_;
};

/// Coefficients a_0..a_n of f about zeta, by recentering numerator and
/// denominator and dividing as series. Exact in the exact realization.
template <class S>
PowerSeries<S> taylor_at(const RationalFn<S>& f, const S& zeta, int n) {
    if (n < 0) throw ArgumentError("truncation order must be nonnegative");
    const S den_v = f.den().evaluate(zeta);
    if constexpr (scalar_traits<S>::is_exact) {
        if (scalar_traits<S>::is_zero(den_v))
            throw CenterOnPole("Taylor development centered on a pole");
    } else {
        if (scalar_traits<S>::magnitude(den_v) <
            kPoleTol * (1.0 + scalar_traits<S>::magnitude(f.num().evaluate(zeta))))
            throw CenterOnPole("Taylor development centered on a pole");
    }
    const auto num_local = series_of_polynomial(f.num(), zeta, n);
    const auto den_local = series_of_polynomial(f.den(), zeta, n);
    return PowerSeries<S>(zeta, divide_series(num_local.coeffs(), den_local.coeffs(), n));
}

/// What the classical membership law for reduced rational functions of
/// degrees (lam, mu) says about the (p, q) entry of the table.
enum class Prediction { Member, NotMember, Undetermined };

/// The law covers (p, q) = (lam, mu), the row q = mu for p > lam, the
/// column p = lam for q > mu (members), and p > lam, q > mu (not members).
/// It is silent for p < lam or q < mu, and for the zero function.
inline Prediction predict_rational_membership(std::optional<int> lam, int mu, int p, int q) {
    if (p < 0 || q < 0 || mu < 0) throw ArgumentError("degrees must be nonnegative");
    if (!lam.has_value()) return Prediction::Undetermined;
    const int l = *lam;
    if (p == l && q == mu) return Prediction::Member;
    if (p > l && q == mu) return Prediction::Member;
    if (p == l && q > mu) return Prediction::Member;
    if (p > l && q > mu) return Prediction::NotMember;
    return Prediction::Undetermined;
}

template <class S>
struct MembershipReport {
    Prediction predicted = Prediction::Undetermined;
    NormalityVerdict<S> observed;
    /// Observed verdict matches the prediction (vacuously true when the
    /// law is silent).
    bool agree = true;
    /// In predicted-member cells: the approximant reproduced f at every
    /// probe point (exactly in the exact realization).
    bool reproduction_checked = false;
    bool reproduction_ok = false;
};

/// Runs the normality test on the development of f about zeta and compares
/// against the membership law; in member cells additionally verifies that
/// the constructed approximant gives back f at the probe points.
template <class S>
MembershipReport<S> check_rational_membership(const RationalFn<S>& f, const S& zeta, int p, int q,
                                              const std::vector<S>& probe_points = {},
                                              double tol = kMembershipTol) {
    MembershipReport<S> report;
    report.predicted = predict_rational_membership(f.num_degree(), f.den_degree(), p, q);
    const auto series = taylor_at(f, zeta, p + q);
    report.observed = hankel_determinant(series, p, q, tol);
    if (report.predicted == Prediction::Member)
        report.agree = report.observed.member;
    else if (report.predicted == Prediction::NotMember)
        report.agree = !report.observed.member;
    if (report.predicted == Prediction::Member && report.observed.member) {
        report.reproduction_checked = true;
        report.reproduction_ok = true;
        const auto r = pade_from_series(series, p, q, tol);
        for (const auto& z : probe_points) {
            S expected, got;
            try {
                expected = f.evaluate(z);
                got = evaluate(r, z);
            } catch (const PoleAtPoint&) {
                continue; // probe fell on a pole of either side; skip it
            }
            if constexpr (scalar_traits<S>::is_exact) {
                if (expected != got) report.reproduction_ok = false;
            } else {
                if (scalar_traits<S>::magnitude(expected - got) >
                    kOrderTol * (1.0 + scalar_traits<S>::magnitude(expected)))
                    report.reproduction_ok = false;
            }
        }
    }
    return report;
}

inline RationalFn<Complex> to_float(const RationalFn<GaussianRational>& f) {
    return RationalFn<Complex>::from_reduced(to_float(f.num()), to_float(f.den()));
}

} // namespace padelab

#endif
