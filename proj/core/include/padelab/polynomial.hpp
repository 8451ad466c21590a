#ifndef PADELAB_POLYNOMIAL_HPP
#define PADELAB_POLYNOMIAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "padelab/errors.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// Dense univariate polynomial over scalar type S, coefficients in
/// increasing degree order, trailing zeros trimmed. The zero polynomial is
/// the empty coefficient vector and has no degree (degree() is nullopt,
/// never an ordinary integer).
template <class S>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Polynomial constant(S c) { return Polynomial(std::vector<S>{std::move(c)}); }
    static Polynomial monomial(int k, S c = scalar_traits<S>::one()) {
        std::vector<S> v(static_cast<std::size_t>(k) + 1, scalar_traits<S>::zero());
        v.back() = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<S>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    /// Degree with the zero polynomial counting as below every integer.
    /// Handy for "p > deg P" style admissibility checks.
    bool degree_less_than(int k) const {
        return coeffs_.empty() || static_cast<int>(coeffs_.size()) - 1 < k;
    }

    /// Coefficient of z^k; zero outside the stored range (including k < 0).
    S coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return scalar_traits<S>::zero();
        return coeffs_[static_cast<std::size_t>(k)];
    }
    S leading() const {
        if (coeffs_.empty()) return scalar_traits<S>::zero();
        return coeffs_.back();
    }

    S evaluate(const S& z) const {
        S acc = scalar_traits<S>::zero();
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<S> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            out[k - 1] = coeffs_[k] * scalar_traits<S>::from_int(static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<S> out(std::max(a.coeffs_.size(), b.coeffs_.size()), scalar_traits<S>::zero());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<S> out(std::max(a.coeffs_.size(), b.coeffs_.size()), scalar_traits<S>::zero());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> out(a.coeffs_.size() + b.coeffs_.size() - 1, scalar_traits<S>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const S& c, const Polynomial& p) {
        std::vector<S> out = p.coeffs_;
        for (auto& x : out) x = c * x;
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!coeffs_.empty() && scalar_traits<S>::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<S> coeffs_;
};

/// Quotient and remainder of a by b over a field; exact realization only.
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
    static_assert(scalar_traits<S>::is_exact, "polynomial division requires exact coefficients");
    if (b.is_zero()) throw ArgumentError("polynomial division by zero");
    std::vector<S> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = *b.degree();
    if (static_cast<int>(rem.size()) - 1 < db) return {Polynomial<S>{}, a};
    std::vector<S> quot(rem.size() - static_cast<std::size_t>(db), scalar_traits<S>::zero());
    const S lead = b.leading();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (scalar_traits<S>::is_zero(rem[static_cast<std::size_t>(k)])) continue;
        S f = rem[static_cast<std::size_t>(k)] / lead;
        quot[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {Polynomial<S>(std::move(quot)), Polynomial<S>(std::move(rem))};
}

/// Monic greatest common divisor by the Euclidean algorithm over the exact
/// field. gcd(0, 0) is the zero polynomial.
template <class S>
Polynomial<S> gcd(Polynomial<S> a, Polynomial<S> b) {
    static_assert(scalar_traits<S>::is_exact, "polynomial gcd requires exact coefficients");
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    S inv_lead = scalar_traits<S>::one() / a.leading();
    return inv_lead * a;
}

template <class S>
Polynomial<S> make_monic(const Polynomial<S>& p) {
    if (p.is_zero()) return p;
    S inv_lead = scalar_traits<S>::one() / p.leading();
    return inv_lead * p;
}

inline Polynomial<Complex> to_float(const Polynomial<GaussianRational>& p) {
    std::vector<Complex> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
    return Polynomial<Complex>(std::move(out));
}

} // namespace padelab

#endif
