#ifndef PADELAB_SCALAR_HPP
#define PADELAB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <utility>

#include "padelab/errors.hpp"

namespace padelab {

/// Floating realization of the coefficient field.
using Complex = std::complex<double>;

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact realization: a complex number with arbitrary-precision rational
/// real and imaginary parts. All field operations are closed and exact.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(BigRational re, BigRational im = 0)
        : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}
    GaussianRational(long re_num, long re_den) : re_(BigRational(re_num, re_den)) {}

    /// Exact embedding of a double (every finite double is a dyadic rational).
    static GaussianRational from_double(double re, double im = 0.0) {
        return GaussianRational(BigRational(re), BigRational(im));
    }
    static GaussianRational i() { return GaussianRational(0, BigRational(1)); }

    const BigRational& real() const { return re_; }
    const BigRational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, an exact nonnegative rational.
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    Complex to_complex() const {
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        BigRational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw ArgumentError("division by zero Gaussian rational");
        BigRational n = o.norm();
        BigRational re = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(re);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    BigRational re_ = 0;
    BigRational im_ = 0;
};

/// Per-realization glue used by the templated algebra.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
    static constexpr bool is_exact = false;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static Complex from_complex(Complex z) { return z; }
    static Complex to_complex(Complex z) { return z; }
    static double magnitude(const Complex& z) { return std::abs(z); }
    static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static GaussianRational from_complex(Complex z) {
        return GaussianRational::from_double(z.real(), z.imag());
    }
    static Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
    static double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
};

/// Canonical "num/den" rendering of one rational component.
std::string to_fraction_string(const BigRational& q);

/// Human-readable scalar: "re" or "re+imi" with rational components in
/// num/den form. Used by diagnostics; serialization formats its own way.
std::string to_string(const GaussianRational& z);
std::string to_string(const Complex& z);

/// Parses "3", "-3/4", "0.25", "1e-3", "1/2+2/3i", "-1.5i", "i".
/// Decimal and scientific literals are read exactly (as decimal fractions),
/// so the same text denotes the same number in both realizations.
GaussianRational parse_scalar(const std::string& text);

} // namespace padelab

#endif
