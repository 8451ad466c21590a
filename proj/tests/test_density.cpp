#include <doctest.h>

#include "padelab/density.hpp"
#include "padelab/experiment.hpp"
#include "support/naive.hpp"

using namespace padelab;
using namespace padelab::testing;

namespace {
GaussianRational gr(long num, long den = 1) { return GaussianRational(num, den); }
using Poly = Polynomial<GaussianRational>;

GaussianRational signed_power(const GaussianRational& d, int q) {
    GaussianRational out(1);
    for (int k = 0; k < q; ++k) out = out * d;
    if ((q * (q - 1) / 2) % 2 != 0) out = -out;
    return out;
}
}

TEST_SUITE("density") {
    TEST_CASE("polynomial perturbation on the unit circle") {
        auto t = build(CircleDescriptor{{0.0, 0.0}, 1.0, 64});
        auto result = perturb_polynomial(Poly{}, 2, 1, 0.1, t);
        CHECK(std::abs(result.d.to_complex() - Complex{0.05, 0.0}) < 1e-12);
        CHECK(std::abs(result.bound_used - 0.1) < 1e-12);
        CHECK(result.num_perturbed.degree() == 2);
        CHECK(result.den.coeffs() == std::vector<GaussianRational>{gr(1)});

        // brute-force sup of |g - P| over the samples stays below eps
        auto diff = to_float(result.num_perturbed);
        double sup = 0.0;
        for (auto z : t.points) sup = std::max(sup, std::abs(diff.evaluate(z)));
        CHECK(sup < 0.1);

        CHECK_THROWS_AS(perturb_polynomial(Poly({gr(1), gr(1)}), 1, 1, 0.1, t), DegreeError);
        CHECK_THROWS_AS(perturb_polynomial(Poly{}, 2, 1, 0.0, t), ArgumentError);
    }

    TEST_CASE("determinant closed form, any center") {
        // q = 2, d = 3: determinant is -(3^2) at every center
        auto g = Poly::monomial(3, gr(3));
        for (auto center : {gr(0), GaussianRational(BigRational(1), BigRational(1)), gr(-2, 5)}) {
            auto series = series_of_polynomial(g, center, 4);
            auto verdict = hankel_determinant(series, 3, 2);
            CHECK(verdict.member);
            CHECK(verdict.det == gr(-9));
        }

        std::mt19937 rng(51);
        std::uniform_int_distribution<int> qd(1, 4), dn(1, 5);
        for (int trial = 0; trial < 30; ++trial) {
            int base_deg = std::uniform_int_distribution<int>(-1, 5)(rng);
            auto base = base_deg < 0 ? Poly{} : random_poly(rng, base_deg);
            int p = std::uniform_int_distribution<int>(base_deg + 1, 8)(rng);
            int q = qd(rng);
            GaussianRational d(BigRational(dn(rng), dn(rng)));
            auto g2 = base + Poly::monomial(p, d);
            for (int c = 0; c < 3; ++c) {
                auto center = random_gaussian(rng);
                auto verdict = hankel_determinant(series_of_polynomial(g2, center, p + q - 1), p, q);
                CHECK(verdict.member);
                CHECK(verdict.det == signed_power(d, q));
            }
        }
    }

    TEST_CASE("q = 0 perturbation is its own partial sum") {
        auto t = build(CircleDescriptor{{0.0, 0.0}, 1.0, 16});
        auto result = perturb_polynomial(Poly{}, 3, 0, 0.2, t);
        auto series = series_of_polynomial(result.num_perturbed, gr(1, 3), 3);
        auto r = pade_from_series(series, 3, 0);
        CHECK(!order_defect(series, r).has_value());
        CHECK(evaluate(r, gr(2)) == result.num_perturbed.evaluate(gr(2)));
    }

    TEST_CASE("smooth polynomial budget counts every derivative") {
        auto t = build(CircleDescriptor{{0.0, 0.0}, 1.0, 64});
        auto result = perturb_polynomial_smooth(Poly{}, 2, 1, 1.0, 2, t);
        // sups of z^2, 2z, 2 over the unit circle are 1, 2, 2
        CHECK(std::abs(result.d.to_complex() - Complex{0.25, 0.0}) < 1e-12);

        auto mono = to_float(result.num_perturbed);
        for (int ell = 0; ell <= 2; ++ell) {
            double sup = 0.0;
            for (auto z : t.points) sup = std::max(sup, std::abs(mono.evaluate(z)));
            CHECK(sup < 1.0);
            mono = mono.derivative();
        }

        // order zero falls back to the plain bound
        auto plain = perturb_polynomial(Poly{}, 2, 1, 1.0, t);
        auto smooth0 = perturb_polynomial_smooth(Poly{}, 2, 1, 1.0, 0, t);
        CHECK(std::abs(smooth0.d.to_complex() - plain.d.to_complex()) < 1e-12);
    }

    TEST_CASE("perturbations reproduce themselves at every center") {
        auto t = build(CircleDescriptor{{0.0, 0.0}, 1.0, 16});
        std::mt19937 rng(52);
        for (int trial = 0; trial < 10; ++trial) {
            auto base = random_poly(rng, 3);
            auto result = perturb_polynomial(base, 5, 2, 0.25, t);
            for (int c = 0; c < 3; ++c) {
                auto center = random_gaussian(rng);
                auto series = series_of_polynomial(result.num_perturbed, center, 7);
                auto r = pade_from_series(series, 5, 2);
                CHECK(!order_defect(series, r).has_value());
                for (int pt = 0; pt < 4; ++pt) {
                    auto z = random_gaussian(rng);
                    CHECK(evaluate(r, z) == result.num_perturbed.evaluate(z));
                }
            }
        }
    }

    TEST_CASE("rational perturbation: the worked geometric case") {
        auto t = build(DiskDescriptor{{0.0, 0.0}, 0.5, 8});
        auto result = perturb_rational(Poly({gr(1)}), Poly({gr(1), gr(-1)}), 1, 2, 0.5, t);
        CHECK(std::abs(result.d.to_complex() - Complex{0.25, 0.0}) < 1e-12);
        REQUIRE(result.excluded_values.size() == 1);
        CHECK(std::abs(result.excluded_values[0].to_complex() - Complex{-1.0, 0.0}) < 1e-12);
        CHECK(result.num_perturbed.coeffs() ==
              std::vector<GaussianRational>{gr(1), result.d});
        CHECK(gcd(result.num_perturbed, result.den).degree_less_than(1));

        // membership at two centers and exact self-reproduction over T
        auto centers = build(PointListDescriptor{{{0.0, 0.0}, {0.0, 0.25}}});
        auto report = verify_construction(result, centers, t);
        for (const auto& check : report.centers) {
            CHECK(check.member);
            CHECK(check.residual == 0.0);
        }
    }

    TEST_CASE("rational perturbation preconditions") {
        auto t = build(DiskDescriptor{{0.0, 0.0}, 0.5, 8});
        // p must exceed deg A, q must exceed deg B
        CHECK_THROWS_AS(perturb_rational(Poly({gr(1), gr(2)}), Poly({gr(1), gr(-1)}), 1, 2, 0.5, t),
                        DegreeError);
        CHECK_THROWS_AS(perturb_rational(Poly({gr(1)}), Poly({gr(1), gr(-1)}), 1, 1, 0.5, t),
                        DegreeError);
        // sample set touching a zero of B
        auto touching = build(PointListDescriptor{{{1.0, 0.0}}});
        CHECK_THROWS_AS(perturb_rational(Poly({gr(1)}), Poly({gr(1), gr(-1)}), 1, 2, 0.5, touching),
                        ArgumentError);
        // non-coprime input
        CHECK_THROWS_AS(perturb_rational(Poly({gr(1), gr(1)}), Poly({gr(-1), gr(0), gr(1)}), 3, 4,
                                         0.5, t),
                        ArgumentError);
    }

    TEST_CASE("excluded values are avoided with a guard") {
        std::mt19937 rng(53);
        auto t = build(DiskDescriptor{{0.0, 0.0}, 0.5, 8});
        for (int trial = 0; trial < 10; ++trial) {
            auto den = random_poly(rng, 2);
            if (scalar_traits<GaussianRational>::is_zero(den.evaluate(gr(0)))) continue;
            double min_b = 1e300;
            auto den_f = to_float(den);
            for (auto z : t.points) min_b = std::min(min_b, std::abs(den_f.evaluate(z)));
            if (min_b < 1e-3) continue;
            auto num = random_poly(rng, 1);
            if (!gcd(num, den).degree_less_than(1)) continue;
            auto result = perturb_rational(num, den, 3, 4, 0.5, t);
            CHECK(!result.d.is_zero());
            CHECK(result.d.to_complex().real() > 0.0);
            CHECK(result.d.to_complex().real() < result.bound_used);
            for (const auto& v : result.excluded_values) {
                auto vc = v.to_complex();
                CHECK(std::abs(result.d.to_complex() - vc) > 1e-8 * (1.0 + std::abs(vc)));
            }
            CHECK(gcd(result.num_perturbed, result.den).degree_less_than(1));
        }
    }

    TEST_CASE("smooth rational perturbation bounds every requested derivative") {
        auto t = build(DiskDescriptor{{0.0, 0.0}, 0.5, 8});
        const double eps = 0.5;
        auto result = perturb_rational(Poly({gr(1)}), Poly({gr(1), gr(-1)}), 1, 2, eps, t, 2);

        // measure sup |g^(l) - R^(l)| on the samples for l = 0..2
        auto g = result.g;
        auto r = RationalFn<GaussianRational>::reduce(Poly({gr(1)}), Poly({gr(1), gr(-1)}));
        for (int ell = 0; ell <= 2; ++ell) {
            double fact = 1.0;
            for (int j = 2; j <= ell; ++j) fact *= j;
            double sup = 0.0;
            for (auto z : t.points) {
                auto zeta = GaussianRational::from_double(z.real(), z.imag());
                auto dg = taylor_at(g, zeta, ell).coeff(ell).to_complex();
                auto dr = taylor_at(r, zeta, ell).coeff(ell).to_complex();
                sup = std::max(sup, std::abs(dg - dr) * fact);
            }
            CHECK(sup < eps);
        }
    }
}
