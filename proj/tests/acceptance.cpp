// Acceptance suite: end-to-end checks of the library's advertised exact
// identities, tolerances, and experiment behavior. Prints one line per
// criterion and fails the process if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "padelab/density.hpp"
#include "padelab/experiment.hpp"
#include "support/naive.hpp"

using namespace padelab;
using namespace padelab::testing;

namespace {

GaussianRational gr(long num, long den = 1) { return GaussianRational(num, den); }
using Poly = Polynomial<GaussianRational>;
using ExactSeries = PowerSeries<GaussianRational>;

struct Checker {
    bool ok = true;
    std::string detail;
    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

GaussianRational signed_power(const GaussianRational& d, int q) {
    GaussianRational out(1);
    for (int k = 0; k < q; ++k) out = out * d;
    if ((q * (q - 1) / 2) % 2 != 0) out = -out;
    return out;
}

// --- criterion 1: closed-form coefficient determinant ----------------------

void hankel_closed_form(Checker& c) {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> degree(-1, 5), qd(1, 4), small(1, 9), sign(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const int base_deg = degree(rng);
        const Poly base = base_deg < 0 ? Poly{} : random_poly(rng, base_deg);
        const int p = std::uniform_int_distribution<int>(base_deg + 1, 8)(rng);
        const int q = qd(rng);
        GaussianRational d(BigRational(small(rng), small(rng)));
        if (sign(rng)) d = -d;
        const Poly g = base + Poly::monomial(p, d);
        const GaussianRational expected = signed_power(d, q);
        for (int k = 0; k < 3; ++k) {
            const auto center = random_gaussian(rng);
            const auto verdict = hankel_determinant(series_of_polynomial(g, center, p + q - 1), p, q);
            c.require(verdict.member, "perturbed polynomial must be a member");
            c.require(verdict.det == expected, "determinant must equal the closed form exactly");
        }
    }
}

// --- criterion 2: order condition across the exact table -------------------

void order_condition(Checker& c) {
    std::mt19937 rng(102);
    long member_cells = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_series(rng, 10);
        for (int p = 0; p <= 10; ++p) {
            for (int q = 0; p + q <= 10; ++q) {
                if (!hankel_determinant(f, p, q).member) continue;
                ++member_cells;
                const auto r = pade_from_series(f, p, q);
                c.require(!order_defect(f, r).has_value(),
                          "member entries must satisfy the order condition exactly");
                c.require(r.den.coeff(0) == gr(1), "denominator must be normalized");
            }
        }
    }
    c.require(member_cells > 5000, "expected a large member population");
}

// --- criterion 3: explicit formula vs Toeplitz construction ----------------

void jacobi_equivalence(Checker& c) {
    std::mt19937 rng(103);
    std::uniform_int_distribution<int> ord(0, 5);
    int cases = 0;
    while (cases < 25) {
        const int p = ord(rng), q = ord(rng);
        std::vector<Complex> coeffs(static_cast<std::size_t>(p + q) + 1);
        for (auto& x : coeffs) x = random_complex(rng);
        const PowerSeries<Complex> f(Complex{0.0, 0.0}, std::move(coeffs));
        if (!hankel_determinant(f, p, q).member) continue;
        ++cases;
        const auto r = pade_from_series(f, p, q);
        int points = 0, attempts = 0;
        while (points < 20 && attempts < 200) {
            ++attempts;
            const Complex z = 0.8 * random_complex(rng);
            Complex via_construction, via_formula;
            try {
                via_construction = evaluate(r, z);
                via_formula = jacobi_evaluate(f, p, q, z);
            } catch (const PoleAtPoint&) {
                continue;
            }
            ++points;
            c.require(std::abs(via_formula - via_construction) <=
                          1e-9 * (1.0 + std::abs(via_construction)),
                      "formula and construction must agree to 1e-9");
        }
        c.require(points == 20, "needed 20 usable evaluation points per case");
    }
}

// --- criterion 4: membership law for reduced rationals ---------------------

void membership_law(Checker& c) {
    std::mt19937 rng(104);
    std::uniform_int_distribution<int> deg(0, 4), ord(0, 6);
    int functions = 0;
    long decided_cells = 0;
    while (functions < 200) {
        const auto f = RationalFn<GaussianRational>::reduce(random_poly(rng, deg(rng)),
                                                            random_poly(rng, deg(rng)));
        if (f.is_zero()) continue;
        GaussianRational zeta;
        do {
            zeta = random_gaussian(rng);
        } while (scalar_traits<GaussianRational>::is_zero(f.den().evaluate(zeta)));
        ++functions;
        std::vector<GaussianRational> probes;
        for (int k = 0; k < 10; ++k) probes.push_back(random_gaussian(rng));
        for (int p = 0; p <= 6; ++p) {
            for (int q = 0; q <= 6; ++q) {
                const auto report = check_rational_membership(f, zeta, p, q, probes);
                if (report.predicted != Prediction::Undetermined) {
                    ++decided_cells;
                    c.require(report.agree, "observed verdict must match the law");
                }
                if (report.reproduction_checked)
                    c.require(report.reproduction_ok,
                              "member approximants must reproduce the function exactly");
            }
        }
    }
    c.require(decided_cells > 4000, "expected many decided cells");
}

// --- criterion 5: density constructions -------------------------------------

void check_self_reproduction(Checker& c, const PerturbationResult& result) {
    const auto centers =
        build(PointListDescriptor{{{0.0, 0.0}, {0.25, 0.25}, {-0.375, 0.0}}});
    const auto probes = build(PointListDescriptor{{{0.125, 0.0}, {0.0, -0.25}, {0.3125, 0.125}}});
    for (auto zc : centers.points) {
        const auto zeta = GaussianRational::from_double(zc.real(), zc.imag());
        const auto series = taylor_at(result.g, zeta, result.p + result.q);
        const auto verdict = hankel_determinant(series, result.p, result.q);
        c.require(verdict.member, "perturbed function must be a member at every center");
        if (!verdict.member) continue;
        const auto r = pade_from_series(series, result.p, result.q);
        c.require(!order_defect(series, r).has_value(), "order condition must hold exactly");
    }
    const auto report = verify_construction(result, centers, probes);
    for (const auto& check : report.centers)
        c.require(check.member && check.residual == 0.0,
                  "self-reproduction residual must be exactly zero");
}

void density_constructions(Checker& c) {
    std::mt19937 rng(105);
    const auto circle = build(CircleDescriptor{{0.0, 0.0}, 1.0, 64});
    const auto disk_half = build(DiskDescriptor{{0.0, 0.0}, 0.5, 8});

    // worked polynomial case: d is half of 0.1 over the unit circle
    {
        const auto result = perturb_polynomial(Poly{}, 2, 1, 0.1, circle);
        c.require(std::abs(result.d.to_complex() - Complex{0.05, 0.0}) < 1e-12,
                  "worked polynomial case must give d = 0.05");
        check_self_reproduction(c, result);
    }
    // worked smooth case: derivative sups of z^2 cap the budget at 1/4
    {
        const auto result = perturb_polynomial_smooth(Poly{}, 2, 1, 1.0, 2, circle);
        c.require(std::abs(result.d.to_complex() - Complex{0.25, 0.0}) < 1e-12,
                  "worked smooth case must give d = 1/4");
        auto mono = to_float(result.num_perturbed);
        for (int ell = 0; ell <= 2; ++ell) {
            double sup = 0.0;
            for (auto z : circle.points) sup = std::max(sup, std::abs(mono.evaluate(z)));
            c.require(sup < 1.0, "every derivative sup must stay below eps");
            mono = mono.derivative();
        }
        check_self_reproduction(c, result);
    }
    // worked rational case: excluded value -1, d = 1/4, coprime outcome
    {
        const auto result =
            perturb_rational(Poly({gr(1)}), Poly({gr(1), gr(-1)}), 1, 2, 0.5, disk_half);
        c.require(std::abs(result.d.to_complex() - Complex{0.25, 0.0}) < 1e-12,
                  "worked rational case must give d = 0.25");
        c.require(result.excluded_values.size() == 1 &&
                      std::abs(result.excluded_values[0].to_complex() - Complex{-1.0, 0.0}) < 1e-12,
                  "worked rational case must exclude -1");
        c.require(gcd(result.num_perturbed, result.den).degree_less_than(1),
                  "perturbed rational must stay coprime");
        check_self_reproduction(c, result);
    }
    // randomized batteries for all four variants
    for (int trial = 0; trial < 5; ++trial) {
        const int base_deg = std::uniform_int_distribution<int>(-1, 3)(rng);
        const Poly base = base_deg < 0 ? Poly{} : random_poly(rng, base_deg);
        const int p = std::uniform_int_distribution<int>(base_deg + 1, 6)(rng);
        const int q = std::uniform_int_distribution<int>(0, 3)(rng);
        const double eps = 0.25;
        const bool smooth = trial % 2 == 0;
        const int n_smooth = 2;
        const auto result = smooth
                                ? perturb_polynomial_smooth(base, p, q, eps, n_smooth, circle)
                                : perturb_polynomial(base, p, q, eps, circle);
        auto diff = to_float(result.num_perturbed - base);
        for (int ell = 0; ell <= (smooth ? n_smooth : 0); ++ell) {
            double sup = 0.0;
            for (auto z : circle.points) sup = std::max(sup, std::abs(diff.evaluate(z)));
            c.require(sup < eps, "perturbation must stay within eps on the samples");
            diff = diff.derivative();
        }
        check_self_reproduction(c, result);
    }
    for (int trial = 0; trial < 4; ++trial) {
        const auto den = random_poly(rng, 1 + trial % 2);
        const auto den_f = to_float(den);
        double min_b = 1e300;
        for (auto z : disk_half.points) min_b = std::min(min_b, std::abs(den_f.evaluate(z)));
        if (min_b < 1e-2) continue;
        const auto num = random_poly(rng, 0);
        if (!gcd(num, den).degree_less_than(1)) continue;
        const int p = 2, q = 3;
        const double eps = 0.25;
        const bool smooth = trial % 2 == 1;
        const auto result = perturb_rational(num, den, p, q, eps, disk_half,
                                             smooth ? std::optional<int>(2) : std::nullopt);
        c.require(gcd(result.num_perturbed, result.den).degree_less_than(1),
                  "perturbed rational must stay coprime");
        // sup |g - R| = sup |d z^p / B| on the samples
        const auto d_mono = to_float(Poly::monomial(p, result.d));
        for (int ell = 0; ell <= (smooth ? 2 : 0); ++ell) {
            double sup = 0.0;
            for (auto z : disk_half.points) {
                const auto num_local = series_of_polynomial(d_mono, z, ell);
                const auto den_local = series_of_polynomial(den_f, z, ell);
                const auto quot = divide_series(num_local.coeffs(), den_local.coeffs(), ell);
                double fact = 1.0;
                for (int j = 2; j <= ell; ++j) fact *= j;
                sup = std::max(sup, fact * std::abs(quot[static_cast<std::size_t>(ell)]));
            }
            c.require(sup < eps, "rational perturbation must stay within eps on the samples");
        }
        check_self_reproduction(c, result);
    }
}

// --- criterion 6: convergence of the exponential row experiment ------------

void exp_convergence(Checker& c) {
    // ground truth: the degree-40 Maclaurin polynomial of exp
    std::vector<Complex> maclaurin(41);
    maclaurin[0] = 1.0;
    for (int v = 1; v <= 40; ++v)
        maclaurin[static_cast<std::size_t>(v)] = maclaurin[static_cast<std::size_t>(v - 1)] / static_cast<double>(v);
    const Polynomial<Complex> reference(std::move(maclaurin));

    Oracle<Complex> oracle = make_exp_oracle();
    oracle.truth = [reference](Complex z, int) { return reference.evaluate(z); };

    const auto centers = build(PointListDescriptor{{{0.0, 0.0}}});
    const auto region = build(DiskDescriptor{{0.0, 0.0}, 1.0, 16});
    const auto rows = run_converge(oracle, IndexFamily{RowRule{1}}, centers, region, 12);
    c.require(rows.size() == 12, "expected twelve experiment rows");

    int first_clean = -1; // first n with no pole flag from there on
    for (int n = 12; n >= 1; --n) {
        const auto& row = rows[static_cast<std::size_t>(n - 1)];
        if (!row.member_all_centers || !row.sup_per_ell[0].has_value()) break;
        first_clean = n;
    }
    c.require(first_clean >= 1 && first_clean <= 12,
              "pole flags must clear at some step no later than n = 12");
    const auto& last = rows.back();
    c.require(last.member_all_centers && last.sup_per_ell[0].has_value(),
              "final row must be a member without poles");
    if (last.sup_per_ell[0].has_value())
        c.require(*last.sup_per_ell[0] < 1e-6, "final sup error must be below 1e-6");
}

// --- criterion 7: stability under coefficient noise ------------------------

void stability(Checker& c) {
    const double eta = 1e-10;
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> noise(-eta, eta);

    std::vector<std::pair<ExactSeries, std::pair<int, int>>> cases;
    {
        std::vector<GaussianRational> exp_like{gr(1), gr(1), gr(1, 2), gr(1, 6), gr(1, 24)};
        cases.emplace_back(ExactSeries(gr(0), exp_like), std::pair{2, 2});
        cases.emplace_back(ExactSeries(gr(0), {gr(1), gr(1), gr(1)}), std::pair{0, 1});
        std::mt19937 gen(1071);
        while (true) {
            auto f = random_series(gen, 5);
            if (!hankel_determinant(f, 3, 2).member) continue;
            cases.emplace_back(f, std::pair{3, 2});
            break;
        }
    }
    const std::vector<Complex> probes{{0.1, 0.0}, {0.0, 0.3}, {0.2, -0.2}};
    for (const auto& [exact, orders] : cases) {
        const auto [p, q] = orders;
        const auto base = to_float(exact);
        c.require(hankel_determinant(base, p, q).member, "base series must be a member");
        const auto r0 = pade_from_series(base, p, q);
        for (int trial = 0; trial < 50; ++trial) {
            auto jittered = base.coeffs();
            for (auto& x : jittered) x += Complex(noise(rng), noise(rng));
            const PowerSeries<Complex> f(base.center(), std::move(jittered));
            const auto verdict = hankel_determinant(f, p, q);
            c.require(verdict.member, "membership must survive 1e-10 coefficient noise");
            if (!verdict.member) continue;
            const auto r = pade_from_series(f, p, q);
            for (auto z : probes)
                c.require(std::abs(evaluate(r, z) - evaluate(r0, z)) < 1e-4,
                          "evaluations must move by less than 1e-4");
        }
    }
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<void(Checker&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "hankel-closed-form", 10.0, hankel_closed_form},
        {2, "order-condition", 30.0, order_condition},
        {3, "jacobi-equivalence", 10.0, jacobi_equivalence},
        {4, "rational-membership-law", 0.0, membership_law},
        {5, "density-constructions", 0.0, density_constructions},
        {6, "exp-row-convergence", 5.0, exp_convergence},
        {7, "coefficient-stability", 0.0, stability},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        criterion.run(checker);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
            checker.ok = false;
            checker.detail = "exceeded the time limit";
        }
        std::printf("%s  criterion %d  %-26s  (%.2fs)%s%s\n", checker.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.name, elapsed, checker.ok ? "" : "  ",
                    checker.ok ? "" : checker.detail.c_str());
        if (!checker.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
