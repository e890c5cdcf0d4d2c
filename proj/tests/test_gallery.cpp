#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "opstar/gallery/ainf.hpp"
#include "opstar/gallery/algebras.hpp"
#include "opstar/gallery/bump.hpp"
#include "opstar/gallery/entire.hpp"
#include "opstar/gallery/legendre.hpp"
#include "opstar/gallery/torus.hpp"
#include "opstar/gallery/unit_chains.hpp"
#include "opstar/staralg.hpp"

using namespace opstar;
using namespace opstar::gallery;

// ---------------------------------------------------------------- torus

TEST(Torus, SmallSpectra) {
    const auto t1 = torus_spectrum(1, 7);
    EXPECT_EQ(t1.eigenvalues, (std::vector<double>{0, 1, 1, 4, 4, 9, 9}));
    const auto t2 = torus_spectrum(2, 5);
    EXPECT_EQ(t2.eigenvalues, (std::vector<double>{0, 1, 1, 1, 1}));
    EXPECT_THROW((void)torus_spectrum(4, 3), std::invalid_argument);
}

TEST(Torus, MultiplicitiesMatchBruteForceLattice) {
    for (int n = 1; n <= 3; ++n) {
        const auto spec = torus_spectrum(n, 2000);
        std::map<long, std::size_t> brute;
        const int r = 40;
        std::vector<int> m(static_cast<std::size_t>(n), -r);
        for (;;) {
            long s = 0;
            for (int v : m) s += static_cast<long>(v) * v;
            ++brute[s];
            std::size_t f = 0;
            while (f < m.size() && ++m[f] > r) m[f++] = -r;
            if (f == m.size()) break;
        }
        for (std::size_t i = 0; i + 1 < spec.shells.size() && spec.shells[i].norm2 <= r * r; ++i) {
            EXPECT_EQ(spec.shells[i].multiplicity, brute[spec.shells[i].norm2]) << "n=" << n;
            EXPECT_EQ(lattice_shell_count(n, spec.shells[i].norm2), brute[spec.shells[i].norm2]);
        }
    }
}

TEST(Torus, WeylBandCircle) {
    const auto spec = torus_spectrum(1, 10000);
    const auto band = weyl_band(spec, 100, 10000);
    EXPECT_GE(band.low, 0.2);
    EXPECT_LE(band.high, 0.3);
}

TEST(Torus, SobolevCoefficients) {
    const auto spec = torus_spectrum(1, 32);
    ProbeRng rng(1);
    const Vector a = rng.complex_gaussian_vector(32);
    EXPECT_EQ(fourier_sobolev_coeffs(a, spec, 0), a);
    const Vector e1 = seqspace::unit_vector(32, 1);
    EXPECT_EQ(fourier_sobolev_coeffs(e1, spec, 5), e1);
    const Vector b = fourier_sobolev_coeffs(a, spec, 2);
    for (Eigen::Index k = 0; k < 32; ++k) {
        // Ordering 0, ±1, ±2, … gives |m| = ⌈k/2⌉ for the 0-based position k.
        const double m = static_cast<double>((k + 1) / 2);
        EXPECT_NEAR(std::abs(b(k) - a(k) * std::pow(1.0 + m * m, 2)), 0.0, 1e-12 * std::abs(b(k)));
    }
    EXPECT_THROW((void)fourier_sobolev_coeffs(Vector::Ones(40), spec, 1), DimensionMismatch);
}

TEST(Fourier, ConvolutionIsPointwiseProductAndAlphaExact) {
    const std::vector<int> sizes{4, 3};
    const auto alg = torus_convolution_algebra(sizes);
    ProbeRng rng(2);
    const Vector a = rng.complex_gaussian_vector(alg.dim());
    const Vector b = rng.complex_gaussian_vector(alg.dim());
    const Vector lhs = trig_poly_samples(sizes, alg.product(a, b));
    const Vector rhs = trig_poly_samples(sizes, a).cwiseProduct(trig_poly_samples(sizes, b));
    EXPECT_LE(max_abs(lhs - rhs), 1e-12);
    EXPECT_EQ(staralg::check_alpha(alg, staralg::GramForm::identity(alg.dim())).value, 0.0);
}

// ---------------------------------------------------------------- Legendre

TEST(Legendre, ValuesAndErrors) {
    for (double x : {-1.0, -0.3, 0.0, 0.8, 1.0}) EXPECT_NEAR(legendre_eval(0, x), 1.0 / std::sqrt(2.0), 2e-16);
    EXPECT_NEAR(legendre_eval(1, 1.0), std::sqrt(1.5), 1e-15);
    EXPECT_THROW((void)legendre_eval(-1, 0.0), std::invalid_argument);
    EXPECT_THROW((void)legendre_eval(2, 1.5), std::domain_error);
}

TEST(Legendre, RodriguesClosedFormsDegreeTwoAndThree) {
    for (double x : {-0.9, -0.2, 0.4, 1.0}) {
        EXPECT_NEAR(legendre_eval(2, x), std::sqrt(2.5) * 0.5 * (3 * x * x - 1), 1e-15);
        EXPECT_NEAR(legendre_eval(3, x), std::sqrt(3.5) * 0.5 * (5 * x * x * x - 3 * x), 1e-15);
    }
}

TEST(Legendre, OrthonormalityAndRecurrence) {
    EXPECT_LE(legendre_orthonormality_defect(30), 1e-12);
    for (double x = -1.0; x <= 1.0; x += 0.05) {
        const auto q = legendre_all(50, x);
        for (int k = 1; k < 50; ++k) {
            const auto p = [&](int j) { return q[static_cast<std::size_t>(j)] / std::sqrt(j + 0.5); };
            EXPECT_LE(std::abs((k + 1) * p(k + 1) - (2 * k + 1) * x * p(k) + k * p(k - 1)), 1e-12 * (2 * k + 1));
        }
    }
}

TEST(GaussLegendre, ExactForPolynomials) {
    const auto rule = gauss_legendre(10);
    EXPECT_NEAR(integrate([](double x) { return std::pow(x, 18); }, -1.0, 1.0, rule), 2.0 / 19.0, 1e-15);
    EXPECT_NEAR(integrate([](double x) { return x * x; }, 0.0, 3.0, rule), 9.0, 1e-13);
}

TEST(Nikolskii, Examples) {
    const auto one = nikolskii_check({1.0});
    EXPECT_NEAR(one.sup, 1.0, 1e-14);
    EXPECT_NEAR(one.l2, std::sqrt(2.0), 1e-14);
    EXPECT_TRUE(one.holds());
    for (int n = 0; n <= 20; ++n) {
        std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
        c.back() = 1.0;
        const auto q = nikolskii_check_legendre(c);
        EXPECT_NEAR(q.sup, std::sqrt(n + 0.5), 1e-10);
        EXPECT_NEAR(q.l2, 1.0, 1e-12);
    }
}

TEST(Nikolskii, ChristoffelDarbouxWitnessRatio) {
    for (int n = 0; n <= 30; ++n) {
        const auto r = nikolskii_check_legendre(christoffel_darboux_witness(n));
        EXPECT_TRUE(r.holds());
        EXPECT_NEAR(r.extremality(), 1.0 / std::sqrt(2.0), 1e-10);
    }
}

TEST(Nikolskii, RandomMonomialPolynomials) {
    ProbeRng rng(3);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> c(31);
        for (auto& v : c) v = rng.normal();
        EXPECT_TRUE(nikolskii_check(c).holds());
    }
}

// ---------------------------------------------------------------- entire functions

TEST(Joukowski, SemiAxesAndReciprocal) {
    const auto e = joukowski_ellipse(2.0);
    EXPECT_DOUBLE_EQ(e.a, 1.25);
    EXPECT_DOUBLE_EQ(e.b, 0.75);
    const auto inv = joukowski_ellipse(0.5);
    EXPECT_DOUBLE_EQ(inv.a, 1.25);
    EXPECT_DOUBLE_EQ(inv.b, 0.75);
    const auto one = joukowski_ellipse(1.0);
    EXPECT_EQ(one.a, 1.0);
    EXPECT_EQ(one.b, 0.0);
    EXPECT_THROW((void)joukowski_ellipse(0.0), std::invalid_argument);
}

TEST(Hadamard, ConstantAndIdentity) {
    const EntireFunctionSample c{{Complex(2.0, 1.0)}};
    const auto hc = hadamard_check(c, 1.5);
    EXPECT_NEAR(hc.slack, 0.0, 1e-12);
    const EntireFunctionSample z{{0.0, 1.0}};
    const auto hz = hadamard_check(z, 2.0);
    EXPECT_NEAR(hz.sup_er, 1.25, 1e-12);
    EXPECT_NEAR(hz.sup_interval, 1.0, 1e-12);
    EXPECT_NEAR(hz.sup_er2, 2.125, 1e-12);
    EXPECT_NEAR(hz.lhs, 1.5625, 1e-11);
    EXPECT_GT(hz.slack, 0.5);
}

TEST(Hadamard, RandomDegreeTen) {
    ProbeRng rng(4);
    for (double r : {1.2, 1.5, 2.0}) {
        for (int t = 0; t < 30; ++t) {
            const auto h = hadamard_check(EntireFunctionSample::random(10, rng), r);
            EXPECT_GE(h.relative_slack, -1e-9);
            EXPECT_TRUE(h.resolved);
        }
    }
}

TEST(TaylorTail, Examples) {
    EntireFunctionSample p{{1.0, 2.0, 3.0, 0.0, 0.0}};
    EXPECT_NEAR(taylor_tail_bound(p, 2).lhs, 0.0, 1e-15);
    for (int n = 1; n <= 8; ++n) {
        EntireFunctionSample mono;
        mono.coeffs.assign(static_cast<std::size_t>(n) + 2, 0.0);
        mono.coeffs.back() = 1.0;
        const auto r = taylor_tail_bound(mono, n);
        EXPECT_NEAR(r.lhs, 1.0, 1e-12);
        EXPECT_NEAR(r.rhs, std::pow(1.5, n + 1), 1e-9 * r.rhs);
    }
    EXPECT_THROW((void)taylor_tail_bound(p, 4), std::invalid_argument);
}

// ---------------------------------------------------------------- unit chains

TEST(LambdaUnit, PureUnitAndSingleCoordinate) {
    const auto alpha = seqspace::WeightSequence::linear(64);
    Vector unit = Vector::Zero(65);
    unit(0) = 1.0;
    Vector e1 = Vector::Zero(65);
    e1(1) = 1.0;
    const auto r = lambda_unit_dn(alpha, 1, {unit, e1});
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.gamma, 2);
    EXPECT_EQ(r.t, 4);
    EXPECT_LE(r.max_ratio, 16.0);
    EXPECT_LE(r.max_lambda_ratio, 4.0);
}

TEST(LambdaUnit, SeededSweepAndPartitionPrecondition) {
    const auto alpha = seqspace::WeightSequence::linear(256);
    ProbeRng rng(5);
    for (int s : {1, 2}) {
        const auto probes = lambda_unit_probes(alpha, 256, 300, rng);
        const auto r = lambda_unit_dn(alpha, s, probes);
        EXPECT_TRUE(r.passed());
        EXPECT_TRUE(r.a3_precondition);
        EXPECT_GT(r.a1_count + r.a2_count + r.a3_count, 0u);
    }
}

TEST(KinfUnit, SingleEntryClosedForm) {
    KinfProbe p;
    p.x = Matrix::Zero(3, 3);
    p.x(0, 1) = 1.0;
    // Entry (1, 2): grade-n weight 2^n, base norm 1/2.
    EXPECT_NEAR(std::exp(2.0 * kinf_unit_log_grade(p, 1)), 4.0, 1e-12);
    EXPECT_NEAR(kinf_unit_norm(p), 0.5, 1e-12);
    EXPECT_NEAR(std::exp(kinf_unit_log_grade(p, 3)), 8.0, 1e-12);
    const auto r = kinf_unit_dn(1, {p});
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(r.max_offdiag_ratio, 1.0, 1e-12);
}

TEST(KinfUnit, SeededSweepBounded) {
    ProbeRng rng(6);
    for (Eigen::Index d : {8, 16}) {
        const auto r = kinf_unit_dn(1, kinf_unit_probes(d, 100, rng));
        EXPECT_TRUE(r.passed());
        EXPECT_LE(r.max_combined, r.combined_bound);
    }
}

// ---------------------------------------------------------------- bump

TEST(Bump, DerivativeSquaredIntegralsMatchHighPrecisionOracle) {
    // ∫_{-1}^{1} (b^{(k)})² from 60-digit quadrature of the same closed form.
    const double oracle[] = {0.133086120845,   0.409587060753,   10.8342678114,    3202.91427131,
                             4732933.92058,    21544476384.1,    2.35177183004e14, 5.25517192655e18,
                             2.15468379234e23, 1.49592767371e28, 1.65375315808e33, 2.77307754491e38,
                             6.78082401552e43, 2.34039425921e49, 1.10940414275e55, 7.0557880043e60};
    for (int k = 0; k <= kMaxBumpDerivative; ++k) {
        const double v = adaptive_integrate(
            [&](double x) {
                const double d = bump_derivative(k, x);
                return d * d;
            },
            -1.0, 1.0);
        EXPECT_NEAR(v / oracle[k], 1.0, 1e-10) << "k=" << k;
    }
}

TEST(Bump, FirstDerivativeFormula) {
    // b'(x) = −2x (1−x²)^{−2} b(x).
    for (double x : {-0.7, 0.1, 0.5}) {
        const double b = std::exp(-1.0 / (1.0 - x * x));
        EXPECT_NEAR(bump_derivative(1, x), -2.0 * x * b / std::pow(1.0 - x * x, 2), 1e-15);
    }
    EXPECT_EQ(bump_derivative(3, 1.0), 0.0);
}

TEST(Bump, ConstantOnlyAndDilations) {
    const auto c = bump_dn_check(2, 1.0, 1.0, 0.0);
    EXPECT_NEAR(c.l2, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(c.constant, 1.0, 1e-12);
    const auto m1 = bump_dn_check(1);
    EXPECT_TRUE(m1.holds());
    EXPECT_LE(m1.constant, 2.0);
    double prev_norm = 0.0;
    for (double eps : {1.0, 0.5, 0.25, 0.125}) {
        const auto r = bump_dn_check(2, eps);
        EXPECT_TRUE(r.holds());
        EXPECT_GT(r.norm_2m, prev_norm);
        prev_norm = r.norm_2m;
    }
    EXPECT_THROW((void)bump_dn_check(8), std::invalid_argument);
    EXPECT_THROW((void)bump_dn_check(1, 1.5), std::invalid_argument);
}

// ---------------------------------------------------------------- A∞(𝔻)

TEST(Ainf, FirstMemberAndFamily) {
    const auto t = ainf_counterexample(3, 1, 2);
    EXPECT_NEAR(t.rows[0].sup_interval, 1.0, 1e-12);
    EXPECT_NEAR(t.rows[0].sup_disc, 2.0, 1e-12);
    const Vector f2 = ainf_family_member(2);
    EXPECT_EQ(f2.size(), 5);
    EXPECT_EQ(f2(0), Complex(1.0));
    EXPECT_EQ(f2(2), Complex(-2.0));
    EXPECT_EQ(f2(4), Complex(1.0));
}

TEST(Ainf, TableMatchesIndependentPolynomialOracle) {
    // Ratios ‖f_n‖_0² / ‖f_n‖_3 from a separate numpy evaluation on 65536 circle points.
    const auto t = ainf_counterexample(40, 3);
    const std::map<int, double> oracle{{5, 0.26666666666666666}, {10, 1.0343434343434343},
                                       {24, 1215.7402898550724}, {30, 39812.451761216165},
                                       {40, 17190613.317323327}};
    for (const auto& [n, v] : oracle) {
        EXPECT_NEAR(t.rows[static_cast<std::size_t>(n - 1)].ratio / v, 1.0, 1e-8) << "n=" << n;
    }
    EXPECT_EQ(t.first_above, 24);
    EXPECT_EQ(t.lower_bound_first_above, 28);
    EXPECT_TRUE(t.bound_respected);
    EXPECT_TRUE(t.monotone_from_5);
    EXPECT_NEAR(t.exponent, 1.0, 0.1);
}

TEST(Ainf, DerivativeSupsAgreeWithLeibnizDirectSum) {
    for (int n : {3, 7, 12}) {
        const Vector c = ainf_family_member(n);
        for (int k = 0; k <= 4; ++k) {
            double best = 0.0;
            for (int i = 0; i < 16384; ++i) {
                const Complex z = std::polar(1.0, 2.0 * M_PI * i / 16384);
                Complex acc = 0.0;
                for (Eigen::Index m = k; m < c.size(); ++m) {
                    double falling = 1.0;
                    for (int s = 0; s < k; ++s) falling *= static_cast<double>(m - s);
                    acc += c(m) * falling * std::pow(z, static_cast<double>(m - k));
                }
                best = std::max(best, std::abs(acc));
            }
            EXPECT_NEAR(ainf_derivative_sup(n, k).value / best, 1.0, 1e-7) << n << "," << k;
        }
    }
}

TEST(Ainf, OverflowBeyondSixty) {
    EXPECT_THROW((void)ainf_counterexample(61, 3), NumericOverflow);
}
