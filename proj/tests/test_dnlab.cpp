#include <gtest/gtest.h>

#include <cmath>

#include "opstar/dnlab.hpp"

using namespace opstar;
using namespace opstar::dnlab;
using opstar::seqspace::unit_vector;

TEST(DnRatio, TightOnBasisVectorsOfS) {
    const SSpace s;
    for (Eigen::Index j : {1, 5, 40}) {
        for (int q = 1; q <= 3; ++q) {
            const auto r = dn_ratio(s, unit_vector(64, j), q, 2 * q);
            ASSERT_TRUE(r.has_value());
            EXPECT_NEAR(*r, 1.0, 1e-13);
        }
    }
}

TEST(DnRatio, ScaleInvariantAndCauchySchwarzBounded) {
    const SSpace s;
    ProbeRng rng(1);
    for (int t = 0; t < 100; ++t) {
        Vector x = rng.complex_gaussian_vector(50);
        for (Eigen::Index j = 0; j < 50; ++j) x(j) *= std::exp(-0.3 * (j + 1));
        const double r = *dn_ratio(s, x, 1, 2);
        EXPECT_LE(r, 1.0 + 1e-12);
        const double scaled = *dn_ratio(s, Complex(3.7, -1.2) * x, 1, 2);
        EXPECT_NEAR(scaled, r, 1e-12 * r);
    }
}

TEST(DnRatio, ZeroVectorExcluded) {
    EXPECT_FALSE(dn_ratio(SSpace{}, Vector::Zero(8), 1, 2).has_value());
}

TEST(DnRatio, LambdaSpaceSurvivesHugeGrades) {
    const LambdaSpace sp(seqspace::WeightSequence::linear(1024));
    const auto r = dn_ratio(sp, unit_vector(1024, 1000), 3, 6);
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(*r, 1.0, 1e-12);
}

TEST(LambdaUnitSpace, PureUnitNormIsZetaTwo) {
    const LambdaUnitSpace sp(seqspace::WeightSequence::linear(100));
    Vector x = Vector::Zero(101);
    x(0) = 1.0;
    // Σ_{j≥1} j^{-2} including the analytic tail beyond the truncation.
    EXPECT_NEAR(std::exp(sp.log_base_norm(x)), std::sqrt(M_PI * M_PI / 6.0), 1e-12);
    EXPECT_NEAR(inverse_square_tail(100) + 1.6349839001848929, M_PI * M_PI / 6.0, 1e-12);
}

TEST(CertifyDn, SInterpolationCertified) {
    const SSpace s;
    for (int q = 1; q <= 3; ++q) {
        DnProbe p{&s, q, {2 * q}, {64, 256, 1024}, {}, 7};
        const auto cert = certify_dn(p);
        EXPECT_EQ(cert.verdict, Verdict::CertifiedBounded);
        ASSERT_TRUE(cert.witness_r.has_value());
        EXPECT_EQ(*cert.witness_r, 2 * q);
        for (const auto& pt : cert.curve(2 * q).points) EXPECT_LE(pt.constant, 1.0 + 1e-10);
    }
}

TEST(CertifyDn, SmallestBoundedRIsWitness) {
    const SSpace s;
    DnProbe p{&s, 1, {4, 2, 3}, {32, 128, 512}, {}, 3};
    const auto cert = certify_dn(p);
    EXPECT_EQ(cert.verdict, Verdict::CertifiedBounded);
    EXPECT_EQ(*cert.witness_r, 2);
}

TEST(CertifyDn, GrowingConstantFalsified) {
    // r < 2q cannot dominate: e_d gives d^{2q−r}.
    const SSpace s;
    DnProbe p{&s, 2, {2}, {16, 64, 256}, {}, 1};
    const auto cert = certify_dn(p);
    EXPECT_EQ(cert.verdict, Verdict::FalsifiedGrowing);
    EXPECT_NEAR(cert.curve(2).exponent, 2.0, 0.05);
}

TEST(CertifyDn, SinglePointInconclusiveAndBadInputs) {
    const SSpace s;
    DnProbe one{&s, 1, {2}, {64}, {}, 1};
    EXPECT_EQ(certify_dn(one).verdict, Verdict::Inconclusive);
    DnProbe bad_grid{&s, 1, {2}, {64, 32}, {}, 1};
    EXPECT_THROW((void)certify_dn(bad_grid), std::invalid_argument);
    DnProbe no_r{&s, 1, {}, {8, 16}, {}, 1};
    EXPECT_THROW((void)certify_dn(no_r), std::invalid_argument);
}

TEST(CertifyDn, DeterministicAndMonotoneUnderEnlargement) {
    const SSpace s;
    DnProbe small{&s, 1, {1}, {16, 64}, {}, 5};
    small.family.damped_gaussians = 8;
    DnProbe big = small;
    big.family.damped_gaussians = 64;
    const auto a = certify_dn(small);
    const auto a2 = certify_dn(small);
    const auto b = certify_dn(big);
    for (std::size_t i = 0; i < a.curves[0].points.size(); ++i) {
        EXPECT_EQ(a.curves[0].points[i].constant, a2.curves[0].points[i].constant);
        EXPECT_LE(a.curves[0].points[i].constant, b.curves[0].points[i].constant);
    }
}

TEST(RatioAccumulator, MergeIsOrderIndependent) {
    RatioAccumulator a;
    RatioAccumulator b;
    a.add(0, 1.0);
    a.add(1, std::nullopt);
    b.add(2, 3.0);
    b.add(3, 3.0);
    RatioAccumulator ab = a;
    ab.merge(b);
    RatioAccumulator ba = b;
    ba.merge(a);
    EXPECT_EQ(ab.max_ratio, ba.max_ratio);
    EXPECT_EQ(ab.argmax, 2u);
    EXPECT_EQ(ba.argmax, 2u);
    EXPECT_EQ(ab.excluded, 1u);
    EXPECT_EQ(ab.count, 4u);
}

TEST(FalsifyDn, ConstantAndBasisFamiliesHaveZeroExponent) {
    const SSpace s;
    std::vector<Eigen::Index> params;
    for (Eigen::Index n = 1; n <= 30; ++n) params.push_back(n);
    const auto rep = falsify_dn(
        s, [](Eigen::Index n) { return unit_vector(n, n); }, params, 1, {2}, 1e3);
    EXPECT_NEAR(rep.curves[0].exponent, 0.0, 1e-10);
    EXPECT_FALSE(rep.curves[0].first_above.has_value());
    const auto flat = falsify_dn(
        s, [](Eigen::Index) { return Vector::Ones(4).eval(); }, params, 1, {2}, 1e3);
    EXPECT_NEAR(flat.curves[0].exponent, 0.0, 1e-10);
}

TEST(Base2Exponent, RecoversLeadingCoefficient) {
    std::vector<double> n;
    std::vector<double> v;
    for (int k = 5; k <= 40; ++k) {
        n.push_back(k);
        v.push_back(std::ldexp(1.0, k) / std::pow(8.0 * k, 3));
    }
    EXPECT_NEAR(base2_growth_exponent(n, v), 1.0, 1e-10);
}

TEST(DiagonalLift, IdentityGramAndGradeZero) {
    const auto alpha = seqspace::WeightSequence::linear(5);
    const auto a = diagonal_selfadjoint_lift(staralg::GramForm::identity(5), alpha, 2);
    for (Eigen::Index j = 0; j < 5; ++j) EXPECT_NEAR(a(j, j).real(), std::exp(2.0 * (j + 1)), 1e-9 * std::exp(2.0 * (j + 1)));
    EXPECT_LE(max_abs(a - Matrix(a.diagonal().asDiagonal())), 0.0);
    ProbeRng rng(2);
    const Matrix m = rng.complex_gaussian_matrix(5, 5);
    const staralg::GramForm g(m.adjoint() * m + Matrix::Identity(5, 5));
    EXPECT_LE(max_abs(diagonal_selfadjoint_lift(g, alpha, 0) - Matrix::Identity(5, 5)), 1e-12);
}

TEST(DiagonalLift, SelfAdjointNormPullbackAndSemigroup) {
    ProbeRng rng(3);
    const auto alpha = seqspace::WeightSequence::linear(8);
    const Matrix m = rng.complex_gaussian_matrix(8, 8);
    const staralg::GramForm g(m.adjoint() * m + Matrix::Identity(8, 8));
    const Matrix a1 = diagonal_selfadjoint_lift(g, alpha, 1);
    const double scale = max_abs(a1);
    EXPECT_LE(max_abs(g.adjoint_of(a1) - a1), 1e-10 * scale);
    for (int t = 0; t < 10; ++t) {
        const Vector xi = rng.complex_gaussian_vector(8);
        const double want = pulled_back_norm(g, alpha, 1, xi);
        EXPECT_NEAR(g.norm(a1 * xi), want, 1e-10 * want);
    }
    const Matrix a2 = diagonal_selfadjoint_lift(g, alpha, 2);
    const Matrix a3 = diagonal_selfadjoint_lift(g, alpha, 3);
    EXPECT_LE(max_abs(a1 * a2 - a3), 1e-9 * max_abs(a3));
    EXPECT_THROW((void)diagonal_selfadjoint_lift(g, seqspace::WeightSequence::linear(4), 1), DimensionMismatch);
}
