#include <gtest/gtest.h>

#include <cmath>

#include "opstar/seqspace.hpp"

using namespace opstar;
using namespace opstar::seqspace;

namespace {

Vector random_decaying(Eigen::Index d, ProbeRng& rng, double beta) {
    Vector x(d);
    for (Eigen::Index j = 0; j < d; ++j) x(j) = rng.complex_normal() * std::pow(j + 1.0, -beta);
    return x;
}

}  // namespace

TEST(NormS, UnitVectorAndOnes) {
    EXPECT_DOUBLE_EQ(norm_s(unit_vector(5, 3), 2), 9.0);
    EXPECT_NEAR(norm_s(Vector::Ones(3), 1), std::sqrt(14.0), 1e-15);
}

TEST(NormS, ZetaFourPartialSum) {
    const Eigen::Index d = 10000;
    Vector x(d);
    for (Eigen::Index j = 0; j < d; ++j) x(j) = 1.0 / std::pow(j + 1.0, 2);
    // 60-digit partial sum of Σ_{j≤10⁴} j^{-4}, square-rooted.
    EXPECT_NEAR(norm_s(x, 0), 1.040347650408653, 1e-14);
}

TEST(NormS, GradeZeroIsEuclideanNorm) {
    ProbeRng rng(1);
    for (int t = 0; t < 20; ++t) {
        const Vector x = rng.complex_gaussian_vector(37);
        EXPECT_NEAR(norm_s(x, 0), x.norm(), 4e-16 * x.norm());
    }
}

TEST(NormS, MonotoneInGradeAndInterpolates) {
    ProbeRng rng(2);
    for (int t = 0; t < 50; ++t) {
        const Vector x = random_decaying(64, rng, 2.0);
        for (int q = 0; q <= 3; ++q) {
            EXPECT_LE(norm_s(x, q), norm_s(x, q + 1));
            const double lhs = norm_s(x, q) * norm_s(x, q);
            EXPECT_LE(lhs, norm_s(x, 0) * norm_s(x, 2 * q) * (1.0 + 1e-14));
        }
    }
}

TEST(NormLambda, LogWeightsReproduceS) {
    ProbeRng rng(3);
    const auto alpha = WeightSequence::logj(40);
    EXPECT_TRUE(alpha.zero_leading_weight());
    for (int t = 0; t < 20; ++t) {
        const Vector x = random_decaying(40, rng, 1.5);
        for (int q = 0; q <= 3; ++q) {
            EXPECT_NEAR(norm_lambda(x, alpha, q), norm_s(x, q), 1e-13 * norm_s(x, q));
        }
    }
}

TEST(NormLambda, UnitVectorAndGeometricSum) {
    const auto alpha = WeightSequence::linear(50);
    EXPECT_NEAR(norm_lambda(unit_vector(50, 7), alpha, 2), std::exp(14.0), 1e-9);
    Vector x(50);
    for (Eigen::Index j = 0; j < 50; ++j) x(j) = std::exp(-2.0 * (j + 1));
    EXPECT_NEAR(norm_lambda(x, alpha, 1), 0.3956231069460752, 1e-15);
}

TEST(NormLambda, ShortWeightsRejected) {
    EXPECT_THROW((void)norm_lambda(Vector::Ones(10), WeightSequence::linear(5), 1), DimensionMismatch);
}

TEST(WeightSequence, RejectsNonIncreasingOrNegative) {
    EXPECT_THROW(WeightSequence::explicit_list({1.0, 0.5}), std::invalid_argument);
    EXPECT_THROW(WeightSequence::explicit_list({-1.0, 2.0}), std::invalid_argument);
    EXPECT_THROW((void)WeightSequence::explicit_list({1.0, 2.0}).extended(5), std::invalid_argument);
}

TEST(GradedNorm, DispatchesOnKind) {
    const Vector x = Vector::Ones(4);
    const auto alpha = WeightSequence::linear(4);
    EXPECT_EQ(graded_norm(x, {GradedKind::Polynomial, 1}), norm_s(x, 1));
    EXPECT_EQ(graded_norm(x, {GradedKind::Exponential, 1}, &alpha), norm_lambda(x, alpha, 1));
    EXPECT_NEAR(graded_norm(x, {GradedKind::DualPolynomial, 1}),
                std::sqrt(1.0 + 0.25 + 1.0 / 9 + 1.0 / 16), 1e-15);
    EXPECT_THROW((void)graded_norm(x, {GradedKind::Exponential, 1}), std::invalid_argument);
}

TEST(Nuclearity, LinearWeightsPeakAtThree) {
    const auto g = nuclearity_gauge(WeightSequence::linear(10000));
    EXPECT_NEAR(g.value, std::log(3.0) / 3.0, 1e-15);
    EXPECT_EQ(g.argmax, 3);
}

TEST(Nuclearity, LogOnePlusJApproachesOneAndPlateaus) {
    const auto alpha = WeightSequence::log1p(10000);
    const auto g = nuclearity_gauge(alpha);
    EXPECT_LT(g.value, 1.0);
    EXPECT_NEAR(g.value, 0.9999891432986536, 1e-12);
    const std::vector<Eigen::Index> dims{100, 1000, 10000};
    const auto scan = nuclearity_scan(alpha, dims);
    EXPECT_LT(scan.gauges[0].value, scan.gauges[1].value);
    EXPECT_LT(scan.gauges[1].value, scan.gauges[2].value);
    EXPECT_TRUE(scan.plateau);
}

TEST(Nuclearity, SquareRootLogIsFlaggedNonPlateau) {
    const auto alpha = WeightSequence::log1p(10000, 1.0, 0.5);
    const std::vector<Eigen::Index> dims{100, 1000, 10000};
    const auto scan = nuclearity_scan(alpha, dims);
    EXPECT_FALSE(scan.plateau);
    // log d / √log(d+1) at the last grid point, where the maximum sits.
    EXPECT_NEAR(scan.gauges.back().value, std::log(10000.0) / std::sqrt(std::log(10001.0)), 1e-12);
}

TEST(GammaIndex, ScanOracleValues) {
    const auto lin = gamma_index(WeightSequence::linear(10000));
    EXPECT_EQ(lin.gamma, 2);
    EXPECT_NEAR(lin.max_value, 1.1931471805599454, 1e-14);
    EXPECT_EQ(lin.argmax, 2);
    const auto lg = gamma_index(WeightSequence::log1p(10000));
    EXPECT_EQ(lg.gamma, 3);
    EXPECT_NEAR(lg.max_value, 2.3554627846929543, 1e-13);
    EXPECT_EQ(lg.argmax, 6);
    EXPECT_EQ(gamma_index(WeightSequence::linear(10000, 10.0)).gamma, 1);
    EXPECT_THROW((void)gamma_index(WeightSequence::logj(10)), std::domain_error);
}
