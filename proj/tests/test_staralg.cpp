#include <gtest/gtest.h>

#include "opstar/gallery/algebras.hpp"
#include "opstar/staralg.hpp"

using namespace opstar;
using namespace opstar::staralg;
using namespace opstar::gallery;

namespace {

// |(e_i e_j, e_k) − (e_j, e_i* e_k)| over all triples, straight from the structure tensor.
double brute_alpha(const StarAlgebraSpec& alg, const Matrix& g) {
    const Eigen::Index d = alg.dim();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            for (Eigen::Index k = 0; k < d; ++k) {
                const Vector ei = alg.basis(i);
                const Vector lhs_v = alg.product(ei, alg.basis(j));
                const Vector rhs_v = alg.product(alg.star(ei), alg.basis(k));
                const Complex lhs = alg.basis(k).dot(g * lhs_v);
                const Complex rhs = rhs_v.dot(g * alg.basis(j));
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    return worst;
}

}  // namespace

TEST(StarAlgebra, BuiltinsValidate) {
    for (const auto& alg : {diagonal_algebra(4), cyclic_group_algebra(5), torus_convolution_algebra({3, 2}),
                            matrix_algebra(2), zero_algebra(3), annihilator_algebra(3)}) {
        EXPECT_TRUE(alg.validate().empty());
    }
}

TEST(StarAlgebra, BrokenAssociativityIsReportedWithTriple) {
    const auto good = cyclic_group_algebra(3);
    std::vector<Matrix> left;
    for (Eigen::Index i = 0; i < 3; ++i) left.push_back(good.left_basis(i));
    left[1](2, 1) = 2.0;  // e_2 e_2 = 2 e_3
    const StarAlgebraSpec bad(left, good.involution(), good.unit());
    const auto issues = bad.validate();
    ASSERT_FALSE(issues.empty());
    EXPECT_EQ(issues.front().invariant, "associativity");
    EXPECT_EQ(issues.front().basis.size(), 3u);
    EXPECT_NE(issues.front().describe().find("(e"), std::string::npos);
}

TEST(StarAlgebra, ShapeErrors) {
    EXPECT_THROW(StarAlgebraSpec({Matrix::Identity(2, 2)}, Matrix::Identity(2, 2), std::nullopt),
                 std::invalid_argument);
    EXPECT_THROW((void)annihilator_algebra(2).unit(), std::logic_error);
}

TEST(GramForm, RejectsIndefiniteAndNonHermitian) {
    Matrix g = Matrix::Identity(2, 2);
    g(1, 1) = -1.0;
    EXPECT_THROW(GramForm{g}, NotPositiveDefinite);
    Matrix h = Matrix::Identity(2, 2);
    h(0, 1) = 0.5;
    EXPECT_THROW(GramForm{h}, std::invalid_argument);
}

TEST(GramForm, CholeskyAndSqrtReproduceG) {
    ProbeRng rng(1);
    const Matrix a = rng.complex_gaussian_matrix(6, 6);
    const GramForm g(a.adjoint() * a + Matrix::Identity(6, 6));
    const Matrix& r = g.cholesky_upper();
    EXPECT_LE(max_abs(r.adjoint() * r - g.matrix()), 1e-12);
    const Matrix s = g.hermitian_sqrt();
    EXPECT_LE(max_abs(s * s - g.matrix()), 1e-12);
    const Vector x = rng.complex_gaussian_vector(6);
    EXPECT_NEAR(g.norm(x), std::sqrt(x.dot(g.matrix() * x).real()), 1e-12);
}

TEST(CheckAlpha, ExamplesAgreeWithBruteForce) {
    const auto diag = diagonal_algebra(4);
    RealVector w(4);
    w << 1.0, 2.0, 0.5, 3.0;
    EXPECT_EQ(check_alpha(diag, GramForm::diagonal(w)).value, 0.0);
    const auto z3 = cyclic_group_algebra(3);
    EXPECT_EQ(check_alpha(z3, GramForm::identity(3)).value, 0.0);
    EXPECT_EQ(brute_alpha(z3, Matrix::Identity(3, 3)), 0.0);

    Matrix g = Matrix::Identity(4, 4);
    g(0, 1) = g(1, 0) = 0.3;
    const auto d = check_alpha(diag, GramForm(g));
    EXPECT_GT(d.value, 0.1);
    EXPECT_NEAR(d.value, brute_alpha(diag, g), 1e-15);
    EXPECT_EQ(d.basis.size(), 3u);
}

TEST(CheckBeta, UnitAndDiagonal) {
    const auto z4 = cyclic_group_algebra(4);
    const auto b = check_beta(z4, GramForm::identity(4));
    EXPECT_NEAR(b[0], 1.0, 1e-14);
    RealVector w(3);
    w << 1.0, 5.0, 0.2;
    for (double v : check_beta(diagonal_algebra(3), GramForm::diagonal(w))) EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(CheckGamma, CommutativeAlphaImpliesGamma) {
    ProbeRng rng(2);
    for (const auto& alg : {cyclic_group_algebra(5), torus_convolution_algebra({3, 3}), diagonal_algebra(5)}) {
        for (int t = 0; t < 5; ++t) {
            const auto g = generate_alpha_gram(alg, &rng);
            ASSERT_LE(check_alpha(alg, g).value, 1e-10);
            EXPECT_LE(check_gamma(alg, g).value, 1e-10);
        }
    }
}

TEST(CheckGamma, SkewedInvolutionHasDefect) {
    const auto d2 = diagonal_algebra(2);
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = s(1, 0) = 1.0;  // swaps the two idempotents
    const StarAlgebraSpec skew({d2.left_basis(0), d2.left_basis(1)}, s, d2.unit());
    RealVector w(2);
    w << 1.0, 3.0;
    EXPECT_GT(check_gamma(skew, GramForm::diagonal(w)).value, 1.0);
}

TEST(CheckDelta, Examples) {
    EXPECT_TRUE(check_delta(cyclic_group_algebra(4)));
    EXPECT_FALSE(check_delta(zero_algebra(3)));
    EXPECT_FALSE(check_delta(annihilator_algebra(3)));
}

TEST(MultOperator, UnitDiagonalAndHomomorphism) {
    const auto z5 = cyclic_group_algebra(5);
    EXPECT_LE(max_abs(mult_operator(z5, z5.unit()) - Matrix::Identity(5, 5)), 0.0);
    Vector x(3);
    x << 2.0, Complex(0, 1), -1.0;
    EXPECT_LE(max_abs(mult_operator(diagonal_algebra(3), x) - Matrix(x.asDiagonal())), 0.0);
    ProbeRng rng(3);
    for (int t = 0; t < 10; ++t) {
        const Vector a = rng.complex_gaussian_vector(5);
        const Vector b = rng.complex_gaussian_vector(5);
        EXPECT_LE(max_abs(mult_operator(z5, z5.product(a, b)) - mult_operator(z5, a) * mult_operator(z5, b)),
                  1e-12);
    }
}

TEST(MultOperator, GAdjointIsMultiplicationByStar) {
    ProbeRng rng(4);
    const auto alg = matrix_algebra(2);
    const auto g = generate_alpha_gram(alg, &rng);
    ASSERT_LE(check_alpha(alg, g).value, 1e-10);
    for (int t = 0; t < 10; ++t) {
        const Vector x = rng.complex_gaussian_vector(4);
        EXPECT_LE(max_abs(g.adjoint_of(mult_operator(alg, x)) - mult_operator(alg, alg.star(x))), 1e-10);
    }
}

TEST(ProjectionQ, FixedPointsAndIdempotence) {
    const auto z3 = cyclic_group_algebra(3);
    ProbeRng rng(5);
    const Vector x = rng.complex_gaussian_vector(3);
    const Matrix mx = mult_operator(z3, x);
    EXPECT_LE(max_abs(projection_Q(z3, mx) - mx), 1e-14);
    EXPECT_EQ(max_abs(projection_Q(z3, Matrix::Zero(3, 3))), 0.0);
    const Matrix phi = rng.complex_gaussian_matrix(3, 3);
    const Matrix q1 = projection_Q(z3, phi);
    EXPECT_LE(max_abs(projection_Q(z3, q1) - q1), 1e-14);
    EXPECT_THROW((void)projection_Q(annihilator_algebra(3), phi), std::logic_error);
}

TEST(AlphaGram, GeneratedFormsSatisfyAlpha) {
    ProbeRng rng(6);
    for (const auto& alg : {diagonal_algebra(6), cyclic_group_algebra(6), torus_convolution_algebra({2, 3}),
                            matrix_algebra(2)}) {
        const auto centre = generate_alpha_gram(alg);
        EXPECT_LE(check_alpha(alg, centre).value, 1e-10);
        EXPECT_NEAR(centre.matrix().trace().real(), static_cast<double>(alg.dim()), 1e-9);
        const auto g = generate_alpha_gram(alg, &rng);
        EXPECT_LE(check_alpha(alg, g).value, 1e-10);
        EXPECT_GE(g.min_eigenvalue(), 0.5 * centre.min_eigenvalue() * (1.0 - 1e-12));
    }
}

TEST(AlphaGram, NoPositiveSolutionReported) {
    // e_1 e_1 = e_2 with S = id forces (e_2, e_2) = (e_1, e_1 e_2) = 0.
    const auto alg = StarAlgebraSpec::from_structure(
        2, [](Eigen::Index i, Eigen::Index j, Eigen::Index k) { return (i == 0 && j == 0 && k == 1) ? 1.0 : 0.0; },
        Matrix::Identity(2, 2), std::nullopt);
    ASSERT_TRUE(alg.validate().empty());
    EXPECT_THROW((void)generate_alpha_gram(alg), NoAlphaGram);
}
