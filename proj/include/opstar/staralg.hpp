#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opstar/numeric.hpp"

/// Finite-dimensional *-algebras given by structure constants, Hilbert norms
/// on them, and the Hilbert-algebra axioms (α)–(δ).
///
/// Storage indices are 0-based; every index that appears in a message or a
/// report is 1-based.
namespace opstar::staralg {

class NotPositiveDefinite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A positive-definite Hermitian form (x, y) = y^H G x on coordinates.
class GramForm {
public:
    /// Throws std::invalid_argument if g is not Hermitian (relative 1e-12)
    /// and NotPositiveDefinite if its smallest eigenvalue is not positive.
    explicit GramForm(const Matrix& g);

    static GramForm identity(Eigen::Index dim);
    static GramForm diagonal(const RealVector& weights);

    [[nodiscard]] Eigen::Index dim() const { return g_.rows(); }
    [[nodiscard]] const Matrix& matrix() const { return g_; }

    [[nodiscard]] Complex inner(const Vector& x, const Vector& y) const;
    [[nodiscard]] double norm(const Vector& x) const;

    [[nodiscard]] double min_eigenvalue() const { return lambda_min_; }
    [[nodiscard]] double max_eigenvalue() const { return lambda_max_; }
    [[nodiscard]] double condition_number() const { return lambda_max_ / lambda_min_; }

    /// Upper-triangular R with G = R^H R.
    [[nodiscard]] const Matrix& cholesky_upper() const { return r_; }
    /// Hermitian square root S with G = S^2.
    [[nodiscard]] Matrix hermitian_sqrt() const;

    /// The adjoint of x with respect to this form: G^{-1} x^H G.
    [[nodiscard]] Matrix adjoint_of(const Matrix& x) const;
    /// sup ‖xξ‖_G / ‖ξ‖_G = σ_max(R x R^{-1}).
    [[nodiscard]] double operator_norm(const Matrix& x) const;

private:
    Matrix g_;
    Matrix r_;
    RealVector eigenvalues_;
    Matrix eigenvectors_;
    double lambda_min_ = 0.0;
    double lambda_max_ = 0.0;
};

/// One failed structural invariant, with the offending 1-based basis tuple.
struct AlgebraIssue {
    std::string invariant;
    std::vector<Eigen::Index> basis;
    double defect = 0.0;

    [[nodiscard]] std::string describe() const;
};

/// e_i e_j = Σ_k c_ijk e_k, x* = S conj(x), optional unit.
class StarAlgebraSpec {
public:
    /// `left[i]` is the matrix of left multiplication by e_i, so
    /// left[i](k, j) = c_ijk. Shapes are checked; algebraic invariants are
    /// not (see validate()).
    StarAlgebraSpec(std::vector<Matrix> left, Matrix involution, std::optional<Vector> unit);

    /// Build from a callable c(i, j, k) with 0-based indices.
    template <typename F>
    static StarAlgebraSpec from_structure(Eigen::Index dim, F&& c, Matrix involution,
                                          std::optional<Vector> unit) {
        std::vector<Matrix> left(static_cast<std::size_t>(dim), Matrix::Zero(dim, dim));
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j)
                for (Eigen::Index k = 0; k < dim; ++k)
                    left[static_cast<std::size_t>(i)](k, j) = c(i, j, k);
        return {std::move(left), std::move(involution), std::move(unit)};
    }

    [[nodiscard]] Eigen::Index dim() const { return involution_.rows(); }
    [[nodiscard]] Complex structure(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
        return left_[static_cast<std::size_t>(i)](k, j);
    }
    [[nodiscard]] const Matrix& left_basis(Eigen::Index i) const {
        return left_[static_cast<std::size_t>(i)];
    }
    [[nodiscard]] const Matrix& involution() const { return involution_; }
    [[nodiscard]] bool has_unit() const { return unit_.has_value(); }
    /// Throws std::logic_error when the algebra has no unit.
    [[nodiscard]] const Vector& unit() const;

    [[nodiscard]] Vector product(const Vector& x, const Vector& y) const;
    [[nodiscard]] Vector star(const Vector& x) const;
    [[nodiscard]] Vector basis(Eigen::Index i) const;

    /// Associativity, (x*)* = x, (xy)* = y*x* and unit laws over basis
    /// tuples. Returns every tuple whose defect exceeds tol · scale.
    [[nodiscard]] std::vector<AlgebraIssue> validate(double tol = 1e-12) const;

    [[nodiscard]] bool is_commutative(double tol = 1e-12) const;

private:
    std::vector<Matrix> left_;
    Matrix involution_;
    std::optional<Vector> unit_;
};

/// Largest defect over basis tuples with the 1-based tuple attaining it.
struct Defect {
    double value = 0.0;
    std::vector<Eigen::Index> basis;
};

/// max |(e_i e_j, e_k) − (e_j, e_i* e_k)|.
Defect check_alpha(const StarAlgebraSpec& alg, const GramForm& g);

/// ‖m_{e_i}‖ in the G-geometry for each basis element.
std::vector<double> check_beta(const StarAlgebraSpec& alg, const GramForm& g);

/// max |(e_j*, e_i*) − (e_i, e_j)|.
Defect check_gamma(const StarAlgebraSpec& alg, const GramForm& g);

/// span{e_i e_j} has full rank.
bool check_delta(const StarAlgebraSpec& alg, double rel_tol = 1e-10);

/// Matrix of m_x: y ↦ xy.
TruncatedOperator mult_operator(const StarAlgebraSpec& alg, const Vector& x);

/// Q(φ) = m_{φ(1)}. Throws std::logic_error when the algebra has no unit.
TruncatedOperator projection_Q(const StarAlgebraSpec& alg, const TruncatedOperator& phi);

/// Orthonormal (Frobenius) basis of the Hermitian forms G obeying
/// (xy, z) = (y, x*z), i.e. G m_{e_i} = m_{e_i*}^H G for every i.
std::vector<Matrix> alpha_gram_basis(const StarAlgebraSpec& alg, double rel_tol = 1e-10);

class NoAlphaGram : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A positive-definite form inside the (α)-compatible cone: the projection of
/// the identity onto the solution space, pushed into the cone by ascent on the
/// smallest eigenvalue when needed, normalised to trace d. When `rng` is
/// given, a random solution-space perturbation that keeps λ_min at least half
/// of the centre's is added. Throws NoAlphaGram when no positive point is found.
GramForm generate_alpha_gram(const StarAlgebraSpec& alg, ProbeRng* rng = nullptr);

}  // namespace opstar::staralg
