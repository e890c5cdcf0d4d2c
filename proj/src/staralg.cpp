#include "opstar/staralg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace opstar::staralg {

using Eigen::Index;

GramForm::GramForm(const Matrix& g) {
    if (g.rows() != g.cols() || g.rows() == 0) {
        throw DimensionMismatch("Gram form must be a non-empty square array");
    }
    const double scale = std::max(1.0, max_abs(g));
    const double skew = max_abs(Matrix(g - g.adjoint()));
    if (skew > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "Gram form is not Hermitian (max |G - G^H| = " << skew << ")";
        throw std::invalid_argument(msg.str());
    }
    g_ = (g + g.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(g_);
    eigenvalues_ = eig.eigenvalues();
    eigenvectors_ = eig.eigenvectors();
    lambda_min_ = eigenvalues_(0);
    lambda_max_ = eigenvalues_(eigenvalues_.size() - 1);
    Eigen::LLT<Matrix> llt(g_);
    if (!(lambda_min_ > 0.0) || llt.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "Gram form is not positive definite (smallest eigenvalue " << lambda_min_ << ")";
        throw NotPositiveDefinite(msg.str());
    }
    r_ = llt.matrixU();
}

GramForm GramForm::identity(Index dim) { return GramForm(Matrix::Identity(dim, dim)); }

GramForm GramForm::diagonal(const RealVector& weights) {
    return GramForm(Matrix(weights.cast<Complex>().asDiagonal()));
}

Complex GramForm::inner(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("Gram form dim mismatch");
    return y.dot(g_ * x);
}

double GramForm::norm(const Vector& x) const {
    if (x.size() != dim()) throw DimensionMismatch("Gram form dim mismatch");
    return (r_ * x).norm();
}

Matrix GramForm::hermitian_sqrt() const {
    const RealVector root = eigenvalues_.array().sqrt();
    return eigenvectors_ * root.cast<Complex>().asDiagonal() * eigenvectors_.adjoint();
}

Matrix GramForm::adjoint_of(const Matrix& x) const {
    if (x.rows() != dim() || x.cols() != dim()) throw DimensionMismatch("Gram form dim mismatch");
    return Eigen::LLT<Matrix>(g_).solve(Matrix(x.adjoint() * g_));
}

double GramForm::operator_norm(const Matrix& x) const {
    if (x.rows() != dim() || x.cols() != dim()) throw DimensionMismatch("Gram form dim mismatch");
    const auto tri = r_.triangularView<Eigen::Upper>();
    // R x R^{-1} = (R^{-H} (R x)^H)^H
    const Matrix rx = r_ * x;
    const Matrix t = tri.adjoint().solve(Matrix(rx.adjoint()));
    return spectral_norm(t.adjoint());
}

std::string AlgebraIssue::describe() const {
    std::ostringstream out;
    out << invariant << " fails at basis (";
    for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? ", " : "") << "e" << basis[i];
    out << "), defect " << defect;
    return out.str();
}

StarAlgebraSpec::StarAlgebraSpec(std::vector<Matrix> left, Matrix involution,
                                 std::optional<Vector> unit)
    : left_(std::move(left)), involution_(std::move(involution)), unit_(std::move(unit)) {
    const auto d = static_cast<Index>(left_.size());
    if (d == 0) throw std::invalid_argument("algebra dimension must be >= 1");
    for (const auto& l : left_) {
        if (l.rows() != d || l.cols() != d) {
            throw DimensionMismatch("structure tensor must be dim x dim x dim");
        }
    }
    if (involution_.rows() != d || involution_.cols() != d) {
        throw DimensionMismatch("involution must be dim x dim");
    }
    if (unit_ && unit_->size() != d) throw DimensionMismatch("unit must have dim entries");
}

const Vector& StarAlgebraSpec::unit() const {
    if (!unit_) throw std::logic_error("algebra has no unit");
    return *unit_;
}

Vector StarAlgebraSpec::product(const Vector& x, const Vector& y) const {
    return mult_operator(*this, x) * y;
}

Vector StarAlgebraSpec::star(const Vector& x) const {
    if (x.size() != dim()) throw DimensionMismatch("element dim mismatch");
    return involution_ * x.conjugate();
}

Vector StarAlgebraSpec::basis(Index i) const {
    Vector e = Vector::Zero(dim());
    e(i) = 1.0;
    return e;
}

std::vector<AlgebraIssue> StarAlgebraSpec::validate(double tol) const {
    const Index d = dim();
    std::vector<AlgebraIssue> issues;
    double cmax = 0.0;
    for (const auto& l : left_) cmax = std::max(cmax, max_abs(l));
    const double smax = std::max(1.0, max_abs(involution_));
    const double assoc_tol = tol * std::max(1.0, cmax * cmax) * static_cast<double>(d);

    // (e_i e_j) e_k = Σ_l c_ijl L_l e_k  versus  e_i (e_j e_k) = L_i L_j e_k
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            Matrix lhs = Matrix::Zero(d, d);
            for (Index l = 0; l < d; ++l) lhs += structure(i, j, l) * left_basis(l);
            const Matrix rhs = left_basis(i) * left_basis(j);
            for (Index k = 0; k < d; ++k) {
                const double defect = (lhs.col(k) - rhs.col(k)).cwiseAbs().maxCoeff();
                if (defect > assoc_tol) issues.push_back({"associativity", {i + 1, j + 1, k + 1}, defect});
            }
        }
    }

    const Matrix ss = involution_ * involution_.conjugate();
    for (Index i = 0; i < d; ++i) {
        const double defect = (ss.col(i) - basis(i)).cwiseAbs().maxCoeff();
        if (defect > tol * smax * smax) issues.push_back({"involutivity", {i + 1}, defect});
    }

    const double anti_tol = tol * std::max(1.0, cmax) * smax * smax * static_cast<double>(d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const Vector lhs = star(left_basis(i).col(j));
            const Vector rhs = product(involution_.col(j), involution_.col(i));
            const double defect = (lhs - rhs).cwiseAbs().maxCoeff();
            if (defect > anti_tol) issues.push_back({"anti-multiplicativity", {i + 1, j + 1}, defect});
        }
    }

    if (unit_) {
        const Matrix lu = mult_operator(*this, *unit_);
        const double umax = std::max(1.0, unit_->cwiseAbs().maxCoeff());
        const double unit_tol = tol * std::max(1.0, cmax) * umax * static_cast<double>(d);
        for (Index i = 0; i < d; ++i) {
            const Vector e = basis(i);
            const double left = (lu.col(i) - e).cwiseAbs().maxCoeff();
            const double right = (left_basis(i) * *unit_ - e).cwiseAbs().maxCoeff();
            const double defect = std::max(left, right);
            if (defect > unit_tol) issues.push_back({"unit", {i + 1}, defect});
        }
    }
    return issues;
}

bool StarAlgebraSpec::is_commutative(double tol) const {
    for (Index i = 0; i < dim(); ++i) {
        for (Index j = i + 1; j < dim(); ++j) {
            if ((left_basis(i).col(j) - left_basis(j).col(i)).cwiseAbs().maxCoeff() > tol) return false;
        }
    }
    return true;
}

namespace {

void require_same_dim(const StarAlgebraSpec& alg, const GramForm& g) {
    if (alg.dim() != g.dim()) throw DimensionMismatch("algebra and Gram form differ in dim");
}

}  // namespace

Defect check_alpha(const StarAlgebraSpec& alg, const GramForm& g) {
    require_same_dim(alg, g);
    const Index d = alg.dim();
    const Matrix& gm = g.matrix();
    Defect out;
    out.basis = {1, 1, 1};
    for (Index i = 0; i < d; ++i) {
        // (e_i e_j, e_k) = (G L_i)(k, j); (e_j, e_i* e_k) = (M_i^H G)(k, j)
        const Matrix lhs = gm * alg.left_basis(i);
        const Matrix mi = mult_operator(alg, alg.involution().col(i));
        const Matrix rhs = mi.adjoint() * gm;
        for (Index j = 0; j < d; ++j) {
            for (Index k = 0; k < d; ++k) {
                const double v = std::abs(lhs(k, j) - rhs(k, j));
                if (v > out.value) out = {v, {i + 1, j + 1, k + 1}};
            }
        }
    }
    return out;
}

std::vector<double> check_beta(const StarAlgebraSpec& alg, const GramForm& g) {
    require_same_dim(alg, g);
    std::vector<double> out;
    for (Index i = 0; i < alg.dim(); ++i) out.push_back(g.operator_norm(alg.left_basis(i)));
    return out;
}

Defect check_gamma(const StarAlgebraSpec& alg, const GramForm& g) {
    require_same_dim(alg, g);
    const Index d = alg.dim();
    const Matrix& s = alg.involution();
    // (e_j*, e_i*) = s_i^H G s_j ; (e_i, e_j) = G(j, i)
    const Matrix lhs = s.adjoint() * g.matrix() * s;
    Defect out;
    out.basis = {1, 1};
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const double v = std::abs(lhs(i, j) - g.matrix()(j, i));
            if (v > out.value) out = {v, {i + 1, j + 1}};
        }
    }
    return out;
}

bool check_delta(const StarAlgebraSpec& alg, double rel_tol) {
    const Index d = alg.dim();
    Matrix products(d, d * d);
    for (Index i = 0; i < d; ++i) products.middleCols(i * d, d) = alg.left_basis(i);
    return numerical_rank(products, rel_tol) == d;
}

TruncatedOperator mult_operator(const StarAlgebraSpec& alg, const Vector& x) {
    if (x.size() != alg.dim()) throw DimensionMismatch("element dim mismatch");
    Matrix m = Matrix::Zero(alg.dim(), alg.dim());
    for (Index i = 0; i < alg.dim(); ++i) {
        if (x(i) != Complex(0.0)) m += x(i) * alg.left_basis(i);
    }
    return m;
}

TruncatedOperator projection_Q(const StarAlgebraSpec& alg, const TruncatedOperator& phi) {
    if (phi.rows() != alg.dim() || phi.cols() != alg.dim()) {
        throw DimensionMismatch("operator dim does not match algebra dim");
    }
    return mult_operator(alg, phi * alg.unit());
}

namespace {

// Frobenius-orthonormal basis of d×d Hermitian matrices.
std::vector<Matrix> hermitian_basis(Index d) {
    std::vector<Matrix> out;
    const double h = 1.0 / std::sqrt(2.0);
    for (Index k = 0; k < d; ++k) {
        Matrix e = Matrix::Zero(d, d);
        e(k, k) = 1.0;
        out.push_back(e);
    }
    for (Index k = 0; k < d; ++k) {
        for (Index l = k + 1; l < d; ++l) {
            Matrix re = Matrix::Zero(d, d);
            re(k, l) = h;
            re(l, k) = h;
            out.push_back(re);
            Matrix im = Matrix::Zero(d, d);
            im(k, l) = Complex(0.0, h);
            im(l, k) = Complex(0.0, -h);
            out.push_back(im);
        }
    }
    return out;
}

Matrix combine(const std::vector<Matrix>& basis, const RealVector& t) {
    Matrix g = Matrix::Zero(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i) g += t(static_cast<Index>(i)) * basis[i];
    return g;
}

}  // namespace

std::vector<Matrix> alpha_gram_basis(const StarAlgebraSpec& alg, double rel_tol) {
    const Index d = alg.dim();
    const auto herm = hermitian_basis(d);
    const auto nvar = static_cast<Index>(herm.size());
    std::vector<Matrix> mstar;
    for (Index i = 0; i < d; ++i) mstar.push_back(mult_operator(alg, alg.involution().col(i)));

    // Constraint G L_i − M_i^H G = 0, split into real and imaginary rows.
    RealMatrix a(2 * d * d * d, nvar);
    for (Index v = 0; v < nvar; ++v) {
        const Matrix& h = herm[static_cast<std::size_t>(v)];
        Index row = 0;
        for (Index i = 0; i < d; ++i) {
            const Matrix c = h * alg.left_basis(i) - mstar[static_cast<std::size_t>(i)].adjoint() * h;
            for (Index q = 0; q < d * d; ++q) {
                a(row++, v) = c(q).real();
                a(row++, v) = c(q).imag();
            }
        }
    }
    Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
    const RealVector sv = svd.singularValues();
    const double cutoff = rel_tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i) rank += sv(i) > cutoff ? 1 : 0;

    std::vector<Matrix> out;
    for (Index c = rank; c < nvar; ++c) out.push_back(combine(herm, svd.matrixV().col(c)));
    return out;
}

namespace {

double min_eig(const Matrix& g) {
    return Eigen::SelfAdjointEigenSolver<Matrix>(g, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

}  // namespace

GramForm generate_alpha_gram(const StarAlgebraSpec& alg, ProbeRng* rng) {
    const Index d = alg.dim();
    const auto basis = alpha_gram_basis(alg);
    if (basis.empty()) throw NoAlphaGram("no non-zero Hermitian form satisfies (α)");
    const auto n = static_cast<Index>(basis.size());

    // Coordinates of the projection of I: ⟨B_i, I⟩_F = Re tr B_i.
    RealVector t(n);
    for (Index i = 0; i < n; ++i) t(i) = basis[static_cast<std::size_t>(i)].trace().real();
    if (t.norm() == 0.0) t(0) = 1.0;
    t.normalize();

    Matrix g = combine(basis, t);
    double lmin = min_eig(g);
    for (int iter = 0; iter < 2000 && !(lmin > 1e-8 * std::max(1.0, max_abs(g))); ++iter) {
        Eigen::SelfAdjointEigenSolver<Matrix> eig(g);
        const Vector v = eig.eigenvectors().col(0);
        RealVector grad(n);
        for (Index i = 0; i < n; ++i) grad(i) = v.dot(basis[static_cast<std::size_t>(i)] * v).real();
        if (grad.norm() == 0.0) break;
        t += grad / (grad.norm() * std::sqrt(1.0 + iter));
        t.normalize();
        g = combine(basis, t);
        lmin = min_eig(g);
    }
    if (!(lmin > 0.0)) throw NoAlphaGram("(α)-compatible forms contain no positive-definite point");

    const double norm = static_cast<double>(d) / g.trace().real();
    g *= norm;
    lmin *= norm;

    if (rng != nullptr) {
        RealVector dir(n);
        for (Index i = 0; i < n; ++i) dir(i) = rng->normal();
        const Matrix p = combine(basis, dir);
        const double pn = spectral_norm(p);
        if (pn > 0.0) g += (0.5 * lmin * rng->uniform() / pn) * p;
    }
    return GramForm(Matrix((g + g.adjoint()) / 2.0));
}

}  // namespace opstar::staralg
