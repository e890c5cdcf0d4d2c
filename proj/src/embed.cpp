#include "opstar/embed.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace opstar::embed {

using Eigen::Index;

std::string_view to_string(FactorMethod m) {
    return m == FactorMethod::Cholesky ? "cholesky" : "hermitian-sqrt";
}

IsometryWitness isometry_from_gram(const GramForm& g, Index ambient, FactorMethod method,
                                   std::optional<std::vector<Index>> slots) {
    const Index d = g.dim();
    if (ambient < d) {
        throw std::invalid_argument("ambient dimension " + std::to_string(ambient) +
                                    " is smaller than source dimension " + std::to_string(d));
    }
    std::vector<Index> rows;
    if (slots) {
        rows = *slots;
        if (static_cast<Index>(rows.size()) != d) {
            throw std::invalid_argument("slot list must have one row per source coordinate");
        }
        std::set<Index> seen(rows.begin(), rows.end());
        if (static_cast<Index>(seen.size()) != d || *seen.begin() < 0 || *seen.rbegin() >= ambient) {
            throw std::invalid_argument("slots must be distinct rows in 0..ambient-1");
        }
    } else {
        rows.resize(static_cast<std::size_t>(d));
        std::iota(rows.begin(), rows.end(), Index{0});
    }
    const Matrix root =
        method == FactorMethod::Cholesky ? Matrix(g.cholesky_upper()) : g.hermitian_sqrt();
    IsometryWitness wit;
    wit.w = Matrix::Zero(ambient, d);
    for (Index k = 0; k < d; ++k) wit.w.row(rows[static_cast<std::size_t>(k)]) = root.row(k);
    wit.gram = g.matrix();
    wit.method = method;
    wit.slots = std::move(rows);
    return wit;
}

std::vector<Index> random_slots(Index d, Index ambient, ProbeRng& rng) {
    if (ambient < d) throw std::invalid_argument("ambient dimension smaller than source");
    std::vector<Index> pool(static_cast<std::size_t>(ambient));
    std::iota(pool.begin(), pool.end(), Index{0});
    // Partial Fisher–Yates with the portable generator.
    for (Index k = 0; k < d; ++k) {
        const auto j = k + static_cast<Index>(rng.below(static_cast<std::uint64_t>(ambient - k)));
        std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(d));
    return pool;
}

Phi build_phi(const IsometryWitness& wit) {
    Phi out;
    out.phi = wit.w;
    out.phi_star = Eigen::LLT<Matrix>(wit.gram).solve(Matrix(wit.w.adjoint()));
    return out;
}

TruncatedOperator embed_Phi(const Phi& phi, const TruncatedOperator& x) {
    if (x.rows() != phi.phi.cols() || x.cols() != phi.phi.cols()) {
        throw DimensionMismatch("operator dim does not match the witness source dim");
    }
    return phi.phi * x * phi.phi_star;
}

TruncatedOperator projector_P(const Phi& phi, const TruncatedOperator& z) {
    const Index m = phi.phi.rows();
    if (z.rows() != m || z.cols() != m) {
        throw DimensionMismatch("operator dim does not match the ambient dim");
    }
    const Matrix proj = phi.phi * phi.phi_star;
    return proj * z * proj;
}

bool EmbeddingReport::passed() const {
    return isometry_defect <= tol.linear &&
           phi_isometry_defect <= tol.linear && projector_idempotence_defect <= tol.linear &&
           projector_hermitian_defect <= tol.linear && unit_defect <= tol.algebraic &&
           multiplicativity_defect <= tol.algebraic && involution_defect <= tol.algebraic &&
           projector_fixed_defect <= tol.algebraic && injectivity_margin > 0.0 &&
           representation_rank == source_dim;
}

EmbeddingReport full_pipeline(const StarAlgebraSpec& alg, const GramForm& g,
                              const PipelineOptions& options) {
    if (!alg.has_unit()) throw PipelineError("embedding pipeline needs a unital algebra");
    const Index d = alg.dim();
    EmbeddingReport rep;
    rep.source_dim = d;
    rep.ambient_dim = options.ambient == 0 ? d : options.ambient;
    rep.method = options.method;
    rep.gram_condition = g.condition_number();
    rep.tol.scale = std::max(1.0, rep.gram_condition / 1e6);
    rep.tol.linear *= rep.tol.scale;
    rep.tol.algebraic *= rep.tol.scale;

    const auto alpha = staralg::check_alpha(alg, g);
    rep.alpha_defect = alpha.value;
    if (alpha.value > rep.tol.algebraic) {
        throw PipelineError("Gram form violates (α): defect " + std::to_string(alpha.value) +
                            " at basis (e" + std::to_string(alpha.basis[0]) + ", e" +
                            std::to_string(alpha.basis[1]) + ", e" +
                            std::to_string(alpha.basis[2]) + ")");
    }

    const auto wit = isometry_from_gram(g, rep.ambient_dim, options.method, options.slots);
    rep.slots = wit.slots;
    const Phi phi = build_phi(wit);
    const Matrix proj = phi.phi * phi.phi_star;

    rep.isometry_defect = max_abs(Matrix(wit.w.adjoint() * wit.w - g.matrix()));
    rep.phi_isometry_defect = max_abs(Matrix(phi.phi_star * phi.phi - Matrix::Identity(d, d)));
    rep.projector_idempotence_defect = max_abs(Matrix(proj * proj - proj));
    rep.projector_hermitian_defect = max_abs(Matrix(proj - proj.adjoint()));
    const Index proj_rank = numerical_rank(proj);
    rep.projector_rank = proj_rank * proj_rank;

    std::vector<Matrix> images;
    for (Index i = 0; i < d; ++i) images.push_back(embed_Phi(phi, alg.left_basis(i)));
    auto image_of = [&](const Vector& x) {
        Matrix acc = Matrix::Zero(rep.ambient_dim, rep.ambient_dim);
        for (Index i = 0; i < d; ++i) acc += x(i) * images[static_cast<std::size_t>(i)];
        return acc;
    };

    rep.unit_defect = max_abs(Matrix(image_of(alg.unit()) - proj));

    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const Matrix lhs = images[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(j)];
            const Matrix rhs = image_of(alg.left_basis(i).col(j));
            rep.multiplicativity_defect = std::max(rep.multiplicativity_defect, max_abs(Matrix(lhs - rhs)));
        }
        const Matrix star_img = image_of(alg.involution().col(i));
        rep.involution_defect = std::max(
            rep.involution_defect, max_abs(Matrix(star_img - images[static_cast<std::size_t>(i)].adjoint())));
        rep.projector_fixed_defect =
            std::max(rep.projector_fixed_defect,
                     max_abs(Matrix(projector_P(phi, images[static_cast<std::size_t>(i)]) -
                                    images[static_cast<std::size_t>(i)])));
    }

    if (options.sampled_pairs > 0) {
        if (options.rng == nullptr) throw std::invalid_argument("sampled pairs need a generator");
        for (std::size_t s = 0; s < options.sampled_pairs; ++s) {
            const Vector x = options.rng->complex_gaussian_vector(d);
            const Vector y = options.rng->complex_gaussian_vector(d);
            const Matrix lhs = image_of(x) * image_of(y);
            const Matrix rhs = image_of(alg.product(x, y));
            const double scale = std::max(1.0, x.norm() * y.norm());
            rep.multiplicativity_defect =
                std::max(rep.multiplicativity_defect, max_abs(Matrix(lhs - rhs)) / scale);
            const double inv = max_abs(Matrix(image_of(alg.star(x)) - image_of(x).adjoint()));
            rep.involution_defect = std::max(rep.involution_defect, inv / std::max(1.0, x.norm()));
        }
        rep.sampled_pairs = options.sampled_pairs;
    }

    const Index m2 = rep.ambient_dim * rep.ambient_dim;
    Matrix stacked(m2, d);
    for (Index i = 0; i < d; ++i) {
        stacked.col(i) = Eigen::Map<const Vector>(images[static_cast<std::size_t>(i)].data(), m2);
    }
    rep.injectivity_margin = smallest_singular_value(stacked);
    rep.representation_rank = numerical_rank(stacked);
    return rep;
}

}  // namespace opstar::embed
