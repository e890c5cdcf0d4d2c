#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opstar/numeric.hpp"
#include "opstar/staralg.hpp"

/// Gram-factorisation isometries and the *-embedding x ↦ φ m_x φ* of a
/// finite Hilbert algebra into operators on an ambient coordinate space.
namespace opstar::embed {

using staralg::GramForm;
using staralg::StarAlgebraSpec;

enum class FactorMethod { Cholesky, HermitianSqrt };

std::string_view to_string(FactorMethod m);

/// w (M × d) with ⟨wξ, wη⟩ = (ξ, η)_G. Row slots[k] of w carries the k-th
/// row of the d × d root; all other rows are zero.
struct IsometryWitness {
    Matrix w;
    Matrix gram;
    FactorMethod method = FactorMethod::Cholesky;
    std::vector<Eigen::Index> slots;  ///< 0-based ambient rows, length d

    [[nodiscard]] Eigen::Index source_dim() const { return w.cols(); }
    [[nodiscard]] Eigen::Index target_dim() const { return w.rows(); }
};

/// Throws staralg::NotPositiveDefinite via GramForm, std::invalid_argument if
/// ambient < d or the slot list is not d distinct rows below ambient. Default
/// slots are the first d rows.
IsometryWitness isometry_from_gram(const GramForm& g, Eigen::Index ambient,
                                   FactorMethod method = FactorMethod::Cholesky,
                                   std::optional<std::vector<Eigen::Index>> slots = std::nullopt);

/// d distinct ambient rows drawn from the generator.
std::vector<Eigen::Index> random_slots(Eigen::Index d, Eigen::Index ambient, ProbeRng& rng);

/// φ = ιw and its adjoint from (E, (·,·)_G) to ℓ², φ* = G^{-1} w^H, so that
/// φ*φ = id_d and φφ* is the orthogonal projection onto the image.
struct Phi {
    Matrix phi;       ///< M × d
    Matrix phi_star;  ///< d × M
};

Phi build_phi(const IsometryWitness& wit);

/// Φ(x) = φ x φ*. Throws DimensionMismatch.
TruncatedOperator embed_Phi(const Phi& phi, const TruncatedOperator& x);

/// P(z) = φφ* z φφ*. Throws DimensionMismatch.
TruncatedOperator projector_P(const Phi& phi, const TruncatedOperator& z);

struct EmbeddingTolerances {
    double linear = 1e-12;     ///< single factorisation / projection steps
    double algebraic = 1e-10;  ///< identities after one composition
    double scale = 1.0;        ///< max(1, cond(G)/1e6), already folded into the two above
};

struct EmbeddingReport {
    Eigen::Index source_dim = 0;
    Eigen::Index ambient_dim = 0;
    FactorMethod method = FactorMethod::Cholesky;
    std::vector<Eigen::Index> slots;
    double gram_condition = 1.0;
    double alpha_defect = 0.0;
    double isometry_defect = 0.0;           ///< max |w^H w − G|
    double phi_isometry_defect = 0.0;       ///< max |φ*φ − I|
    double projector_idempotence_defect = 0.0;
    double projector_hermitian_defect = 0.0;
    double unit_defect = 0.0;               ///< max |Φ(m_1) − φφ*|
    double multiplicativity_defect = 0.0;   ///< over basis and sampled pairs
    double involution_defect = 0.0;         ///< max |Φ(m_{x*}) − Φ(m_x)^H|
    double projector_fixed_defect = 0.0;    ///< max |P(Φ(m_x)) − Φ(m_x)|
    double injectivity_margin = 0.0;        ///< σ_min of x ↦ Φ(m_x)
    Eigen::Index projector_rank = 0;        ///< rank(φφ*)², the rank of P on M × M arrays
    Eigen::Index representation_rank = 0;   ///< rank of the image of x ↦ Φ(m_x)
    std::size_t sampled_pairs = 0;
    EmbeddingTolerances tol;

    [[nodiscard]] bool passed() const;
};

struct PipelineOptions {
    Eigen::Index ambient = 0;  ///< 0 means ambient = d
    FactorMethod method = FactorMethod::Cholesky;
    std::optional<std::vector<Eigen::Index>> slots;
    std::size_t sampled_pairs = 0;
    ProbeRng* rng = nullptr;  ///< required when sampled_pairs > 0
};

class PipelineError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// x ↦ m_x ↦ φ m_x φ*. Throws PipelineError when the algebra has no unit or
/// check_alpha exceeds 1e-10 (scaled like the other tolerances).
EmbeddingReport full_pipeline(const StarAlgebraSpec& alg, const GramForm& g,
                              const PipelineOptions& options = {});

}  // namespace opstar::embed
