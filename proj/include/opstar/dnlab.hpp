#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opstar/numeric.hpp"
#include "opstar/seqspace.hpp"
#include "opstar/staralg.hpp"

/// Dominating-norm probing: ratios ‖x‖_q² / (‖x‖ ‖x‖_r), certification over a
/// dimension grid, falsification along a parametric family, and the diagonal
/// lift a_n = u^{-1} d_n u.
namespace opstar::dnlab {

using Eigen::Index;
using seqspace::WeightSequence;

/// A candidate dominating norm ‖·‖ and a graded family ‖·‖_q on truncated
/// elements. Norms are returned as natural logarithms (−∞ for zero) so that
/// grades like e^{tα_j} with α_j = j stay representable.
class GradedSpace {
public:
    virtual ~GradedSpace() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    /// Storage length of an element at grid parameter d.
    [[nodiscard]] virtual Index element_size(Index d) const { return d; }
    [[nodiscard]] virtual double log_base_norm(const Vector& x) const = 0;
    [[nodiscard]] virtual double log_graded_norm(const Vector& x, int q) const = 0;
    /// Decay exponent used for damped Gaussian probes at coordinate j (1-based).
    [[nodiscard]] virtual double decay_exponent(Index j) const;
    /// Extra structured probes for grid parameter d (none by default).
    [[nodiscard]] virtual std::vector<Vector> special_probes(Index d, ProbeRng& rng) const;
};

/// s with ‖·‖ = |·|_0 and ‖·‖_q = |·|_q.
class SSpace final : public GradedSpace {
public:
    [[nodiscard]] std::string name() const override { return "s"; }
    [[nodiscard]] double log_base_norm(const Vector& x) const override;
    [[nodiscard]] double log_graded_norm(const Vector& x, int q) const override;
};

/// Λ∞(α) with ‖·‖ = |·|_{α,0} and ‖·‖_q = |·|_{α,q}, evaluated in log space.
class LambdaSpace final : public GradedSpace {
public:
    explicit LambdaSpace(WeightSequence alpha) : alpha_(std::move(alpha)) {}
    [[nodiscard]] std::string name() const override { return "lambda"; }
    [[nodiscard]] double log_base_norm(const Vector& x) const override;
    [[nodiscard]] double log_graded_norm(const Vector& x, int q) const override;
    [[nodiscard]] double decay_exponent(Index j) const override { return alpha_(j); }

private:
    WeightSequence alpha_;
};

/// Λ∞(α) ⊕ ℂ1. Elements are stored as (λ, x_1, …, x_d). The base norm is
/// ‖x+λ‖² = Σ_j |x_j+λ|² j^{−2} over all j ≥ 1, with the exact tail
/// |λ|² Σ_{j>d} j^{−2}; the grades are ‖x+λ‖_t = max(sup_j |x_j| e^{tα_j}, |λ|).
class LambdaUnitSpace final : public GradedSpace {
public:
    explicit LambdaUnitSpace(WeightSequence alpha) : alpha_(std::move(alpha)) {}
    [[nodiscard]] std::string name() const override { return "lambda-unit"; }
    [[nodiscard]] Index element_size(Index d) const override { return d + 1; }
    [[nodiscard]] double log_base_norm(const Vector& x) const override;
    [[nodiscard]] double log_graded_norm(const Vector& x, int q) const override;
    [[nodiscard]] double decay_exponent(Index j) const override;
    [[nodiscard]] std::vector<Vector> special_probes(Index d, ProbeRng& rng) const override;
    [[nodiscard]] const WeightSequence& alpha() const { return alpha_; }

private:
    WeightSequence alpha_;
};

/// Σ_{j>d} j^{−2}.
double inverse_square_tail(Index d);

/// Probe families: (a) unit vectors, (b) seeded complex Gaussians damped by
/// e^{−β a_j} with β drawn from `betas` and a_j the space's decay exponent,
/// (c) user vectors whose length matches the grid point, plus the space's
/// special probes.
struct ProbeSpec {
    bool unit_vectors = true;
    std::size_t damped_gaussians = 64;
    std::vector<double> betas{0.5, 1.0, 2.0};
    std::vector<Vector> user;
    bool special = true;
};

std::vector<Vector> make_probes(const GradedSpace& space, Index d, const ProbeSpec& spec,
                                ProbeRng& rng);

/// Seed of the generator used at grid parameter d.
std::uint64_t grid_seed(std::uint64_t seed, Index d);

/// ‖x‖_q² / (‖x‖ ‖x‖_r); empty when the denominator vanishes or a norm is
/// not finite.
std::optional<double> dn_ratio(const GradedSpace& space, const Vector& x, int q, int r);

/// Running maximum of ratios with exclusion counts. merge() is associative
/// and commutative: ties keep the smaller probe index.
struct RatioAccumulator {
    double max_ratio = 0.0;
    std::size_t argmax = 0;
    std::size_t count = 0;
    std::size_t excluded = 0;
    bool any = false;

    void add(std::size_t probe_index, std::optional<double> ratio);
    void merge(const RatioAccumulator& other);
};

enum class Verdict { CertifiedBounded, FalsifiedGrowing, Inconclusive };
std::string_view to_string(Verdict v);

inline constexpr double kBoundedExponent = 0.05;
inline constexpr double kGrowingExponent = 0.5;
inline constexpr double kMaxExcludedFraction = 0.10;

struct DnProbe {
    const GradedSpace* space = nullptr;
    int q = 1;
    std::vector<int> r_list;
    std::vector<Index> grid;
    ProbeSpec family;
    std::uint64_t seed = 0;
};

struct DnPoint {
    Index dim = 0;
    int r = 0;
    double constant = 0.0;
    std::size_t probes = 0;
    std::size_t excluded = 0;
    std::size_t argmax_probe = 0;
};

struct DnCurve {
    int r = 0;
    std::vector<DnPoint> points;
    double exponent = 0.0;  ///< least-squares slope of log C against log d
    bool excessive_exclusions = false;
};

struct DnCertificate {
    std::string space;
    int q = 0;
    std::vector<Index> grid;
    std::vector<DnCurve> curves;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<int> witness_r;  ///< smallest bounded r
    std::string reason;
    std::uint64_t seed = 0;

    [[nodiscard]] const DnCurve& curve(int r) const;
};

class DegenerateFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws std::invalid_argument for an empty or non-increasing grid, an empty
/// r-list or negative grades, and DegenerateFamily when every probe at some
/// grid point is excluded.
DnCertificate certify_dn(const DnProbe& probe);

/// Ratios along an integer-indexed family x(n).
struct FalsifyCurve {
    int r = 0;
    std::vector<Index> params;
    std::vector<double> ratios;
    /// Coefficient a of n in log2 ratio ≈ a n + b log2 n + c (plain slope
    /// when fewer than four finite points).
    double exponent = 0.0;
    /// Least-squares slope of log ratio against log n.
    double loglog_slope = 0.0;
    std::optional<Index> first_above;
};

struct FalsifyReport {
    std::string space;
    int q = 0;
    double threshold = 0.0;
    std::vector<FalsifyCurve> curves;
};

FalsifyReport falsify_dn(const GradedSpace& space, const std::function<Vector(Index)>& family,
                         const std::vector<Index>& params, int q, const std::vector<int>& r_list,
                         double threshold);

/// Base-2 growth exponent of a positive sequence (see FalsifyCurve::exponent).
double base2_growth_exponent(std::span<const double> params, std::span<const double> values);

/// a_n = u^{-1} d_n u with u the Cholesky isometry of G (ambient = d) and
/// d_n = diag(e^{nα_j}). Throws staralg::NotPositiveDefinite via GramForm and
/// DimensionMismatch when α is shorter than G.
TruncatedOperator diagonal_selfadjoint_lift(const staralg::GramForm& g, const WeightSequence& alpha,
                                            int n);

/// The grade-n norm pulled back through u: |uξ|_{α,n}.
double pulled_back_norm(const staralg::GramForm& g, const WeightSequence& alpha, int n,
                        const Vector& xi);

}  // namespace opstar::dnlab
