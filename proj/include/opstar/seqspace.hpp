#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opstar/numeric.hpp"

/// Graded norm families on truncated sequence spaces.
///
/// Indices are 1-based throughout: coordinate j of a vector lives at storage
/// position j-1, and the unit vector e_j has its 1 at position j.
namespace opstar::seqspace {

using TruncatedVector = Vector;

enum class WeightKind {
    Linear,    ///< α_j = scale · j
    Log1p,     ///< α_j = scale · log(j+1)^power
    LogJ,      ///< α_j = log j (α_1 = 0, flagged)
    Explicit,  ///< user list; cannot be extended past its length
};

std::string_view to_string(WeightKind kind);
WeightKind weight_kind_from_string(std::string_view name);

/// The exponent sequence α of a power series space Λ∞(α), truncated at dim.
class WeightSequence {
public:
    static WeightSequence linear(Eigen::Index dim, double scale = 1.0);
    static WeightSequence log1p(Eigen::Index dim, double scale = 1.0, double power = 1.0);
    static WeightSequence logj(Eigen::Index dim);
    static WeightSequence explicit_list(std::vector<double> values);

    [[nodiscard]] WeightKind kind() const { return kind_; }
    [[nodiscard]] Eigen::Index dim() const { return static_cast<Eigen::Index>(values_.size()); }
    [[nodiscard]] double scale() const { return scale_; }
    [[nodiscard]] double power() const { return power_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }

    /// α_j for 1 ≤ j ≤ dim.
    [[nodiscard]] double operator()(Eigen::Index j) const;

    /// e^{q α_j}. The LogJ generator returns j^q directly so that Λ∞(log j)
    /// reproduces the s-norms bit for bit.
    [[nodiscard]] double grade_weight(Eigen::Index j, double q) const;

    /// The same sequence at another truncation. Closed forms regenerate;
    /// explicit lists may only shrink to a prefix.
    [[nodiscard]] WeightSequence extended(Eigen::Index dim) const;

    /// Deviation flag: α_1 = 0, which the standing positivity assumption
    /// excludes but the α_j = log j example of s uses.
    [[nodiscard]] bool zero_leading_weight() const { return !values_.empty() && values_[0] == 0.0; }

private:
    WeightSequence(WeightKind kind, std::vector<double> values, double scale, double power);
    void validate() const;

    WeightKind kind_;
    std::vector<double> values_;
    double scale_ = 1.0;
    double power_ = 1.0;
};

enum class GradedKind {
    Polynomial,      ///< weight j^q
    Exponential,     ///< weight e^{q α_j}
    DualPolynomial,  ///< weight j^{-q}, q ≥ 0
};

struct GradedNormIndex {
    GradedKind kind = GradedKind::Polynomial;
    int q = 0;

    /// Throws std::invalid_argument for a dual-polynomial index with q < 0.
    void validate() const;
};

/// |ξ|_q = (Σ |ξ_j|² j^{2q})^{1/2}; negative q gives the dual norms of s'.
double norm_s(const TruncatedVector& xi, int q);

/// |ξ|_{α,q} = (Σ |ξ_j|² e^{2qα_j})^{1/2}. Throws DimensionMismatch if
/// α.dim() < ξ.size().
double norm_lambda(const TruncatedVector& xi, const WeightSequence& alpha, int q);

/// Dispatch on a graded index. `alpha` is only read for exponential grades.
double graded_norm(const TruncatedVector& xi, const GradedNormIndex& index,
                   const WeightSequence* alpha = nullptr);

/// A scalar gauge together with the 1-based index attaining it.
struct GaugeValue {
    double value = 0.0;
    Eigen::Index argmax = 0;
};

/// max_{2≤j≤d} (log j)/α_j. Requires dim ≥ 2 and α_j > 0 for j ≥ 2.
GaugeValue nuclearity_gauge(const WeightSequence& alpha);

/// Gauge evaluated on the prefixes of α at each grid dimension.
struct NuclearityScan {
    std::vector<Eigen::Index> dims;
    std::vector<GaugeValue> gauges;
    /// Relative growth of the gauge per decade of d between the two largest
    /// grid dims; the plateau verdict compares it to kPlateauGrowth.
    double growth_per_decade = 0.0;
    bool plateau = false;
};

inline constexpr double kPlateauGrowth = 0.02;

NuclearityScan nuclearity_scan(const WeightSequence& alpha, std::span<const Eigen::Index> dims);

struct GammaIndex {
    int gamma = 1;
    double max_value = 0.0;  ///< max_j (1/α_j + 2 log j / α_j)
    Eigen::Index argmax = 1;
};

/// Smallest positive integer ≥ max_{j≤d} (1/α_j + 2 log j/α_j). Throws
/// std::domain_error when some α_j = 0 (the bound is infinite).
GammaIndex gamma_index(const WeightSequence& alpha);

/// The unit vector e_j (1-based) of dimension dim.
TruncatedVector unit_vector(Eigen::Index dim, Eigen::Index j);

}  // namespace opstar::seqspace
