#pragma once

#include <optional>
#include <vector>

#include "opstar/dnlab.hpp"

/// The family f_n(z) = (z² − 1)^n showing that sup_{[−1,1]} |f| is not a
/// dominating norm on A∞(𝔻), with ‖f‖_p = max_{j≤p} sup_{|z|≤1} |f^{(j)}|.
namespace opstar::gallery {

inline constexpr int kAinfMaxN = 60;
/// Rounding allowance when comparing ‖f_n‖_p with n^p 2^p 2^n (equality at p = 0).
inline constexpr double kAinfBoundRelTol = 1e-12;

/// sup_{|z|=1} |f_n^{(k)}| from the Leibniz form
///   f_n^{(k)} = Σ_j C(k,j) (n)_j (n)_{k−j} (z−1)^{n−j} (z+1)^{n−k+j}
/// with exact 64-bit integer coefficients. Throws NumericOverflow when a
/// coefficient does not fit.
SupSample ainf_derivative_sup(int n, int k);

struct AinfRow {
    int n = 0;
    double sup_interval = 0.0;  ///< ‖f_n‖_{[−1,1]}
    double sup_disc = 0.0;      ///< ‖f_n‖_0
    std::vector<double> norm_p; ///< ‖f_n‖_p for p = 0..p_max
    std::vector<double> bound;  ///< n^p 2^p 2^n for p = 0..p_max
    double ratio = 0.0;         ///< ‖f_n‖_0² / (‖f_n‖_{[−1,1]} ‖f_n‖_p) at the table's p
    double lower_bound_ratio = 0.0;  ///< 4^n / (n^p 2^p 2^n) = 2^n / (2n)^p
    bool resolved = true;
};

struct AinfTable {
    int n_max = 0;
    int p = 0;
    int p_max = 0;
    double threshold = 0.0;
    std::vector<AinfRow> rows;
    double exponent = 0.0;  ///< dnlab::base2_growth_exponent of the ratios
    std::optional<int> first_above;
    std::optional<int> lower_bound_first_above;
    bool bound_respected = true;
    bool monotone_from_5 = true;
};

/// Rows n = 1..n_max. Throws NumericOverflow for n_max > 60 and
/// std::invalid_argument for n_max < 1 or p outside 0..p_max.
AinfTable ainf_counterexample(int n_max, int p, int p_max = 5, double threshold = 1e3);

/// Polynomials by monomial coefficients, with ‖f‖ = sup_{[−1,1]} |f| and
/// ‖f‖_q = max_{j≤q} sup_{|z|=1} |f^{(j)}|. Grid parameter n selects the
/// single probe f_n, so certify_dn over n runs the family.
class AinfSpace final : public dnlab::GradedSpace {
public:
    [[nodiscard]] std::string name() const override { return "ainf"; }
    [[nodiscard]] Eigen::Index element_size(Eigen::Index n) const override { return 2 * n + 1; }
    [[nodiscard]] double log_base_norm(const Vector& x) const override;
    [[nodiscard]] double log_graded_norm(const Vector& x, int q) const override;
    [[nodiscard]] std::vector<Vector> special_probes(Eigen::Index n, ProbeRng& rng) const override;
};

/// Monomial coefficients of (z² − 1)^n.
Vector ainf_family_member(Eigen::Index n);

}  // namespace opstar::gallery
