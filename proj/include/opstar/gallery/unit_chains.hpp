#pragma once

#include <vector>

#include "opstar/dnlab.hpp"
#include "opstar/seqspace.hpp"

/// The dominating-norm chains for Λ∞(α) ⊕ ℂ1 and K∞ ⊕ ℂ1, checked link by
/// link on probes.
namespace opstar::gallery {

using seqspace::WeightSequence;

/// Per-run summary of the Λ∞(α) ⊕ ℂ1 chain at one truncation d.
///
/// With R(t) = ‖x+λ‖ ‖x+λ‖_t and t = 2s + γ, every probe is checked for
///   |λ|² ≤ 4 R(γ),
///   |x_k|² e^{2sα_k} ≤ R(t)     on A₁ = {|x_k| ≤ |λ|/2},
///   |x_k|² e^{2sα_k} ≤ 16 R(t)  on A₂ = {|λ|/2 < |x_k| ≤ 2|λ|},
///   |x_k|² e^{2sα_k} ≤ 2 R(t)   on A₃ = {|x_k| > 2|λ|}, where also |x_k+λ| > |x_k|/2,
///   ‖x+λ‖_s² ≤ 16 R(t).
/// Ratios are the left sides divided by R(·); the bounds are 4, 1, 16, 2, 16.
struct LambdaUnitReport {
    Eigen::Index dim = 0;
    int s = 0;
    int gamma = 0;
    int t = 0;
    std::size_t probes = 0;
    double max_ratio = 0.0;
    std::size_t argmax_probe = 0;
    double max_lambda_ratio = 0.0;
    double max_a1 = 0.0;
    double max_a2 = 0.0;
    double max_a3 = 0.0;
    std::size_t a1_count = 0;
    std::size_t a2_count = 0;
    std::size_t a3_count = 0;
    bool a3_precondition = true;
    std::size_t violations = 0;

    [[nodiscard]] bool passed() const { return violations == 0 && a3_precondition; }
};

/// Probes use the (λ, x_1, …, x_d) layout of dnlab::LambdaUnitSpace. γ is
/// gamma_index(α) at dimension d unless given.
LambdaUnitReport lambda_unit_dn(const WeightSequence& alpha, int s, const std::vector<Vector>& probes,
                                std::optional<int> gamma = std::nullopt);

/// `count` probes at dimension d: the structured probes of LambdaUnitSpace
/// (pure λ, cancellation blocks, A₂ and A₃ blocks), then damped Gaussians
/// x_j ∝ e^{−βα_j}, β ∈ {0.5, 1, 2}, with a random λ of random size.
std::vector<Vector> lambda_unit_probes(const WeightSequence& alpha, Eigen::Index d, std::size_t count,
                                       ProbeRng& rng);

/// A K∞ ⊕ ℂ1 element: d × d matrix x and scalar λ.
struct KinfProbe {
    Matrix x;
    Complex lambda = 0.0;
};

/// ‖x+λ‖² = Σ_j (Σ_{i≠j} |x_ij|² + |x_jj+λ|²) j^{−2}, including the exact
/// tail |λ|² Σ_{j>d} j^{−2}.
double kinf_unit_norm(const KinfProbe& p);
/// log ‖x+λ‖_n = log max(sup |x_ij| (ij)^n, |λ|).
double kinf_unit_log_grade(const KinfProbe& p, int n);

/// Chain report for grade k with n = 2k + 2.
///   off-diagonal: sup_{i≠j} |x_ij|² (ij)^{2k} ≤ ‖x+λ‖ ‖x+λ‖_{2k+1}  (ratio ≤ 1)
///   diagonal: the Λ∞(log(j+1)) ⊕ ℂ1 chain with s = 2k on (x_jj, λ)  (ratio ≤ 16)
///   combined: ‖x+λ‖_k² / (‖x+λ‖ ‖x+λ‖_{2k+2}) ≤ 16 · 2^{4k+3}
struct KinfUnitReport {
    Eigen::Index dim = 0;
    int k = 0;
    int n = 0;
    std::size_t probes = 0;
    double max_offdiag_ratio = 0.0;
    double max_diag_chain_ratio = 0.0;
    double max_combined = 0.0;
    double combined_bound = 0.0;
    std::size_t violations = 0;

    [[nodiscard]] bool passed() const { return violations == 0; }
};

KinfUnitReport kinf_unit_dn(int k, const std::vector<KinfProbe>& probes);

/// Seeded K∞ ⊕ ℂ1 probes: entries ∝ (ij)^{−β}, β ∈ {1, 2, 3}, diagonal
/// cancellation x_jj = −λ, single matrix units, and pure λ.
std::vector<KinfProbe> kinf_unit_probes(Eigen::Index d, std::size_t count, ProbeRng& rng);

}  // namespace opstar::gallery
