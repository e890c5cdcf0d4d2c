#pragma once

#include <string>
#include <vector>

#include "opstar/numeric.hpp"
#include "opstar/seqspace.hpp"

/// Truncated operators on graded spaces and the norms that topologise them.
namespace opstar::opalg {

using seqspace::TruncatedVector;

/// A bounded probe set B at fixed dimension.
class SampleFamily {
public:
    SampleFamily(std::string label, std::vector<TruncatedVector> probes);

    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] const std::vector<TruncatedVector>& probes() const { return probes_; }
    [[nodiscard]] Eigen::Index dim() const { return probes_.front().size(); }

    /// sup_{ξ∈B} |ξ|_m, i.e. the smallest λ_m with B ⊂ {|ξ|_m ≤ λ_m}.
    [[nodiscard]] double radius(int m) const;

private:
    std::string label_;
    std::vector<TruncatedVector> probes_;
};

/// Conjugate transpose.
TruncatedOperator adjoint(const TruncatedOperator& x);

/// D_q = diag(j^q), j = 1..dim.
RealVector polynomial_weights(Eigen::Index dim, double q);

/// sup_{|ξ|_n ≤ 1} |xξ|_N = σ_max(D_N X D_n^{-1}).
double graded_operator_norm(const TruncatedOperator& x, int big_n, int n);

/// r_{N,n}(x) = max(σ_max(D_N X D_n^{-1}), σ_max(D_N X^H D_n^{-1})).
double r_norm(const TruncatedOperator& x, int big_n, int n);

/// p_{n,B}(x) = max_{ξ∈B} max(|xξ|_n, |x*ξ|_n). Throws DimensionMismatch.
double p_seminorm(const TruncatedOperator& x, int n, const SampleFamily& family);

/// [x,y]_m = Σ_j ⟨x e_j, y e_j⟩ j^{-2m-2}, with ⟨a,b⟩ = Σ a_i conj(b_i).
Complex bracket_m(const TruncatedOperator& x, const TruncatedOperator& y, int m);

/// [x]_m = bracket_m(x, x)^{1/2}.
double bracket_norm(const TruncatedOperator& x, int m);

/// A gauge value with the (row, column) entry attaining it, 1-based.
struct EntryGauge {
    double value = 0.0;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
};

/// max_{i,j} |x_ij| (ij)^n.
EntryGauge kinf_gauge(const TruncatedOperator& x, int n);

/// Σ_{i,j} |x_ij| max(i^N / j^n, j^N / i^n).
double lambdaA_gauge(const TruncatedOperator& x, int big_n, int n);

/// True when ‖x x* − x* x‖_max ≤ tol · d · max(1, ‖x‖_max²).
bool is_normal(const TruncatedOperator& x, double tol = 1e-12);

}  // namespace opstar::opalg
