#pragma once

#include <vector>

#include "opstar/numeric.hpp"

/// Orthonormal Legendre polynomials, Gauss–Legendre quadrature and the
/// Nikolskii inequality ‖p‖_{[−1,1]} ≤ (n+1) ‖p‖_{L²[−1,1]}.
namespace opstar::gallery {

/// Q_k(x) = √((2k+1)/2) P_k(x). Throws std::invalid_argument for k < 0 and
/// std::domain_error for |x| > 1.
double legendre_eval(int k, double x);

/// Q_0(x), …, Q_k(x) in one pass of the three-term recurrence.
std::vector<double> legendre_all(int k, double x);

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss–Legendre rule on [−1, 1] (exact to degree 2n − 1).
GaussRule gauss_legendre(int n);

/// ∫_{lo}^{hi} f by the n-point rule mapped to [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi, const GaussRule& rule);

/// max_{j,k ≤ n} |∫ Q_j Q_k − δ_jk| with an (n+2)-point rule.
double legendre_orthonormality_defect(int n);

struct NikolskiiResult {
    int degree = 0;
    double sup = 0.0;
    double sup_argmax = 0.0;
    double l2 = 0.0;
    double bound = 0.0;  ///< (n+1) ‖p‖_{L²}
    double slack = 0.0;  ///< bound − sup
    bool resolved = false;
    [[nodiscard]] bool holds(double tol = 1e-12) const { return sup <= bound + tol * std::max(1.0, bound); }
    [[nodiscard]] double extremality() const { return bound > 0.0 ? sup / bound : 0.0; }
};

/// Monomial coefficients c_0, …, c_n (degree n = size − 1). The sup uses a
/// 4096-point grid with refinement, the L² norm a (2n+2)-point Gauss rule.
NikolskiiResult nikolskii_check(const std::vector<double>& monomial);

/// The same check for p = Σ c_k Q_k; here ‖p‖_{L²} = |c|_{ℓ²} is also
/// cross-checked against quadrature inside the result.
NikolskiiResult nikolskii_check_legendre(const std::vector<double>& legendre_coeffs);

/// Coefficients of Σ_{k≤n} Q_k(1) Q_k, the reproducing kernel at x = 1. It
/// attains sup/L² = (n+1)/√2, within a factor √2 of the Nikolskii bound.
std::vector<double> christoffel_darboux_witness(int n);

}  // namespace opstar::gallery
