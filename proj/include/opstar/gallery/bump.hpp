#pragma once

#include <vector>

#include "opstar/numeric.hpp"

/// Sobolev-type interpolation ‖f+λ‖_m² ≤ C_m ‖f+λ‖_{L²} ‖f+λ‖_{2m} on [−1, 1]
/// for the bump b(x) = exp(−1/(1−x²)) and its dilates b(x/ε).
namespace opstar::gallery {

/// Highest derivative order: the numerator coefficients of P_16 exceed 64 bits.
inline constexpr int kMaxBumpDerivative = 15;

/// b^{(k)}(x) = P_k(x) (1−x²)^{−2k} b(x); returns the coefficients of P_k.
std::vector<double> bump_derivative_numerator(int k);

/// b_ε^{(k)}(x) = ε^{−k} b^{(k)}(x/ε), zero for |x| ≥ ε.
double bump_derivative(int k, double x, double eps = 1.0);

/// ∫_{lo}^{hi} f, adaptive 20-point Gauss panels to max(abs_tol, rel_tol · ∫|f|).
double adaptive_integrate(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol = 1e-10, double rel_tol = 1e-13);

struct BumpDnReport {
    int m = 0;
    double eps = 1.0;
    Complex lambda = 0.0;
    double f_scale = 1.0;
    std::vector<double> derivative_l2;  ///< ‖(f+λ)^{(k)}‖_{L²[−1,1]}, k = 0..2m
    double norm_m_sq = 0.0;             ///< Σ_{k≤m} ‖·^{(k)}‖²
    double l2 = 0.0;
    double norm_2m = 0.0;
    double constant = 0.0;              ///< norm_m_sq / (l2 · norm_2m)
    double proven_bound = 0.0;          ///< m + 1 (integration by parts + Cauchy–Schwarz)
    [[nodiscard]] bool holds() const { return constant <= proven_bound * (1.0 + 1e-9); }
};

/// Check for g = f_scale · b(x/ε) + λ on [−1, 1], 0 < ε ≤ 1. Throws
/// std::invalid_argument when 2m exceeds kMaxBumpDerivative.
BumpDnReport bump_dn_check(int m, double eps = 1.0, Complex lambda = 0.0, double f_scale = 1.0);

}  // namespace opstar::gallery
