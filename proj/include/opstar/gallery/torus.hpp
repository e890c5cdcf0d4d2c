#pragma once

#include <vector>

#include "opstar/dnlab.hpp"
#include "opstar/numeric.hpp"

/// The flat torus ℝⁿ/2πℤⁿ: Laplacian spectrum |m|² over the lattice, Sobolev
/// coefficient weights and the Weyl band.
namespace opstar::gallery {

struct LatticeShell {
    long norm2 = 0;
    std::size_t multiplicity = 0;
};

struct TorusSpectrum {
    int n = 1;
    std::vector<double> eigenvalues;         ///< λ_1 = 0 ≤ λ_2 ≤ …
    std::vector<std::vector<int>> modes;     ///< lattice vector of each eigenfunction e^{i m·x}
    std::vector<LatticeShell> shells;        ///< shells fully covered by the first K modes, plus the partial last one
};

/// First K eigenvalues of the flat-torus Laplacian in dimension n ∈ {1, 2, 3}.
/// Ties are ordered lexicographically on m.
TorusSpectrum torus_spectrum(int n, Eigen::Index k);

/// Number of m ∈ ℤⁿ with |m|² = r2, by direct shell enumeration.
std::size_t lattice_shell_count(int n, long r2);

/// a_k (1 + λ_k)^r. Throws DimensionMismatch when lengths differ.
Vector fourier_sobolev_coeffs(const Vector& a, const TorusSpectrum& spectrum, int r);

struct WeylBand {
    Eigen::Index k_min = 0;
    Eigen::Index k_max = 0;
    double low = 0.0;   ///< min λ_k k^{−2/n}
    double high = 0.0;  ///< max λ_k k^{−2/n}
    [[nodiscard]] double width_ratio() const { return high / low; }
};

/// Band of λ_k k^{−2/n} over k_min ≤ k ≤ k_max (1-based k).
WeylBand weyl_band(const TorusSpectrum& spectrum, Eigen::Index k_min, Eigen::Index k_max);

/// Values of Σ_m a_m e^{i m·x} at the grid points x = 2π(k_1/N_1, …) of the
/// discrete torus, for coefficients in torus_convolution_modes order.
Vector trig_poly_samples(const std::vector<int>& sizes, const Vector& coeffs);

/// Coefficient space of the torus with ‖a‖ = |a|_{ℓ²} (the L² norm through the
/// orthonormal eigenbasis) and ‖a‖_q = |(a_k (1+λ_k)^q)|_{ℓ²}.
class TorusSobolevSpace final : public dnlab::GradedSpace {
public:
    TorusSobolevSpace(int n, Eigen::Index max_modes);
    [[nodiscard]] std::string name() const override;
    [[nodiscard]] double log_base_norm(const Vector& x) const override;
    [[nodiscard]] double log_graded_norm(const Vector& x, int q) const override;
    [[nodiscard]] double decay_exponent(Eigen::Index j) const override;

private:
    TorusSpectrum spectrum_;
};

}  // namespace opstar::gallery
