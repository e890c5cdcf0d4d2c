#pragma once

#include <vector>

#include "opstar/numeric.hpp"

/// Polynomial surrogates of entire functions, Joukowski ellipses and the
/// Hadamard / Taylor-tail inequalities on [−1, 1].
namespace opstar::gallery {

/// f(z) = Σ_{j≤D} a_j z^j.
struct EntireFunctionSample {
    std::vector<Complex> coeffs;

    [[nodiscard]] int degree_cap() const { return static_cast<int>(coeffs.size()) - 1; }
    [[nodiscard]] Complex operator()(Complex z) const;
    /// The Taylor partial sum p_n = Σ_{j≤n} a_j z^j.
    [[nodiscard]] EntireFunctionSample partial_sum(int n) const;
    /// Seeded sample with independent standard complex Gaussian coefficients.
    static EntireFunctionSample random(int degree, ProbeRng& rng);
};

/// E_r = Ψ({|z| = r}) for Ψ(z) = (z + 1/z)/2, with semi-axes a = (r + 1/r)/2,
/// b = |r − 1/r|/2. Any r > 0 is accepted since E_{1/r} = E_r; r = 1 gives
/// the segment [−1, 1].
struct JoukowskiEllipse {
    double r = 1.0;  ///< normalised to r ≥ 1
    double a = 1.0;
    double b = 0.0;
    [[nodiscard]] Complex point(double theta) const { return {a * std::cos(theta), b * std::sin(theta)}; }
};

/// Throws std::invalid_argument for r ≤ 0 or non-finite r.
JoukowskiEllipse joukowski_ellipse(double r);

/// sup_{E_r} |f| by boundary sampling (maximum modulus), with the grid record.
SupSample sup_on_ellipse(const EntireFunctionSample& f, double r);
/// sup_{[−1,1]} |f|.
SupSample sup_on_segment(const EntireFunctionSample& f);
/// sup_{|z|≤R} |f| on the circle |z| = R.
SupSample sup_on_disc(const EntireFunctionSample& f, double radius);

struct HadamardResult {
    double r = 0.0;
    double sup_er = 0.0;
    double sup_interval = 0.0;
    double sup_er2 = 0.0;
    double lhs = 0.0;             ///< ‖f‖_{E_r}²
    double rhs = 0.0;             ///< ‖f‖_{[−1,1]} ‖f‖_{E_{r²}}
    double slack = 0.0;           ///< rhs − lhs
    double relative_slack = 0.0;  ///< slack / max(1, rhs)
    bool resolved = false;
};

/// ‖f‖_{E_r}² ≤ ‖f‖_{[−1,1]} ‖f‖_{E_{r²}}. Requires r > 1.
HadamardResult hadamard_check(const EntireFunctionSample& f, double r);

struct TaylorTailResult {
    int n = 0;
    double lhs = 0.0;  ///< sup_{[−1,1]} |f − p_n|
    double rhs = 0.0;  ///< 2^{−(n+1)} sup_{|z|≤3} |f|
    double slack = 0.0;
    double relative_slack = 0.0;
    bool resolved = false;
};

/// Requires 0 ≤ n < degree cap.
TaylorTailResult taylor_tail_bound(const EntireFunctionSample& f, int n);

}  // namespace opstar::gallery
