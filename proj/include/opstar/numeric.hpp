#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>

#include <Eigen/Dense>

namespace opstar {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// A finite coefficient array representing an operator on the dimension-d
/// truncation of a graded space. Column j is the image of e_{j+1}.
using TruncatedOperator = Matrix;

/// Neumaier-compensated accumulator. Weighted norms mix terms spanning many
/// orders of magnitude, so every norm in the library sums through this.
class CompensatedSum {
public:
    void add(double term) noexcept {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            carry_ += (sum_ - t) + term;
        } else {
            carry_ += (term - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Raised when two objects that must share a truncation dimension do not.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would leave the range where double precision
/// (or the integer coefficient arithmetic) is trustworthy.
class NumericOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Relative tolerance used for equality assertions between norm routes.
inline constexpr double kNormRelTol = 1e-10;

/// Largest absolute entry of a (possibly complex) array, 0 for empty arrays.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Largest singular value via a full dense SVD (values only).
double spectral_norm(const Matrix& m);
/// Smallest singular value via a full dense SVD (values only).
double smallest_singular_value(const Matrix& m);
/// Numerical rank with relative threshold `rel_tol * sigma_max`.
Eigen::Index numerical_rank(const Matrix& m, double rel_tol = 1e-10);

/// Seedable probe generator whose output is fully specified, so families can
/// be replayed from (algorithm name, seed) in any language:
///   engine   mt19937_64 (as standardised in C++11)
///   uniform  (next() >> 11) * 2^-53, in [0, 1)
///   normal   Box-Muller from two uniforms, cosine branch only
/// std:: distributions are implementation-defined, so none are used.
class ProbeRng {
public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/u53/box-muller-cos";

    explicit ProbeRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Integer uniformly drawn from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);
    double normal();
    /// Standard complex Gaussian: independent N(0, 1/2) real and imaginary parts.
    Complex complex_normal();

    Vector complex_gaussian_vector(Eigen::Index n);
    Matrix complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
    /// Haar-ish unitary from the QR factorisation of a Gaussian matrix, with
    /// the phase of R's diagonal removed.
    Matrix unitary(Eigen::Index n);

private:
    std::mt19937_64 engine_;
};

/// Supremum of |f| over [lo, hi]: uniform grid of `points` nodes (endpoints
/// included), golden-section polish around the best grid nodes, and a
/// doubling check. `resolved` is true once doubling moves the value by less
/// than `refine_tol` relative to max(1, value).
struct SupSample {
    double value = 0.0;
    double argmax = 0.0;
    int grid_points = 0;
    bool resolved = false;
};

SupSample sup_on_interval(const std::function<double(double)>& abs_f, double lo, double hi,
                          int points = 4096, double refine_tol = 1e-8);

/// Supremum of |f(γ(θ))| over a closed curve parameterised by θ ∈ [0, 2π).
SupSample sup_on_closed_curve(const std::function<double(double)>& abs_f_of_theta,
                              int points = 4096, double refine_tol = 1e-8);

/// Ordinary least squares for y ≈ X b (columns of X are regressors).
RealVector least_squares(const RealMatrix& design, const RealVector& y);

/// Slope of the least-squares line through (x_i, y_i).
double fitted_slope(std::span<const double> x, std::span<const double> y);

}  // namespace opstar
