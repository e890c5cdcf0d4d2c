#include "opstar/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace opstar {

double spectral_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double smallest_singular_value(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    return s(s.size() - 1);
}

Eigen::Index numerical_rank(const Matrix& m, double rel_tol) {
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    const double cut = rel_tol * s(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > cut) ++r;
    }
    return r;
}

double ProbeRng::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t ProbeRng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ProbeRng::below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

double ProbeRng::normal() {
    // 1 - u keeps the logarithm finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex ProbeRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

Vector ProbeRng::complex_gaussian_vector(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_normal();
    return v;
}

Matrix ProbeRng::complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    // Column-major fill order is part of the replay contract.
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = complex_normal();
    }
    return m;
}

Matrix ProbeRng::unitary(Eigen::Index n) {
    const Matrix g = complex_gaussian_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0.0) q.col(j) *= r(j, j) / a;
    }
    return q;
}

namespace {

double golden_max(const std::function<double(double)>& f, double a, double b, double& arg) {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < 60 && (b - a) > 1e-15 * (1.0 + std::abs(a)); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    if (fc > fd) {
        arg = c;
        return fc;
    }
    arg = d;
    return fd;
}

// Grid scan over nodes t_i = lo + i*h (a periodic grid omits t_n = hi), then
// polish the strongest local maxima.
SupSample scan_once(const std::function<double(double)>& f, double lo, double hi, int n,
                    bool periodic) {
    const int nodes = periodic ? n : n + 1;
    const double h = (hi - lo) / n;
    std::vector<double> vals(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) vals[static_cast<std::size_t>(i)] = f(lo + i * h);

    SupSample out;
    out.grid_points = nodes;
    out.value = vals.front();
    out.argmax = lo;
    std::vector<int> peaks;
    for (int i = 0; i < nodes; ++i) {
        const double v = vals[static_cast<std::size_t>(i)];
        if (v > out.value) {
            out.value = v;
            out.argmax = lo + i * h;
        }
        const double left = (i > 0) ? vals[static_cast<std::size_t>(i - 1)]
                                    : (periodic ? vals.back() : -1.0);
        const double right = (i + 1 < nodes) ? vals[static_cast<std::size_t>(i + 1)]
                                             : (periodic ? vals.front() : -1.0);
        if (v >= left && v >= right) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
        return vals[static_cast<std::size_t>(a)] > vals[static_cast<std::size_t>(b)];
    });
    if (peaks.size() > 8) peaks.resize(8);
    for (int i : peaks) {
        double a = lo + (i - 1) * h;
        double b = lo + (i + 1) * h;
        if (!periodic) {
            a = std::max(a, lo);
            b = std::min(b, hi);
        }
        double arg = 0.0;
        const double v = golden_max(f, a, b, arg);
        if (v > out.value) {
            out.value = v;
            out.argmax = arg;
        }
    }
    return out;
}

SupSample scan_refined(const std::function<double(double)>& f, double lo, double hi, int points,
                       double tol, bool periodic) {
    if (points < 8) throw std::invalid_argument("sup sampling needs at least 8 grid points");
    SupSample coarse = scan_once(f, lo, hi, points, periodic);
    constexpr int kMaxPoints = 1 << 18;
    for (int n = points; n <= kMaxPoints; n *= 2) {
        SupSample fine = scan_once(f, lo, hi, 2 * n, periodic);
        const double scale = std::max(1.0, std::max(fine.value, coarse.value));
        const bool ok = std::abs(fine.value - coarse.value) < tol * scale;
        if (fine.value >= coarse.value) coarse = fine;
        if (ok) {
            coarse.resolved = true;
            return coarse;
        }
    }
    return coarse;
}

}  // namespace

SupSample sup_on_interval(const std::function<double(double)>& abs_f, double lo, double hi,
                          int points, double refine_tol) {
    if (!(hi > lo)) throw std::invalid_argument("sup_on_interval: empty interval");
    return scan_refined(abs_f, lo, hi, points, refine_tol, false);
}

SupSample sup_on_closed_curve(const std::function<double(double)>& abs_f_of_theta, int points,
                              double refine_tol) {
    return scan_refined(abs_f_of_theta, 0.0, 2.0 * std::numbers::pi, points, refine_tol, true);
}

RealVector least_squares(const RealMatrix& design, const RealVector& y) {
    return design.colPivHouseholderQr().solve(y);
}

double fitted_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fitted_slope needs at least two aligned points");
    }
    const auto n = static_cast<Eigen::Index>(x.size());
    RealMatrix a(n, 2);
    RealVector b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, 0) = x[static_cast<std::size_t>(i)];
        a(i, 1) = 1.0;
        b(i) = y[static_cast<std::size_t>(i)];
    }
    return least_squares(a, b)(0);
}

}  // namespace opstar
