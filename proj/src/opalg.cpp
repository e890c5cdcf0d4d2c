#include "opstar/opalg.hpp"

#include <cmath>
#include <stdexcept>

namespace opstar::opalg {

SampleFamily::SampleFamily(std::string label, std::vector<TruncatedVector> probes)
    : label_(std::move(label)), probes_(std::move(probes)) {
    if (probes_.empty()) throw std::invalid_argument("sample family '" + label_ + "' is empty");
    const auto d = probes_.front().size();
    for (const auto& p : probes_) {
        if (p.size() != d) {
            throw DimensionMismatch("sample family '" + label_ + "' mixes dimensions");
        }
    }
}

double SampleFamily::radius(int m) const {
    double r = 0.0;
    for (const auto& p : probes_) r = std::max(r, seqspace::norm_s(p, m));
    return r;
}

TruncatedOperator adjoint(const TruncatedOperator& x) { return x.adjoint(); }

RealVector polynomial_weights(Eigen::Index dim, double q) {
    RealVector w(dim);
    for (Eigen::Index j = 0; j < dim; ++j) w(j) = std::pow(static_cast<double>(j + 1), q);
    return w;
}

namespace {

void require_square(const TruncatedOperator& x) {
    if (x.rows() != x.cols()) throw DimensionMismatch("truncated operators must be square");
}

}  // namespace

double graded_operator_norm(const TruncatedOperator& x, int big_n, int n) {
    require_square(x);
    const auto d = x.rows();
    const RealVector left = polynomial_weights(d, big_n);
    const RealVector right = polynomial_weights(d, -n);
    const Matrix scaled = left.asDiagonal() * x * right.asDiagonal();
    return spectral_norm(scaled);
}

double r_norm(const TruncatedOperator& x, int big_n, int n) {
    if (big_n < 0 || n < 0) throw std::invalid_argument("r_norm grades must be non-negative");
    return std::max(graded_operator_norm(x, big_n, n), graded_operator_norm(x.adjoint(), big_n, n));
}

double p_seminorm(const TruncatedOperator& x, int n, const SampleFamily& family) {
    require_square(x);
    if (family.dim() != x.cols()) {
        throw DimensionMismatch("sample family dim " + std::to_string(family.dim()) +
                                " does not match operator dim " + std::to_string(x.cols()));
    }
    const Matrix xh = x.adjoint();
    double best = 0.0;
    for (const auto& xi : family.probes()) {
        best = std::max(best, seqspace::norm_s(x * xi, n));
        best = std::max(best, seqspace::norm_s(xh * xi, n));
    }
    return best;
}

Complex bracket_m(const TruncatedOperator& x, const TruncatedOperator& y, int m) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw DimensionMismatch("bracket_m operands differ in shape");
    }
    if (m < 0) throw std::invalid_argument("bracket_m requires m >= 0");
    CompensatedSum re;
    CompensatedSum im;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double w = std::pow(static_cast<double>(j + 1), -2.0 * m - 2.0);
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            const Complex t = x(i, j) * std::conj(y(i, j)) * w;
            re.add(t.real());
            im.add(t.imag());
        }
    }
    return {re.value(), im.value()};
}

double bracket_norm(const TruncatedOperator& x, int m) {
    return std::sqrt(std::max(0.0, bracket_m(x, x, m).real()));
}

EntryGauge kinf_gauge(const TruncatedOperator& x, int n) {
    if (n < 0) throw std::invalid_argument("kinf_gauge requires n >= 0");
    EntryGauge g;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            const double v =
                std::abs(x(i, j)) * std::pow(static_cast<double>((i + 1) * (j + 1)), n);
            if (v > g.value) g = {v, i + 1, j + 1};
        }
    }
    return g;
}

double lambdaA_gauge(const TruncatedOperator& x, int big_n, int n) {
    if (big_n < 0 || n < 0) throw std::invalid_argument("lambdaA_gauge grades must be >= 0");
    CompensatedSum acc;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double jj = static_cast<double>(j + 1);
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            const double ii = static_cast<double>(i + 1);
            const double w = std::max(std::pow(ii, big_n) / std::pow(jj, n),
                                      std::pow(jj, big_n) / std::pow(ii, n));
            acc.add(std::abs(x(i, j)) * w);
        }
    }
    return acc.value();
}

bool is_normal(const TruncatedOperator& x, double tol) {
    require_square(x);
    const Matrix c = x * x.adjoint() - x.adjoint() * x;
    const double scale = std::max(1.0, max_abs(x) * max_abs(x));
    return max_abs(c) <= tol * scale * static_cast<double>(x.rows());
}

}  // namespace opstar::opalg
