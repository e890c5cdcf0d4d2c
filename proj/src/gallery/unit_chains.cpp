#include "opstar/gallery/unit_chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace opstar::gallery {

using Eigen::Index;

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-12;

double safe_log(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

bool within(double log_lhs, double log_rhs, double bound) {
    return log_lhs <= log_rhs + std::log(bound) + kRelTol;
}

}  // namespace

LambdaUnitReport lambda_unit_dn(const WeightSequence& alpha, int s, const std::vector<Vector>& probes,
                                std::optional<int> gamma) {
    if (probes.empty()) throw std::invalid_argument("lambda-unit chain needs probes");
    if (s < 0) throw std::invalid_argument("grade s must be >= 0");
    const Index d = probes.front().size() - 1;
    if (d < 1) throw std::invalid_argument("lambda-unit probes need layout (λ, x_1..x_d)");
    if (alpha.dim() < d) throw DimensionMismatch("weight sequence shorter than probe dimension");
    const WeightSequence a = alpha.extended(d);
    const dnlab::LambdaUnitSpace space(a);

    LambdaUnitReport rep;
    rep.dim = d;
    rep.s = s;
    rep.gamma = gamma ? *gamma : seqspace::gamma_index(a).gamma;
    rep.t = 2 * s + rep.gamma;
    rep.probes = probes.size();

    auto track = [&rep](double& slot, double log_lhs, double log_r, double bound) {
        slot = std::max(slot, std::exp(log_lhs - log_r));
        if (!within(log_lhs, log_r, bound)) ++rep.violations;
    };

    for (std::size_t p = 0; p < probes.size(); ++p) {
        const Vector& v = probes[p];
        if (v.size() != d + 1) throw DimensionMismatch("probes must share one dimension");
        const double log_norm = space.log_base_norm(v);
        if (log_norm == kNegInf) continue;
        const double log_r_gamma = log_norm + space.log_graded_norm(v, rep.gamma);
        const double log_r_t = log_norm + space.log_graded_norm(v, rep.t);
        const Complex lambda = v(0);
        const double mod_lambda = std::abs(lambda);

        if (mod_lambda > 0.0) track(rep.max_lambda_ratio, 2.0 * std::log(mod_lambda), log_r_gamma, 4.0);

        for (Index k = 1; k <= d; ++k) {
            const double xk = std::abs(v(k));
            if (xk == 0.0) continue;
            const double log_lhs = 2.0 * std::log(xk) + 2.0 * s * a(k);
            if (xk <= mod_lambda / 2.0) {
                ++rep.a1_count;
                track(rep.max_a1, log_lhs, log_r_t, 1.0);
            } else if (xk <= 2.0 * mod_lambda) {
                ++rep.a2_count;
                track(rep.max_a2, log_lhs, log_r_t, 16.0);
            } else {
                ++rep.a3_count;
                if (!(std::abs(v(k) + lambda) > xk / 2.0)) rep.a3_precondition = false;
                track(rep.max_a3, log_lhs, log_r_t, 2.0);
            }
        }

        const double log_final = 2.0 * space.log_graded_norm(v, s);
        const double ratio = std::exp(log_final - log_r_t);
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.argmax_probe = p;
        }
        if (!within(log_final, log_r_t, 16.0)) ++rep.violations;
    }
    return rep;
}

std::vector<Vector> lambda_unit_probes(const WeightSequence& alpha, Index d, std::size_t count,
                                       ProbeRng& rng) {
    if (alpha.dim() < d) throw DimensionMismatch("weight sequence shorter than probe dimension");
    const WeightSequence a = alpha.extended(d);
    const dnlab::LambdaUnitSpace space(a);
    std::vector<Vector> out = space.special_probes(d, rng);
    if (out.size() > count) out.resize(count);
    static constexpr double kBetas[] = {0.5, 1.0, 2.0};
    while (out.size() < count) {
        const double beta = kBetas[rng.below(3)];
        Vector v(d + 1);
        const double x_scale = std::pow(10.0, rng.uniform(-2.0, 2.0));
        for (Index j = 1; j <= d; ++j) v(j) = x_scale * rng.complex_normal() * std::exp(-beta * a(j));
        // One in eight probes has λ = 0.
        v(0) = rng.below(8) == 0 ? Complex(0.0) : rng.complex_normal() * std::pow(10.0, rng.uniform(-3.0, 1.0));
        out.push_back(std::move(v));
    }
    return out;
}

double kinf_unit_norm(const KinfProbe& p) {
    const Index d = p.x.rows();
    if (p.x.cols() != d || d < 1) throw DimensionMismatch("K∞ probe must be a non-empty square matrix");
    CompensatedSum acc;
    for (Index j = 0; j < d; ++j) {
        const double w = 1.0 / (static_cast<double>(j + 1) * static_cast<double>(j + 1));
        for (Index i = 0; i < d; ++i) {
            const Complex e = i == j ? p.x(i, j) + p.lambda : p.x(i, j);
            acc.add(std::norm(e) * w);
        }
    }
    acc.add(std::norm(p.lambda) * dnlab::inverse_square_tail(d));
    return std::sqrt(acc.value());
}

double kinf_unit_log_grade(const KinfProbe& p, int n) {
    double best = safe_log(std::abs(p.lambda));
    for (Index j = 0; j < p.x.cols(); ++j) {
        for (Index i = 0; i < p.x.rows(); ++i) {
            const double m = std::abs(p.x(i, j));
            if (m == 0.0) continue;
            best = std::max(best, std::log(m) + n * std::log(static_cast<double>((i + 1) * (j + 1))));
        }
    }
    return best;
}

KinfUnitReport kinf_unit_dn(int k, const std::vector<KinfProbe>& probes) {
    if (probes.empty()) throw std::invalid_argument("K∞ chain needs probes");
    if (k < 0) throw std::invalid_argument("grade k must be >= 0");
    const Index d = probes.front().x.rows();
    KinfUnitReport rep;
    rep.dim = d;
    rep.k = k;
    rep.n = 2 * k + 2;
    rep.probes = probes.size();
    rep.combined_bound = 16.0 * std::ldexp(1.0, 4 * k + 3);

    std::vector<Vector> diag_probes;
    for (const auto& p : probes) {
        if (p.x.rows() != d || p.x.cols() != d) throw DimensionMismatch("probes must share one dimension");
        const double log_norm = safe_log(kinf_unit_norm(p));
        if (log_norm == kNegInf) continue;

        double off = kNegInf;
        for (Index j = 0; j < d; ++j) {
            for (Index i = 0; i < d; ++i) {
                const double m = std::abs(p.x(i, j));
                if (i == j || m == 0.0) continue;
                off = std::max(off, 2.0 * std::log(m) + 2.0 * k * std::log(static_cast<double>((i + 1) * (j + 1))));
            }
        }
        if (off != kNegInf) {
            const double log_r = log_norm + kinf_unit_log_grade(p, 2 * k + 1);
            rep.max_offdiag_ratio = std::max(rep.max_offdiag_ratio, std::exp(off - log_r));
            if (!within(off, log_r, 1.0)) ++rep.violations;
        }

        const double log_lhs = 2.0 * kinf_unit_log_grade(p, k);
        const double log_r = log_norm + kinf_unit_log_grade(p, rep.n);
        rep.max_combined = std::max(rep.max_combined, std::exp(log_lhs - log_r));
        if (!within(log_lhs, log_r, rep.combined_bound)) ++rep.violations;

        Vector v(d + 1);
        v(0) = p.lambda;
        for (Index j = 0; j < d; ++j) v(j + 1) = p.x(j, j);
        diag_probes.push_back(std::move(v));
    }
    if (!diag_probes.empty()) {
        const auto chain = lambda_unit_dn(WeightSequence::log1p(d), 2 * k, diag_probes);
        rep.max_diag_chain_ratio = chain.max_ratio;
        rep.violations += chain.violations + (chain.a3_precondition ? 0 : 1);
    }
    return rep;
}

std::vector<KinfProbe> kinf_unit_probes(Index d, std::size_t count, ProbeRng& rng) {
    if (d < 2) throw std::invalid_argument("K∞ probes need d >= 2");
    std::vector<KinfProbe> out;
    auto unit = [d](Index i, Index j) {
        Matrix m = Matrix::Zero(d, d);
        m(i, j) = 1.0;
        return m;
    };
    out.push_back({Matrix::Zero(d, d), 1.0});
    out.push_back({unit(0, 1), 0.0});
    out.push_back({unit(1, 0), 0.0});
    out.push_back({unit(0, 0), 0.0});
    out.push_back({unit(1, 1), 1.0});
    for (Index block : {1, 2, 4, 8}) {
        if (block > d) break;
        KinfProbe p{Matrix::Zero(d, d), std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI))};
        for (Index j = 0; j < block; ++j) p.x(j, j) = -p.lambda;
        p.x(0, std::min<Index>(1, d - 1)) += 1e-3 * rng.complex_normal();
        out.push_back(std::move(p));
    }
    if (out.size() > count) out.resize(count);
    static constexpr double kBetas[] = {1.0, 2.0, 3.0};
    while (out.size() < count) {
        const double beta = kBetas[rng.below(3)];
        KinfProbe p{Matrix(d, d), 0.0};
        const double scale = std::pow(10.0, rng.uniform(-2.0, 2.0));
        for (Index j = 0; j < d; ++j) {
            for (Index i = 0; i < d; ++i) {
                p.x(i, j) = scale * rng.complex_normal() *
                            std::pow(static_cast<double>((i + 1) * (j + 1)), -beta);
            }
        }
        p.lambda = rng.below(8) == 0 ? Complex(0.0) : rng.complex_normal() * std::pow(10.0, rng.uniform(-3.0, 1.0));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace opstar::gallery
