#include "opstar/dnlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "opstar/embed.hpp"

namespace opstar::dnlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

// log sqrt(Σ exp(2 t_i)) for log-magnitudes t_i.
double log_root_sum_squares(const std::vector<double>& logs) {
    double top = kNegInf;
    for (double t : logs) top = std::max(top, t);
    if (top == kNegInf) return kNegInf;
    CompensatedSum acc;
    for (double t : logs) {
        if (t != kNegInf) acc.add(std::exp(2.0 * (t - top)));
    }
    return top + 0.5 * std::log(acc.value());
}

}  // namespace

double GradedSpace::decay_exponent(Index j) const { return std::log(static_cast<double>(j)); }

std::vector<Vector> GradedSpace::special_probes(Index, ProbeRng&) const { return {}; }

double SSpace::log_base_norm(const Vector& x) const { return safe_log(seqspace::norm_s(x, 0)); }

double SSpace::log_graded_norm(const Vector& x, int q) const {
    return safe_log(seqspace::norm_s(x, q));
}

double LambdaSpace::log_base_norm(const Vector& x) const { return log_graded_norm(x, 0); }

double LambdaSpace::log_graded_norm(const Vector& x, int q) const {
    if (alpha_.dim() < x.size()) {
        throw DimensionMismatch("weight sequence shorter than element");
    }
    std::vector<double> logs(static_cast<std::size_t>(x.size()));
    for (Index j = 0; j < x.size(); ++j) {
        logs[static_cast<std::size_t>(j)] = safe_log(std::abs(x(j))) + q * alpha_(j + 1);
    }
    return log_root_sum_squares(logs);
}

double inverse_square_tail(Index d) {
    // Exact terms up to a cut-off, then the trigamma expansion ψ'(x) for x = cut + 1.
    const Index cut = std::max<Index>(d, 64);
    CompensatedSum acc;
    for (Index j = cut; j > d; --j) acc.add(1.0 / (static_cast<double>(j) * static_cast<double>(j)));
    const double x = static_cast<double>(cut + 1);
    const double x2 = x * x;
    const double tail = 1.0 / x + 1.0 / (2.0 * x2) + 1.0 / (6.0 * x2 * x) -
                        1.0 / (30.0 * x2 * x2 * x) + 1.0 / (42.0 * x2 * x2 * x2 * x);
    acc.add(tail);
    return acc.value();
}

double LambdaUnitSpace::log_base_norm(const Vector& x) const {
    const Index d = x.size() - 1;
    if (d < 1) throw std::invalid_argument("lambda-unit element needs (λ, x_1..x_d), d >= 1");
    const Complex lambda = x(0);
    CompensatedSum acc;
    for (Index j = 1; j <= d; ++j) {
        const double v = std::abs(x(j) + lambda) / static_cast<double>(j);
        acc.add(v * v);
    }
    acc.add(std::norm(lambda) * inverse_square_tail(d));
    return 0.5 * safe_log(acc.value());
}

double LambdaUnitSpace::log_graded_norm(const Vector& x, int q) const {
    const Index d = x.size() - 1;
    if (alpha_.dim() < d) throw DimensionMismatch("weight sequence shorter than element");
    double best = safe_log(std::abs(x(0)));
    for (Index j = 1; j <= d; ++j) best = std::max(best, safe_log(std::abs(x(j))) + q * alpha_(j));
    return best;
}

double LambdaUnitSpace::decay_exponent(Index j) const { return j == 1 ? 0.0 : alpha_(j - 1); }

std::vector<Vector> LambdaUnitSpace::special_probes(Index d, ProbeRng& rng) const {
    std::vector<Vector> out;
    auto phase = [&rng]() { return std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI)); };
    auto blank = [d]() { return Vector(Vector::Zero(d + 1)); };

    Vector lam = blank();
    lam(0) = 1.0;
    out.push_back(lam);

    // Cancellation blocks x_j = −λ on j ≤ J: the |λ|² ≤ 4R(γ) regime.
    for (Index block : {1, 2, 3, 5, 8, 13, 21}) {
        if (block > d) break;
        Vector v = blank();
        v(0) = phase();
        for (Index j = 1; j <= block; ++j) v(j) = -v(0);
        out.push_back(v);
    }
    // |x_j| ∈ (|λ|/2, 2|λ|] on a leading block: the A₂ regime.
    for (Index block : {1, 2, 4, 8}) {
        if (block > d) break;
        Vector v = blank();
        v(0) = phase();
        for (Index j = 1; j <= block; ++j) v(j) = rng.uniform(0.5 + 1e-9, 2.0) * phase();
        out.push_back(v);
    }
    // Large leading coordinates: the A₃ regime, with a small λ.
    for (double scale : {3.0, 10.0, 100.0}) {
        Vector v = blank();
        v(0) = phase();
        for (Index j = 1; j <= std::min<Index>(d, 6); ++j) {
            v(j) = scale * std::exp(-static_cast<double>(j - 1)) * phase();
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Vector> make_probes(const GradedSpace& space, Index d, const ProbeSpec& spec,
                                ProbeRng& rng) {
    const Index n = space.element_size(d);
    std::vector<Vector> out;
    if (spec.unit_vectors) {
        for (Index j = 1; j <= n; ++j) out.push_back(seqspace::unit_vector(n, j));
    }
    if (spec.damped_gaussians > 0 && spec.betas.empty()) {
        throw std::invalid_argument("damped Gaussian probes need at least one beta");
    }
    for (std::size_t p = 0; p < spec.damped_gaussians; ++p) {
        const double beta = spec.betas[static_cast<std::size_t>(rng.below(spec.betas.size()))];
        Vector v(n);
        for (Index j = 1; j <= n; ++j) {
            v(j - 1) = rng.complex_normal() * std::exp(-beta * space.decay_exponent(j));
        }
        out.push_back(std::move(v));
    }
    for (const auto& u : spec.user) {
        if (u.size() == n) out.push_back(u);
    }
    if (spec.special) {
        auto extra = space.special_probes(d, rng);
        for (auto& v : extra) out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t grid_seed(std::uint64_t seed, Index d) {
    return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(d + 1));
}

std::optional<double> dn_ratio(const GradedSpace& space, const Vector& x, int q, int r) {
    const double lq = space.log_graded_norm(x, q);
    const double l0 = space.log_base_norm(x);
    const double lr = space.log_graded_norm(x, r);
    if (!std::isfinite(l0) || !std::isfinite(lr) || std::isnan(lq)) return std::nullopt;
    if (lq == kNegInf) return 0.0;
    const double v = std::exp(2.0 * lq - l0 - lr);
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

void RatioAccumulator::add(std::size_t probe_index, std::optional<double> ratio) {
    ++count;
    if (!ratio) {
        ++excluded;
        return;
    }
    if (!any || *ratio > max_ratio || (*ratio == max_ratio && probe_index < argmax)) {
        max_ratio = *ratio;
        argmax = probe_index;
        any = true;
    }
}

void RatioAccumulator::merge(const RatioAccumulator& other) {
    count += other.count;
    excluded += other.excluded;
    if (!other.any) return;
    if (!any || other.max_ratio > max_ratio ||
        (other.max_ratio == max_ratio && other.argmax < argmax)) {
        max_ratio = other.max_ratio;
        argmax = other.argmax;
        any = true;
    }
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedBounded: return "certified-bounded";
        case Verdict::FalsifiedGrowing: return "falsified-growing";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

const DnCurve& DnCertificate::curve(int r) const {
    for (const auto& c : curves) {
        if (c.r == r) return c;
    }
    throw std::out_of_range("no curve for r = " + std::to_string(r));
}

DnCertificate certify_dn(const DnProbe& probe) {
    if (probe.space == nullptr) throw std::invalid_argument("DN probe has no space");
    if (probe.grid.empty()) throw std::invalid_argument("DN probe grid is empty");
    for (std::size_t i = 1; i < probe.grid.size(); ++i) {
        if (probe.grid[i] <= probe.grid[i - 1]) {
            throw std::invalid_argument("DN probe grid must be strictly increasing");
        }
    }
    if (probe.r_list.empty()) throw std::invalid_argument("DN probe needs at least one r");
    if (probe.q < 0) throw std::invalid_argument("DN grade q must be >= 0");
    std::vector<int> rs = probe.r_list;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    if (rs.front() < 0) throw std::invalid_argument("DN grades r must be >= 0");

    DnCertificate cert;
    cert.space = probe.space->name();
    cert.q = probe.q;
    cert.grid = probe.grid;
    cert.seed = probe.seed;
    for (int r : rs) cert.curves.push_back({r, {}, 0.0, false});

    for (Index d : probe.grid) {
        ProbeRng rng(grid_seed(probe.seed, d));
        const auto probes = make_probes(*probe.space, d, probe.family, rng);
        if (probes.empty()) {
            throw DegenerateFamily("probe family is empty at d = " + std::to_string(d));
        }
        for (auto& curve : cert.curves) {
            RatioAccumulator acc;
            for (std::size_t i = 0; i < probes.size(); ++i) {
                acc.add(i, dn_ratio(*probe.space, probes[i], probe.q, curve.r));
            }
            if (!acc.any) {
                throw DegenerateFamily("every probe excluded at d = " + std::to_string(d) +
                                       ", r = " + std::to_string(curve.r));
            }
            curve.points.push_back({d, curve.r, acc.max_ratio, acc.count, acc.excluded, acc.argmax});
            if (static_cast<double>(acc.excluded) >
                kMaxExcludedFraction * static_cast<double>(acc.count)) {
                curve.excessive_exclusions = true;
            }
        }
    }

    std::vector<double> logd;
    for (Index d : probe.grid) logd.push_back(std::log(static_cast<double>(d)));
    for (auto& curve : cert.curves) {
        if (probe.grid.size() < 2) continue;
        std::vector<double> logc;
        for (const auto& p : curve.points) logc.push_back(safe_log(p.constant));
        const bool finite = std::all_of(logc.begin(), logc.end(), [](double v) { return std::isfinite(v); });
        curve.exponent = finite ? fitted_slope(logd, logc) : 0.0;
    }

    if (std::any_of(cert.curves.begin(), cert.curves.end(),
                    [](const DnCurve& c) { return c.excessive_exclusions; })) {
        cert.verdict = Verdict::Inconclusive;
        cert.reason = "more than 10% of probes excluded at some grid point";
    } else if (probe.grid.size() < 2) {
        cert.verdict = Verdict::Inconclusive;
        cert.reason = "growth fit needs at least two grid points";
    } else {
        for (const auto& c : cert.curves) {
            if (c.exponent <= kBoundedExponent) {
                cert.verdict = Verdict::CertifiedBounded;
                cert.witness_r = c.r;
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3g", c.exponent);
                cert.reason = std::string("fitted exponent ") + buf + " <= 0.05 at r = " +
                              std::to_string(c.r);
                break;
            }
        }
        if (!cert.witness_r) {
            const bool all_growing = std::all_of(cert.curves.begin(), cert.curves.end(),
                                                 [](const DnCurve& c) { return c.exponent >= kGrowingExponent; });
            cert.verdict = all_growing ? Verdict::FalsifiedGrowing : Verdict::Inconclusive;
            cert.reason = all_growing ? "every r has fitted exponent >= 0.5"
                                      : "fitted exponents fall between 0.05 and 0.5";
        }
    }
    return cert;
}

double base2_growth_exponent(std::span<const double> params, std::span<const double> values) {
    if (params.size() != values.size()) throw DimensionMismatch("params and values differ in length");
    std::vector<double> n;
    std::vector<double> y;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (values[i] > 0.0 && std::isfinite(values[i]) && params[i] > 0.0) {
            n.push_back(params[i]);
            y.push_back(std::log2(values[i]));
        }
    }
    if (n.size() < 2) return 0.0;
    if (n.size() < 4) return fitted_slope(n, y);
    RealMatrix design(static_cast<Index>(n.size()), 3);
    RealVector rhs(static_cast<Index>(n.size()));
    for (std::size_t i = 0; i < n.size(); ++i) {
        const auto k = static_cast<Index>(i);
        design(k, 0) = n[i];
        design(k, 1) = std::log2(n[i]);
        design(k, 2) = 1.0;
        rhs(k) = y[i];
    }
    return least_squares(design, rhs)(0);
}

FalsifyReport falsify_dn(const GradedSpace& space, const std::function<Vector(Index)>& family,
                         const std::vector<Index>& params, int q, const std::vector<int>& r_list,
                         double threshold) {
    if (params.empty() || r_list.empty()) {
        throw std::invalid_argument("falsification needs parameters and at least one r");
    }
    FalsifyReport rep;
    rep.space = space.name();
    rep.q = q;
    rep.threshold = threshold;
    for (int r : r_list) rep.curves.push_back({r, {}, {}, 0.0, 0.0, std::nullopt});

    for (Index n : params) {
        const Vector x = family(n);
        for (auto& c : rep.curves) {
            const auto ratio = dn_ratio(space, x, q, c.r);
            const double v = ratio.value_or(std::numeric_limits<double>::quiet_NaN());
            c.params.push_back(n);
            c.ratios.push_back(v);
            if (!c.first_above && ratio && v > threshold) c.first_above = n;
        }
    }
    for (auto& c : rep.curves) {
        std::vector<double> n(c.params.begin(), c.params.end());
        c.exponent = base2_growth_exponent(n, c.ratios);
        std::vector<double> ln;
        std::vector<double> lr;
        for (std::size_t i = 0; i < n.size(); ++i) {
            if (c.ratios[i] > 0.0 && n[i] > 0.0) {
                ln.push_back(std::log(n[i]));
                lr.push_back(std::log(c.ratios[i]));
            }
        }
        c.loglog_slope = ln.size() >= 2 ? fitted_slope(ln, lr) : 0.0;
    }
    return rep;
}

TruncatedOperator diagonal_selfadjoint_lift(const staralg::GramForm& g, const WeightSequence& alpha,
                                            int n) {
    const Index d = g.dim();
    if (alpha.dim() < d) throw DimensionMismatch("weight sequence shorter than Gram form");
    const auto wit = embed::isometry_from_gram(g, d);
    Matrix dn = Matrix::Zero(d, d);
    for (Index j = 0; j < d; ++j) dn(j, j) = alpha.grade_weight(j + 1, n);
    return wit.w.triangularView<Eigen::Upper>().solve(Matrix(dn * wit.w));
}

double pulled_back_norm(const staralg::GramForm& g, const WeightSequence& alpha, int n,
                        const Vector& xi) {
    const auto wit = embed::isometry_from_gram(g, g.dim());
    return seqspace::norm_lambda(wit.w * xi, alpha, n);
}

}  // namespace opstar::dnlab
