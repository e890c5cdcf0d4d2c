#include "opstar/gallery/ainf.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace opstar::gallery {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw NumericOverflow("Leibniz coefficient exceeds 64-bit range");
    }
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) c = checked_mul(c, n - k + i) / i;
    return c;
}

std::int64_t falling(int n, int j) {
    std::int64_t c = 1;
    for (int i = 0; i < j; ++i) c = checked_mul(c, n - i);
    return c;
}

Complex ipow(Complex z, int e) {
    if (e < 0) return 0.0;
    Complex out = 1.0;
    Complex base = z;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace

SupSample ainf_derivative_sup(int n, int k) {
    if (n < 1 || n > kAinfMaxN) throw NumericOverflow("family index outside 1..60");
    if (k < 0) throw std::invalid_argument("derivative order must be >= 0");
    std::vector<std::pair<double, std::pair<int, int>>> terms;
    for (int j = 0; j <= k; ++j) {
        const std::int64_t c = checked_mul(binomial(k, j), checked_mul(falling(n, j), falling(n, k - j)));
        if (c == 0) continue;
        terms.push_back({static_cast<double>(c), {n - j, n - k + j}});
    }
    auto f = [&terms](double theta) {
        const Complex z = std::polar(1.0, theta);
        Complex acc = 0.0;
        for (const auto& [c, e] : terms) acc += c * ipow(z - 1.0, e.first) * ipow(z + 1.0, e.second);
        return std::abs(acc);
    };
    return sup_on_closed_curve(f);
}

AinfTable ainf_counterexample(int n_max, int p, int p_max, double threshold) {
    if (n_max > kAinfMaxN) {
        throw NumericOverflow("n_max = " + std::to_string(n_max) + " exceeds the double-precision headroom (60)");
    }
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (p_max < 0 || p < 0 || p > p_max) throw std::invalid_argument("need 0 <= p <= p_max");

    AinfTable table;
    table.n_max = n_max;
    table.p = p;
    table.p_max = p_max;
    table.threshold = threshold;
    for (int n = 1; n <= n_max; ++n) {
        AinfRow row;
        row.n = n;
        const auto seg = sup_on_interval(
            [n](double x) { return std::pow(std::abs(x * x - 1.0), n); }, -1.0, 1.0);
        row.sup_interval = seg.value;
        row.resolved = seg.resolved;
        double running = 0.0;
        for (int k = 0; k <= p_max; ++k) {
            const auto s = ainf_derivative_sup(n, k);
            row.resolved = row.resolved && s.resolved;
            running = std::max(running, s.value);
            if (k == 0) row.sup_disc = s.value;
            row.norm_p.push_back(running);
            row.bound.push_back(std::pow(static_cast<double>(n), k) * std::ldexp(1.0, k + n));
            if (running > row.bound.back() * (1.0 + kAinfBoundRelTol)) table.bound_respected = false;
        }
        row.ratio = row.sup_disc * row.sup_disc / (row.sup_interval * row.norm_p[static_cast<std::size_t>(p)]);
        row.lower_bound_ratio = std::ldexp(1.0, n) / std::pow(2.0 * n, p);
        if (!table.first_above && row.ratio > threshold) table.first_above = n;
        if (!table.lower_bound_first_above && row.lower_bound_ratio > threshold) {
            table.lower_bound_first_above = n;
        }
        if (n > 5 && !(row.ratio > table.rows.back().ratio)) table.monotone_from_5 = false;
        table.rows.push_back(std::move(row));
    }
    std::vector<double> ns;
    std::vector<double> ratios;
    for (const auto& r : table.rows) {
        ns.push_back(r.n);
        ratios.push_back(r.ratio);
    }
    table.exponent = dnlab::base2_growth_exponent(ns, ratios);
    return table;
}

Vector ainf_family_member(Eigen::Index n) {
    if (n < 1 || n > kAinfMaxN) throw NumericOverflow("family index outside 1..60");
    Vector c = Vector::Zero(2 * n + 1);
    for (Eigen::Index m = 0; m <= n; ++m) {
        const double b = static_cast<double>(binomial(static_cast<int>(n), static_cast<int>(m)));
        c(2 * m) = ((n - m) % 2 == 0 ? 1.0 : -1.0) * b;
    }
    return c;
}

namespace {

Complex horner(const Vector& c, Complex z) {
    Complex v = 0.0;
    for (Eigen::Index i = c.size(); i-- > 0;) v = v * z + c(i);
    return v;
}

Vector differentiate(const Vector& c) {
    if (c.size() <= 1) return Vector::Zero(1);
    Vector out(c.size() - 1);
    for (Eigen::Index i = 1; i < c.size(); ++i) out(i - 1) = static_cast<double>(i) * c(i);
    return out;
}

double safe_log(double v) { return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity(); }

}  // namespace

double AinfSpace::log_base_norm(const Vector& x) const {
    return safe_log(sup_on_interval([&x](double t) { return std::abs(horner(x, Complex(t, 0.0))); }, -1.0, 1.0).value);
}

double AinfSpace::log_graded_norm(const Vector& x, int q) const {
    double best = 0.0;
    Vector c = x;
    for (int j = 0; j <= q; ++j) {
        best = std::max(best, sup_on_closed_curve([&c](double t) { return std::abs(horner(c, std::polar(1.0, t))); }).value);
        c = differentiate(c);
    }
    return safe_log(best);
}

std::vector<Vector> AinfSpace::special_probes(Eigen::Index n, ProbeRng&) const {
    return {ainf_family_member(n)};
}

}  // namespace opstar::gallery
