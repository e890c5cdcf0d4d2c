#include "opstar/gallery/bump.hpp"

#include <cmath>
#include <cstdint>
#include <queue>

#include "opstar/gallery/legendre.hpp"

namespace opstar::gallery {

namespace {

// Exact integer coefficients: P_15 needs 62 bits.
using Poly = std::vector<std::int64_t>;

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {0};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = static_cast<std::int64_t>(i) * a[i];
    return out;
}

// Quad precision: P_k alternates in sign and cancels past 64-bit mantissas
// near |x| ≈ 1.
double eval(const Poly& p, double x) {
    __float128 v = 0;
    const __float128 xq = x;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * xq + static_cast<__float128>(*it);
    return static_cast<double>(v);
}

const std::vector<Poly>& numerators() {
    static const std::vector<Poly> table = [] {
        std::vector<Poly> t{{1}};
        const Poly u{1, 0, -1};  // 1 − x²
        const Poly u2 = mul(u, u);
        for (int k = 0; k < kMaxBumpDerivative; ++k) {
            const Poly& p = t.back();
            // P_{k+1} = P_k' u² + 4k x u P_k − 2x P_k
            Poly next = mul(derivative(p), u2);
            next = add(next, mul(Poly{0, 4 * k}, mul(u, p)));
            next = add(next, mul(Poly{0, -2}, p));
            t.push_back(std::move(next));
        }
        return t;
    }();
    return table;
}

}  // namespace

std::vector<double> bump_derivative_numerator(int k) {
    if (k < 0 || k > kMaxBumpDerivative) {
        throw std::invalid_argument("bump derivatives are available for orders 0.." +
                                    std::to_string(kMaxBumpDerivative));
    }
    const auto& p = numerators()[static_cast<std::size_t>(k)];
    return {p.begin(), p.end()};
}

double bump_derivative(int k, double x, double eps) {
    if (k < 0 || k > kMaxBumpDerivative) {
        throw std::invalid_argument("bump derivative order out of range");
    }
    const double y = x / eps;
    const double u = 1.0 - y * y;
    if (!(u > 0.0)) return 0.0;
    const double log_mag = -1.0 / u - 2.0 * k * std::log(u) - k * std::log(eps);
    return eval(numerators()[static_cast<std::size_t>(k)], y) * std::exp(log_mag);
}

namespace {

// Refinement budget; the estimate stops improving once panel differences
// reach evaluation noise, so the budget is what terminates noisy integrands.
constexpr std::size_t kMaxPanels = 4096;

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;  ///< sum of the two half-panel rules
    double error = 0.0;  ///< |halves − whole|
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel make_panel(const std::function<double(double)>& f, double lo, double hi, double whole,
                 const GaussRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double v = integrate(f, lo, mid, rule) + integrate(f, mid, hi, rule);
    return {lo, hi, v, std::abs(v - whole)};
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                          double rel_tol) {
    static const GaussRule rule = gauss_legendre(20);
    std::priority_queue<Panel> heap;
    heap.push(make_panel(f, lo, hi, integrate(f, lo, hi, rule), rule));
    double error = heap.top().error;
    double mass = std::abs(heap.top().value);
    while (error > std::max(abs_tol, rel_tol * mass) && heap.size() < kMaxPanels) {
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = make_panel(f, worst.lo, mid, integrate(f, worst.lo, mid, rule), rule);
        const Panel right = make_panel(f, mid, worst.hi, integrate(f, mid, worst.hi, rule), rule);
        error += left.error + right.error - worst.error;
        mass += std::abs(left.value) + std::abs(right.value) - std::abs(worst.value);
        heap.push(left);
        heap.push(right);
    }
    CompensatedSum total;
    for (; !heap.empty(); heap.pop()) total.add(heap.top().value);
    return total.value();
}

BumpDnReport bump_dn_check(int m, double eps, Complex lambda, double f_scale) {
    if (m < 0) throw std::invalid_argument("order m must be >= 0");
    if (2 * m > kMaxBumpDerivative) {
        throw std::invalid_argument("order m = " + std::to_string(m) + " needs derivatives up to " +
                                    std::to_string(2 * m) + " but only " +
                                    std::to_string(kMaxBumpDerivative) + " are available");
    }
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("dilation must satisfy 0 < eps <= 1");

    BumpDnReport rep;
    rep.m = m;
    rep.eps = eps;
    rep.lambda = lambda;
    rep.f_scale = f_scale;
    for (int k = 0; k <= 2 * m; ++k) {
        double sq = 0.0;
        if (k == 0) {
            // |f + λ|² on the support, |λ|² on the rest of [−1, 1].
            sq = adaptive_integrate(
                     [&](double x) { return std::norm(f_scale * bump_derivative(0, x, eps) + lambda); },
                     -eps, eps) +
                 std::norm(lambda) * (2.0 - 2.0 * eps);
        } else if (f_scale != 0.0) {
            const double tol = 1e-10;
            sq = f_scale * f_scale *
                 adaptive_integrate(
                     [&](double x) {
                         const double v = bump_derivative(k, x, eps);
                         return v * v;
                     },
                     -eps, eps, tol / (f_scale * f_scale));
        }
        rep.derivative_l2.push_back(std::sqrt(sq));
    }
    CompensatedSum low;
    CompensatedSum high;
    for (int k = 0; k <= 2 * m; ++k) {
        const double sq = rep.derivative_l2[static_cast<std::size_t>(k)] * rep.derivative_l2[static_cast<std::size_t>(k)];
        if (k <= m) low.add(sq);
        high.add(sq);
    }
    rep.norm_m_sq = low.value();
    rep.l2 = rep.derivative_l2.front();
    rep.norm_2m = std::sqrt(high.value());
    rep.constant = rep.l2 * rep.norm_2m > 0.0 ? rep.norm_m_sq / (rep.l2 * rep.norm_2m) : 0.0;
    rep.proven_bound = m + 1.0;
    return rep;
}

}  // namespace opstar::gallery
