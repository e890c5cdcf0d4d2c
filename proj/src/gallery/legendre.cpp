#include "opstar/gallery/legendre.hpp"

#include <algorithm>
#include <cmath>

namespace opstar::gallery {

std::vector<double> legendre_all(int k, double x) {
    if (k < 0) throw std::invalid_argument("Legendre degree must be >= 0");
    if (!(std::abs(x) <= 1.0)) throw std::domain_error("Legendre argument outside [-1, 1]");
    std::vector<double> p(static_cast<std::size_t>(k) + 1);
    p[0] = 1.0;
    if (k >= 1) p[1] = x;
    for (int j = 1; j < k; ++j) {
        p[static_cast<std::size_t>(j + 1)] =
            ((2.0 * j + 1.0) * x * p[static_cast<std::size_t>(j)] - j * p[static_cast<std::size_t>(j - 1)]) /
            (j + 1.0);
    }
    for (int j = 0; j <= k; ++j) p[static_cast<std::size_t>(j)] *= std::sqrt((2.0 * j + 1.0) / 2.0);
    return p;
}

double legendre_eval(int k, double x) { return legendre_all(k, x).back(); }

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("Gauss rule needs n >= 1");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 1; j < n; ++j) {
                const double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

double integrate(const std::function<double(double)>& f, double lo, double hi, const GaussRule& rule) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    CompensatedSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
    }
    return half * acc.value();
}

double legendre_orthonormality_defect(int n) {
    const GaussRule rule = gauss_legendre(n + 2);
    std::vector<std::vector<double>> q;
    for (double x : rule.nodes) q.push_back(legendre_all(n, x));
    double defect = 0.0;
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            CompensatedSum acc;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                acc.add(rule.weights[i] * q[i][static_cast<std::size_t>(j)] * q[i][static_cast<std::size_t>(k)]);
            }
            defect = std::max(defect, std::abs(acc.value() - (j == k ? 1.0 : 0.0)));
        }
    }
    return defect;
}

namespace {

double horner(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

double legendre_series(const std::vector<double>& c, double x) {
    const auto q = legendre_all(static_cast<int>(c.size()) - 1, std::clamp(x, -1.0, 1.0));
    CompensatedSum acc;
    for (std::size_t k = 0; k < c.size(); ++k) acc.add(c[k] * q[k]);
    return acc.value();
}

NikolskiiResult finish(const std::function<double(double)>& p, int degree) {
    NikolskiiResult res;
    res.degree = degree;
    const auto sup = sup_on_interval([&](double x) { return std::abs(p(x)); }, -1.0, 1.0);
    res.sup = sup.value;
    res.sup_argmax = sup.argmax;
    res.resolved = sup.resolved;
    const GaussRule rule = gauss_legendre(2 * degree + 2);
    res.l2 = std::sqrt(integrate([&](double x) { return p(x) * p(x); }, -1.0, 1.0, rule));
    res.bound = (degree + 1.0) * res.l2;
    res.slack = res.bound - res.sup;
    return res;
}

}  // namespace

NikolskiiResult nikolskii_check(const std::vector<double>& monomial) {
    if (monomial.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    return finish([&](double x) { return horner(monomial, x); }, static_cast<int>(monomial.size()) - 1);
}

NikolskiiResult nikolskii_check_legendre(const std::vector<double>& legendre_coeffs) {
    if (legendre_coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    return finish([&](double x) { return legendre_series(legendre_coeffs, x); },
                  static_cast<int>(legendre_coeffs.size()) - 1);
}

std::vector<double> christoffel_darboux_witness(int n) { return legendre_all(n, 1.0); }

}  // namespace opstar::gallery
