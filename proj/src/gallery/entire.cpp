#include "opstar/gallery/entire.hpp"

#include <algorithm>
#include <cmath>

namespace opstar::gallery {

Complex EntireFunctionSample::operator()(Complex z) const {
    Complex v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    return v;
}

EntireFunctionSample EntireFunctionSample::partial_sum(int n) const {
    const auto keep = static_cast<std::size_t>(std::clamp(n + 1, 0, static_cast<int>(coeffs.size())));
    return {std::vector<Complex>(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(keep))};
}

EntireFunctionSample EntireFunctionSample::random(int degree, ProbeRng& rng) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    EntireFunctionSample f;
    for (int j = 0; j <= degree; ++j) f.coeffs.push_back(rng.complex_normal());
    return f;
}

JoukowskiEllipse joukowski_ellipse(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("Joukowski parameter must be a finite r > 0");
    }
    const double rr = r >= 1.0 ? r : 1.0 / r;
    return {rr, 0.5 * (rr + 1.0 / rr), 0.5 * (rr - 1.0 / rr)};
}

SupSample sup_on_ellipse(const EntireFunctionSample& f, double r) {
    const auto e = joukowski_ellipse(r);
    return sup_on_closed_curve([&](double t) { return std::abs(f(e.point(t))); });
}

SupSample sup_on_segment(const EntireFunctionSample& f) {
    return sup_on_interval([&](double x) { return std::abs(f(Complex(x, 0.0))); }, -1.0, 1.0);
}

SupSample sup_on_disc(const EntireFunctionSample& f, double radius) {
    return sup_on_closed_curve([&](double t) { return std::abs(f(std::polar(radius, t))); });
}

HadamardResult hadamard_check(const EntireFunctionSample& f, double r) {
    if (!(r > 1.0)) throw std::invalid_argument("Hadamard check needs r > 1");
    HadamardResult res;
    res.r = r;
    const auto er = sup_on_ellipse(f, r);
    const auto seg = sup_on_segment(f);
    const auto er2 = sup_on_ellipse(f, r * r);
    res.sup_er = er.value;
    res.sup_interval = seg.value;
    res.sup_er2 = er2.value;
    res.lhs = er.value * er.value;
    res.rhs = seg.value * er2.value;
    res.slack = res.rhs - res.lhs;
    res.relative_slack = res.slack / std::max(1.0, res.rhs);
    res.resolved = er.resolved && seg.resolved && er2.resolved;
    return res;
}

TaylorTailResult taylor_tail_bound(const EntireFunctionSample& f, int n) {
    if (n < 0 || n >= f.degree_cap()) {
        throw std::invalid_argument("Taylor tail needs 0 <= n < degree cap");
    }
    EntireFunctionSample tail;
    tail.coeffs.assign(f.coeffs.size(), Complex(0.0));
    for (std::size_t j = static_cast<std::size_t>(n) + 1; j < f.coeffs.size(); ++j) tail.coeffs[j] = f.coeffs[j];
    TaylorTailResult res;
    res.n = n;
    const auto lhs = sup_on_segment(tail);
    const auto disc = sup_on_disc(f, 3.0);
    res.lhs = lhs.value;
    res.rhs = std::ldexp(disc.value, -(n + 1));
    res.slack = res.rhs - res.lhs;
    res.relative_slack = res.slack / std::max(1.0, res.rhs);
    res.resolved = lhs.resolved && disc.resolved;
    return res;
}

}  // namespace opstar::gallery
