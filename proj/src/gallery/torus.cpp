#include "opstar/gallery/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opstar/gallery/algebras.hpp"

namespace opstar::gallery {

using Eigen::Index;

namespace {

void require_torus_dim(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("torus dimension must be 1, 2 or 3");
}

long norm2(const std::vector<int>& m) {
    long s = 0;
    for (int v : m) s += static_cast<long>(v) * v;
    return s;
}

// All m with |m|² ≤ r².
std::vector<std::vector<int>> ball(int n, int r) {
    std::vector<std::vector<int>> out{{}};
    for (int axis = 0; axis < n; ++axis) {
        std::vector<std::vector<int>> next;
        for (const auto& m : out) {
            const long used = norm2(m);
            for (int v = -r; v <= r; ++v) {
                if (used + static_cast<long>(v) * v > static_cast<long>(r) * r) continue;
                auto e = m;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TorusSpectrum torus_spectrum(int n, Index k) {
    require_torus_dim(n);
    if (k < 1) throw std::invalid_argument("torus spectrum needs K >= 1");
    int r = 1;
    std::vector<std::vector<int>> pts;
    for (;;) {
        pts = ball(n, r);
        if (static_cast<Index>(pts.size()) >= k) {
            // Every mode with |m|² below the K-th value is inside a ball whose
            // radius covers that value, so the cut is exact once r² ≥ it.
            std::nth_element(pts.begin(), pts.begin() + (k - 1), pts.end(),
                             [](const auto& a, const auto& b) { return norm2(a) < norm2(b); });
            if (norm2(pts[static_cast<std::size_t>(k - 1)]) <= static_cast<long>(r) * r) break;
        }
        r *= 2;
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        const long na = norm2(a);
        const long nb = norm2(b);
        return na != nb ? na < nb : a < b;
    });
    pts.resize(static_cast<std::size_t>(k));

    TorusSpectrum spec;
    spec.n = n;
    spec.modes = std::move(pts);
    for (const auto& m : spec.modes) {
        const long v = norm2(m);
        spec.eigenvalues.push_back(static_cast<double>(v));
        if (spec.shells.empty() || spec.shells.back().norm2 != v) spec.shells.push_back({v, 0});
        ++spec.shells.back().multiplicity;
    }
    return spec;
}

std::size_t lattice_shell_count(int n, long r2) {
    require_torus_dim(n);
    if (r2 < 0) return 0;
    const auto r = static_cast<long>(std::floor(std::sqrt(static_cast<double>(r2)))) + 1;
    std::size_t count = 0;
    if (n == 1) {
        for (long a = -r; a <= r; ++a) count += a * a == r2;
    } else if (n == 2) {
        for (long a = -r; a <= r; ++a)
            for (long b = -r; b <= r; ++b) count += a * a + b * b == r2;
    } else {
        for (long a = -r; a <= r; ++a)
            for (long b = -r; b <= r; ++b)
                for (long c = -r; c <= r; ++c) count += a * a + b * b + c * c == r2;
    }
    return count;
}

Vector fourier_sobolev_coeffs(const Vector& a, const TorusSpectrum& spectrum, int r) {
    if (static_cast<std::size_t>(a.size()) != spectrum.eigenvalues.size()) {
        throw DimensionMismatch("coefficient list has " + std::to_string(a.size()) +
                                " entries but the spectrum has " +
                                std::to_string(spectrum.eigenvalues.size()));
    }
    Vector out(a.size());
    for (Index k = 0; k < a.size(); ++k) {
        out(k) = a(k) * std::pow(1.0 + spectrum.eigenvalues[static_cast<std::size_t>(k)], r);
    }
    return out;
}

WeylBand weyl_band(const TorusSpectrum& spectrum, Index k_min, Index k_max) {
    if (k_min < 2 || k_max < k_min ||
        k_max > static_cast<Index>(spectrum.eigenvalues.size())) {
        throw std::invalid_argument("Weyl band range must satisfy 2 <= k_min <= k_max <= K");
    }
    WeylBand band{k_min, k_max, std::numeric_limits<double>::infinity(), 0.0};
    for (Index k = k_min; k <= k_max; ++k) {
        const double v = spectrum.eigenvalues[static_cast<std::size_t>(k - 1)] *
                         std::pow(static_cast<double>(k), -2.0 / spectrum.n);
        band.low = std::min(band.low, v);
        band.high = std::max(band.high, v);
    }
    return band;
}

Vector trig_poly_samples(const std::vector<int>& sizes, const Vector& coeffs) {
    const auto modes = torus_convolution_modes(sizes);
    if (static_cast<std::size_t>(coeffs.size()) != modes.size()) {
        throw DimensionMismatch("coefficient count does not match the discrete torus");
    }
    const Index total = coeffs.size();
    Vector out = Vector::Zero(total);
    // Grid points enumerated in row-major order of (k_1, …, k_f).
    std::vector<int> k(sizes.size(), 0);
    for (Index p = 0; p < total; ++p) {
        Complex acc = 0.0;
        for (Index m = 0; m < total; ++m) {
            double phase = 0.0;
            for (std::size_t f = 0; f < sizes.size(); ++f) {
                phase += 2.0 * M_PI * modes[static_cast<std::size_t>(m)][f] * k[f] / sizes[f];
            }
            acc += coeffs(m) * std::polar(1.0, phase);
        }
        out(p) = acc;
        for (std::size_t f = sizes.size(); f-- > 0;) {
            if (++k[f] < sizes[f]) break;
            k[f] = 0;
        }
    }
    return out;
}

TorusSobolevSpace::TorusSobolevSpace(int n, Index max_modes)
    : spectrum_(torus_spectrum(n, max_modes)) {}

std::string TorusSobolevSpace::name() const { return "torus" + std::to_string(spectrum_.n); }

double TorusSobolevSpace::log_base_norm(const Vector& x) const { return log_graded_norm(x, 0); }

double TorusSobolevSpace::log_graded_norm(const Vector& x, int q) const {
    if (static_cast<std::size_t>(x.size()) > spectrum_.eigenvalues.size()) {
        throw DimensionMismatch("element longer than the precomputed spectrum");
    }
    CompensatedSum acc;
    for (Index k = 0; k < x.size(); ++k) {
        const double t =
            std::abs(x(k)) * std::pow(1.0 + spectrum_.eigenvalues[static_cast<std::size_t>(k)], q);
        acc.add(t * t);
    }
    const double v = acc.value();
    return v > 0.0 ? 0.5 * std::log(v) : -std::numeric_limits<double>::infinity();
}

double TorusSobolevSpace::decay_exponent(Index j) const {
    return std::log(1.0 + spectrum_.eigenvalues[static_cast<std::size_t>(j - 1)]);
}

}  // namespace opstar::gallery
