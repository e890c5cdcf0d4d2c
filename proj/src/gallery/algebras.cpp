#include "opstar/gallery/algebras.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace opstar::gallery {

using Eigen::Index;

namespace {

Index wrap(Index a, Index n) { return ((a % n) + n) % n; }

}  // namespace

StarAlgebraSpec diagonal_algebra(Index dim) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    return StarAlgebraSpec::from_structure(
        dim, [](Index i, Index j, Index k) { return Complex(i == j && j == k ? 1.0 : 0.0); },
        Matrix::Identity(dim, dim), Vector::Ones(dim));
}

StarAlgebraSpec cyclic_group_algebra(Index n) {
    if (n < 1) throw std::invalid_argument("group order must be >= 1");
    Matrix s = Matrix::Zero(n, n);
    for (Index a = 0; a < n; ++a) s(wrap(-a, n), a) = 1.0;
    Vector unit = Vector::Zero(n);
    unit(0) = 1.0;
    return StarAlgebraSpec::from_structure(
        n, [n](Index a, Index b, Index c) { return Complex(wrap(a + b, n) == c ? 1.0 : 0.0); },
        std::move(s), std::move(unit));
}

std::vector<std::vector<int>> torus_convolution_modes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("torus needs at least one factor");
    for (int n : sizes) {
        if (n < 1) throw std::invalid_argument("torus factor sizes must be >= 1");
    }
    std::vector<std::vector<int>> modes{{}};
    for (int n : sizes) {
        std::vector<std::vector<int>> next;
        for (const auto& m : modes) {
            for (int r = -(n - 1) / 2; r <= n / 2; ++r) {
                auto e = m;
                e.push_back(r);
                next.push_back(std::move(e));
            }
        }
        modes = std::move(next);
    }
    auto norm2 = [](const std::vector<int>& m) {
        long s = 0;
        for (int v : m) s += static_cast<long>(v) * v;
        return s;
    };
    std::stable_sort(modes.begin(), modes.end(), [&](const auto& a, const auto& b) {
        const long na = norm2(a);
        const long nb = norm2(b);
        return na != nb ? na < nb : a < b;
    });
    return modes;
}

StarAlgebraSpec torus_convolution_algebra(const std::vector<int>& sizes) {
    const auto modes = torus_convolution_modes(sizes);
    const auto d = static_cast<Index>(modes.size());
    auto reduce = [&](std::vector<int> m) {
        for (std::size_t f = 0; f < m.size(); ++f) {
            const int n = sizes[f];
            int r = static_cast<int>(wrap(m[f], n));
            if (r > n / 2) r -= n;
            m[f] = r;
        }
        return m;
    };
    std::map<std::vector<int>, Index> index;
    for (Index i = 0; i < d; ++i) index[modes[static_cast<std::size_t>(i)]] = i;

    std::vector<Matrix> left(static_cast<std::size_t>(d), Matrix::Zero(d, d));
    Matrix s = Matrix::Zero(d, d);
    for (Index a = 0; a < d; ++a) {
        const auto& ma = modes[static_cast<std::size_t>(a)];
        std::vector<int> neg(ma.size());
        for (std::size_t f = 0; f < ma.size(); ++f) neg[f] = -ma[f];
        s(index.at(reduce(neg)), a) = 1.0;
        for (Index b = 0; b < d; ++b) {
            const auto& mb = modes[static_cast<std::size_t>(b)];
            std::vector<int> sum(ma.size());
            for (std::size_t f = 0; f < ma.size(); ++f) sum[f] = ma[f] + mb[f];
            left[static_cast<std::size_t>(a)](index.at(reduce(sum)), b) = 1.0;
        }
    }
    Vector unit = Vector::Zero(d);
    unit(0) = 1.0;
    return {std::move(left), std::move(s), std::move(unit)};
}

StarAlgebraSpec matrix_algebra(Index n) {
    if (n < 1) throw std::invalid_argument("matrix algebra order must be >= 1");
    const Index d = n * n;
    Matrix s = Matrix::Zero(d, d);
    Vector unit = Vector::Zero(d);
    for (Index a = 0; a < n; ++a) {
        unit(a * n + a) = 1.0;
        for (Index b = 0; b < n; ++b) s(b * n + a, a * n + b) = 1.0;
    }
    // E_ab E_cd = δ_bc E_ad
    return StarAlgebraSpec::from_structure(
        d,
        [n](Index i, Index j, Index k) {
            const Index a = i / n, b = i % n, c = j / n, e = j % n;
            return Complex(b == c && k == a * n + e ? 1.0 : 0.0);
        },
        std::move(s), std::move(unit));
}

GramForm matrix_algebra_gram(const Matrix& w) {
    const Index n = w.rows();
    const Index d = n * n;
    Matrix g = Matrix::Zero(d, d);
    // tr(E_cd^H E_ab W) = δ_ac W_bd, and (x, y) = y^H G x puts it at G(cd, ab).
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index e = 0; e < n; ++e) g(a * n + e, a * n + b) = w(b, e);
    return GramForm(g);
}

StarAlgebraSpec zero_algebra(Index dim) {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    return {std::vector<Matrix>(static_cast<std::size_t>(dim), Matrix::Zero(dim, dim)),
            Matrix::Identity(dim, dim), std::nullopt};
}

StarAlgebraSpec annihilator_algebra(Index dim) {
    if (dim < 2) throw std::invalid_argument("annihilator algebra needs dim >= 2");
    return StarAlgebraSpec::from_structure(
        dim, [](Index i, Index j, Index k) { return Complex(i == 0 && j == 0 && k == 0 ? 1.0 : 0.0); },
        Matrix::Identity(dim, dim), std::nullopt);
}

GramForm inverse_square_gram(Index dim) {
    RealVector w(dim);
    for (Index j = 0; j < dim; ++j) w(j) = 1.0 / static_cast<double>((j + 1) * (j + 1));
    return GramForm::diagonal(w);
}

}  // namespace opstar::gallery
