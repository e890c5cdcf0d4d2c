#pragma once

#include <vector>

#include "opstar/staralg.hpp"

/// Concrete finite *-algebras used by tests, the CLI and the embedding sweep.
namespace opstar::gallery {

using staralg::GramForm;
using staralg::StarAlgebraSpec;

/// ℂ^d with pointwise product, complex conjugation and unit (1, …, 1).
StarAlgebraSpec diagonal_algebra(Eigen::Index dim);

/// Group algebra of ℤ/n: e_a e_b = e_{a+b}, e_a* = e_{−a}, unit e_0.
StarAlgebraSpec cyclic_group_algebra(Eigen::Index n);

/// Fourier-coefficient algebra of the discrete torus ℤ_{N_1} × … × ℤ_{N_k}:
/// convolution of coefficients, f* = conj(f) so (e_m)* = e_{−m}. Basis modes
/// are ordered by |m|² over centred representatives, ties by lexicographic m.
StarAlgebraSpec torus_convolution_algebra(const std::vector<int>& sizes);

/// The centred lattice modes of torus_convolution_algebra in basis order.
std::vector<std::vector<int>> torus_convolution_modes(const std::vector<int>& sizes);

/// M_n with matrix-unit basis E_ab at index a·n + b and x* = x^H.
StarAlgebraSpec matrix_algebra(Eigen::Index n);

/// (x, y) = tr(y^H x W) on M_n. Satisfies (α) for every positive W; (γ)
/// only when W is a multiple of the identity.
GramForm matrix_algebra_gram(const Matrix& w);

/// All structure constants zero, identity involution, no unit.
StarAlgebraSpec zero_algebra(Eigen::Index dim);

/// e_1 e_1 = e_1 and every other product 0: e_2, …, e_d annihilate the
/// algebra, so the product span has rank 1.
StarAlgebraSpec annihilator_algebra(Eigen::Index dim);

/// The truncated Λ∞(α) ⊕ ℂ1 model: diagonal algebra with (x, y) = Σ x_j
/// conj(y_j) j^{−2}.
GramForm inverse_square_gram(Eigen::Index dim);

}  // namespace opstar::gallery
