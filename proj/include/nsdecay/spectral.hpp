#pragma once

#include <array>
#include <functional>

#include "nsdecay/field.hpp"

// Fourier-space operators on the periodic box.
//
// Frequency bookkeeping lives here and nowhere else:
//   Lambda^s      <->  |xi|^s            (xi = k / L)
//   d/dx_j        <->  2 pi i xi_j       (zero on the Nyquist index of axis j)
//   Laplacian     <->  -|2 pi xi|^2
//   ||f||_{L2}^2   =   L^3 sum_k |c_k|^2  (Parseval with c_k = n^-3 DFT)
// so ||nabla^k f|| = (2 pi)^k ||Lambda^k f|| for zero-mean f.

namespace nsdecay {

/// Relative tolerance on the mean for negative powers of Lambda.
inline constexpr double kZeroMeanTol = 1e-12;

Field forward(const Field& f);
Field inverse(const Field& f);
/// Copy in spectral representation (transforms if needed).
Field to_spectral(const Field& f);
/// Copy in physical representation (transforms if needed).
Field to_physical(const Field& f);
VecField to_spectral(const VecField& v);
VecField to_physical(const VecField& v);

/// Generic diagonal multiplier: out_k = symbol(k) * in_k. Result is spectral.
Field apply_symbol(const Field& f, const std::function<cplx(const WaveIndex&)>& symbol);

/// Lambda^s f. Zero mode is mapped to 0 for s != 0. For s < 0 the mean must
/// vanish to within kZeroMeanTol * ||f||_{L2}.
Field lambda_pow(const Field& f, double s);

Field partial(const Field& f, int axis);
VecField gradient(const Field& f);
Field divergence(const VecField& v);
Field laplacian(const Field& f);
/// grad(div v).
VecField grad_div(const VecField& v);
/// Full velocity gradient, entry [i][j] = d_i v_j.
std::array<VecField, 3> gradient_tensor(const VecField& v);
/// Symmetric gradient D = (grad v + grad v^T) / 2, components xx, yy, zz, xy, xz, yz.
std::array<Field, 6> sym_gradient(const VecField& v);
/// Hessian d_i d_j f, components xx, yy, zz, xy, xz, yz.
std::array<Field, 6> hessian(const Field& f);

/// Zeroes modes outside the two-thirds mask. Result in the input's representation.
Field dealias(const Field& f);
void dealias_in_place(Field& spectral_field);

/// Mean value of the field (zero mode).
double mean(const Field& f);
/// Same field with its zero mode removed.
Field remove_mean(const Field& f);

/// ||f||_{L2} via Parseval (spectral) or the equal-weight quadrature (physical).
double l2_norm(const Field& f);
double l2_norm_sq(const Field& f);
double l2_norm_sq(const VecField& v);
/// Integral of f g over the box.
double inner_product(const Field& f, const Field& g);
/// sum_k w(k) |c_k|^2 L^3 over the full mode set.
double weighted_energy(const Field& f, const std::function<double(const WaveIndex&)>& weight);

/// Largest |c_k - conj(c_{-k})| over the self-conjugate planes of the half spectrum.
double hermitian_defect(const Field& f);

double min_value(const Field& f);
double max_value(const Field& f);
double max_abs(const Field& f);

}  // namespace nsdecay
