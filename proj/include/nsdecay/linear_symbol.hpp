#pragma once

#include <array>

#include <Eigen/Dense>

#include "nsdecay/models.hpp"

namespace nsdecay {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Matrix M(xi) of the linearized system d/dt (a, u1, u2, u3[, theta])^ = M (a, u[, theta])^
/// at frequency xi (= k / L). 4x4 for the isentropic model, 5x5 for the full one.
CMatrix linear_symbol(const std::array<double, 3>& xi, const ModelParams& params);

/// Acoustic-diffusive block acting on (a, u_L[, theta]) with u_L = (xi/|xi|) . u,
/// at modulus rho = |2 pi xi|.
CMatrix longitudinal_block(double rho, const ModelParams& params);

/// Decay rate of each transverse velocity component: -mu rho^2.
inline double transverse_rate(double rho, const ModelParams& params) { return -params.mu * rho * rho; }

/// Number of longitudinal unknowns: 2 (a, u_L) or 3 (a, u_L, theta).
inline int longitudinal_size(const ModelParams& params) { return params.model == ModelKind::fcns ? 3 : 2; }

}  // namespace nsdecay
