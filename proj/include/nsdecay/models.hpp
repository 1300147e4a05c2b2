#pragma once

#include <optional>
#include <string>

#include "nsdecay/field.hpp"

namespace nsdecay {

enum class ModelKind { icns, fcns };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/// Viscosities and adiabatic exponent of the perturbation systems.
struct ModelParams {
    double mu = 1.0;        ///< shear viscosity
    double lambda_v = 0.0;  ///< second viscosity
    double gamma = 1.0;     ///< adiabatic exponent (isentropic model only)
    ModelKind model = ModelKind::fcns;

    /// Throws InvalidArgument unless mu > 0, 2 mu + 3 lambda >= 0 and gamma >= 1.
    void validate() const;
    /// mu > lambda / 2, the regime assumed by the decay estimates.
    bool in_decay_regime() const noexcept { return mu > 0.5 * lambda_v; }
    /// Linearized pressure slope P'(1): gamma for the isentropic model, 1 for the full one.
    double pressure_slope() const noexcept { return model == ModelKind::icns ? gamma : 1.0; }
    /// Bulk diffusion coefficient of longitudinal velocity, 2 mu + lambda.
    double longitudinal_viscosity() const noexcept { return 2.0 * mu + lambda_v; }
};

/// Perturbation (a, u, theta) = (rho - 1, u, T - 1) at time t. theta is empty
/// for the isentropic model.
struct State {
    Field a;
    VecField u;
    std::optional<Field> theta;
    double t = 0.0;

    GridPtr grid() const { return a.grid_ptr(); }
};

/// Right-hand side contributions (da, du, dtheta), spectral and dealiased.
struct Tendency {
    Field da;
    VecField du;
    std::optional<Field> dtheta;
};

State zero_state(GridPtr grid, ModelKind model);
/// Spectral, dealiased copy.
State to_spectral(const State& s);

/// h(a) = a / (1 + a). Throws DensityNonpositive if min(1 + a) <= 0.
Field h_of_a(const Field& a);
/// g(a) = 1 / (1 + a). Throws DensityNonpositive if min(1 + a) <= 0.
Field g_of_a(const Field& a);
/// gamma (1 + a)^(gamma - 2) - gamma, the velocity-form pressure nonlinearity.
Field pressure_nonlinearity(const Field& a, double gamma);

/// Nonlinear terms together with the pointwise extrema seen while building them.
struct NonlinearEval {
    Tendency tendency;
    double max_speed = 0.0;
    double min_density = 1.0;
    double min_temperature = 1.0;
};

/// Evaluates S1, S2, S3 (full model) or the velocity-form isentropic terms.
/// Throws DensityNonpositive / TemperatureNonpositive on loss of positivity.
NonlinearEval evaluate_nonlinear(const State& state, const ModelParams& params);
Tendency nonlinear_fcns(const State& state, const ModelParams& params);
Tendency nonlinear_icns(const State& state, const ModelParams& params);

/// Linear part of the right-hand side, spectral.
Tendency linear_tendency(const State& state, const ModelParams& params);

/// u_dot = du/dt + (u . grad) u, with dudt the full time derivative of u.
VecField material_derivative(const State& state, const VecField& dudt);

/// Integral of H(rho | 1): rho ln rho - rho + 1 for gamma = 1,
/// (rho^gamma - 1 - gamma (rho - 1)) / (gamma - 1) otherwise.
double relative_entropy(const Field& a, double gamma);

/// Throws DensityNonpositive / TemperatureNonpositive if the state left the no-vacuum regime.
void check_positivity(const State& state);

}  // namespace nsdecay
