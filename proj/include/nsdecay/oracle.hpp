#pragma once

#include <string>
#include <vector>

#include "nsdecay/models.hpp"

// Whole-space decay curves of the linearized systems, by radial quadrature
// over rho = |2 pi xi|.

namespace nsdecay {

/// Initial spectrum amp^2 rho^(2 sigma) exp(-2 rho^2 / cutoff^2), split over
/// the linear components by the weights below.
struct SpectrumProfile {
    double sigma = 0.0;
    double cutoff = 1.0;
    double amplitude = 1.0;
    double w_a = 0.0;
    double w_long = 0.0;   ///< longitudinal velocity
    double w_trans = 1.0;  ///< transverse velocity (both components together)
    double w_theta = 0.0;  ///< ignored by the isentropic model

    /// Throws InvalidArgument on amplitude <= 0, cutoff <= 0 or sigma <= -3/2.
    void validate() const;
    /// Whether the profile lies in H^{-s}-dot: sigma > s - 3/2.
    bool in_negative_space(double s) const noexcept { return sigma > s - 1.5; }
};

/// sigma just inside H^{-s}-dot: s - 3/2 + 0.01.
double borderline_sigma(double s);
/// Heuristic L^p-like profile exponent 3/p - 3 (sigma = 0 for L^1 data).
double sigma_for_lp(double p);

/// Squared norm of rho^order e^{M t} w at each time:
///   int_0^inf rho^(2 order) (|e^{M t} w_L|^2 + e^{-2 mu rho^2 t} w_T^2) P(rho) 4 pi rho^2 drho.
/// order = k >= 0 gives ||grad^k .||^2, order = -s gives ||Lambda^{-s} .||^2 up to (2 pi)^{2s}.
/// Throws QuadratureNonconvergence if the estimated relative error exceeds 1e-8.
std::vector<double> linear_decay_curve(const SpectrumProfile& profile, const ModelParams& params, double order,
                                       const std::vector<double>& times);

/// Closed form of the pure-diffusion curve with unit amplitude and weight:
///   2 pi Gamma(sigma + k + 3/2) (2 (cutoff^-2 + mu t))^-(sigma + k + 3/2).
double heat_closed_form(double sigma, double mu, double cutoff, double k, double t);

/// Largest real part over the longitudinal eigenvalues and the transverse rate at rho.
double max_real_eigenvalue(double rho, const ModelParams& params);

/// Column names of the oracle CSV: a subset of the diagnostics schema.
std::vector<std::string> oracle_columns();

/// One row per time: t followed by norms (not squared) matching oracle_columns().
/// Negative-index columns use Lambda = |xi|, i.e. divide rho^-s by (2 pi)^-s.
std::vector<std::vector<double>> oracle_table(const SpectrumProfile& profile, const ModelParams& params,
                                              const std::vector<double>& times);

/// n log-spaced times from t0 to t1 inclusive.
std::vector<double> log_times(double t0, double t1, int n);

}  // namespace nsdecay
