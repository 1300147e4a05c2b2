#pragma once

#include "nsdecay/models.hpp"
#include "nsdecay/propagator.hpp"

namespace nsdecay {

/// Advective CFL factor: dt <= kCflFactor * dx / max|u|.
inline constexpr double kCflFactor = 0.5;

struct StepOptions {
    /// Drop the nonlinear terms; the step then reduces to the cached exp(M dt).
    bool linear_only = false;
    /// Check the advective CFL bound before stepping.
    bool check_cfl = true;
};

struct StepReport {
    double max_speed = 0.0;
    double min_density = 1.0;
    double min_temperature = 1.0;
};

/// One ETD2RK step (Cox-Matthews):
///   A       = e^{M dt} U + dt phi1(M dt) N(U)
///   U_{n+1} = A + dt phi2(M dt) (N(A) - N(U))
/// Input may be in any representation; the result is spectral and dealiased.
/// Loss of positivity or a CFL violation raises RunAborted with the state time.
State step(const State& state, const PropagatorCache& cache, const StepOptions& options = {},
           StepReport* report = nullptr);

/// Advances `steps` steps of size cache.dt().
State advance(State state, const PropagatorCache& cache, long long steps, const StepOptions& options = {});

}  // namespace nsdecay
