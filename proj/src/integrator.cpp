#include "nsdecay/integrator.hpp"

#include <string>

#include "nsdecay/errors.hpp"
#include "nsdecay/spectral.hpp"

namespace nsdecay {

namespace {

Tendency zero_tendency(const GridPtr& grid, bool full) {
    Tendency t;
    t.da = Field::zeros(grid, Representation::spectral);
    t.du = zeros_vec(grid, Representation::spectral);
    if (full) t.dtheta = Field::zeros(grid, Representation::spectral);
    return t;
}

NonlinearEval guarded_nonlinear(const State& s, const ModelParams& params, bool linear_only, double t_good) {
    try {
        if (linear_only) {
            NonlinearEval ev;
            ev.tendency = zero_tendency(s.grid(), params.model == ModelKind::fcns);
            return ev;
        }
        return evaluate_nonlinear(s, params);
    } catch (const DensityNonpositive& e) {
        throw RunAborted(RunAborted::Cause::density, t_good, e.what());
    } catch (const TemperatureNonpositive& e) {
        throw RunAborted(RunAborted::Cause::temperature, t_good, e.what());
    }
}

State blank_like(const State& s, bool full) {
    State out = zero_state(s.grid(), full ? ModelKind::fcns : ModelKind::icns);
    out.t = s.t;
    return out;
}

void propagate_into(const PropagatorCache& c, PropagatorPart part, const Field& a, const VecField& u,
                    const std::optional<Field>& th, State& out, bool accumulate) {
    apply_propagator(c, part, a, u, th ? &*th : nullptr, out.a, out.u, out.theta ? &*out.theta : nullptr,
                     accumulate);
}

}  // namespace

State step(const State& input, const PropagatorCache& cache, const StepOptions& options, StepReport* report) {
    const ModelParams& params = cache.params();
    const bool full = params.model == ModelKind::fcns;
    if (full != input.theta.has_value()) throw InvalidArgument("state does not match the propagator's model");
    if (input.grid() != cache.grid()) throw InvalidArgument("state and propagator live on different grids");

    const State s = to_spectral(input);
    const double dt = cache.dt();

    NonlinearEval n0 = guarded_nonlinear(s, params, options.linear_only, s.t);
    if (!options.linear_only) {
        if (options.check_cfl && n0.max_speed > 0.0) {
            const double limit = kCflFactor * s.grid()->dx() / n0.max_speed;
            if (dt > limit)
                throw RunAborted(RunAborted::Cause::cfl, s.t,
                                 "dt = " + std::to_string(dt) + " exceeds CFL limit " + std::to_string(limit));
        }
    }
    if (report) {
        report->max_speed = n0.max_speed;
        report->min_density = n0.min_density;
        report->min_temperature = n0.min_temperature;
    }

    // Predictor A = E U + Phi1 N0
    State pred = blank_like(s, full);
    propagate_into(cache, PropagatorPart::exp, s.a, s.u, s.theta, pred, false);
    const Tendency& t0 = n0.tendency;
    propagate_into(cache, PropagatorPart::phi1, t0.da, t0.du, t0.dtheta, pred, true);
    pred.t = s.t + dt;
    if (options.linear_only) return pred;

    NonlinearEval n1 = guarded_nonlinear(pred, params, false, s.t);
    Tendency diff = std::move(n1.tendency);
    diff.da -= t0.da;
    for (int i = 0; i < 3; ++i) diff.du[i] -= t0.du[i];
    if (full) *diff.dtheta -= *t0.dtheta;
    State out = pred;
    propagate_into(cache, PropagatorPart::phi2, diff.da, diff.du, diff.dtheta, out, true);
    out.t = s.t + dt;
    return out;
}

State advance(State state, const PropagatorCache& cache, long long steps, const StepOptions& options) {
    const double t0 = state.t;
    for (long long i = 0; i < steps; ++i) {
        state = step(state, cache, options);
        state.t = t0 + static_cast<double>(i + 1) * cache.dt();
    }
    return state;
}

}  // namespace nsdecay
