#pragma once

#include <vector>

#include "nsdecay/linear_symbol.hpp"
#include "nsdecay/matrix_exp.hpp"

namespace nsdecay {

/// exp(M dt), dt phi1(M dt), dt phi2(M dt) for one |k|^2 shell.
struct ShellWeights {
    CMatrix exp;   ///< longitudinal block
    CMatrix phi1;
    CMatrix phi2;
    double t_exp = 1.0;   ///< transverse scalar factors
    double t_phi1 = 0.0;
    double t_phi2 = 0.0;
};

enum class PropagatorPart { exp, phi1, phi2 };

/// Per-mode linear propagators for a fixed (grid, params, dt). The symbol depends
/// on xi only through |xi|, so weights are stored per integer shell |k|^2 and
/// only for shells that survive dealiasing.
class PropagatorCache {
public:
    PropagatorCache(GridPtr grid, const ModelParams& params, double dt);

    double dt() const noexcept { return dt_; }
    const ModelParams& params() const noexcept { return params_; }
    const GridPtr& grid() const noexcept { return grid_; }
    bool matches(const ModelParams& params, double dt) const noexcept;

    /// Weights of shell |k|^2 = k2; k2 must not exceed max_shell().
    const ShellWeights& shell(long long k2) const { return shells_.at(static_cast<std::size_t>(k2)); }
    long long max_shell() const noexcept { return static_cast<long long>(shells_.size()) - 1; }
    /// Shells whose longitudinal block needed the scaling-and-squaring fallback.
    std::size_t fallback_count() const noexcept { return fallbacks_; }

private:
    GridPtr grid_;
    ModelParams params_;
    double dt_;
    std::vector<ShellWeights> shells_;
    std::size_t fallbacks_ = 0;
};

PropagatorCache build_propagator(GridPtr grid, const ModelParams& params, double dt);

/// out = P in (accumulate == false) or out += P in, mode by mode, where P is
/// the selected part of the cached propagator. Modes outside the dealiasing
/// mask are set to zero. All fields spectral.
void apply_propagator(const PropagatorCache& cache, PropagatorPart part, const Field& a, const VecField& u,
                      const Field* theta, Field& out_a, VecField& out_u, Field* out_theta, bool accumulate);

}  // namespace nsdecay
