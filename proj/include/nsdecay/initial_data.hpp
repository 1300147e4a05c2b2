#pragma once

#include <cstdint>

#include "nsdecay/config.hpp"

namespace nsdecay {

/// Smallest admissible min(1 + a) and min(1 + theta) at t = 0.
inline constexpr double kInitialPositivityFloor = 0.5;

/// Real, zero-mean, dealiased initial state.
///
/// spectrum: coefficient modulus rho^sigma exp(-rho^2 / cutoff^2) (rho = |2 pi xi|)
/// with a keyed random phase per (component, mode), scaled so that each realized
/// component has the requested RMS. manufactured: fixed trigonometric fields with
/// the same RMS convention.
///
/// Throws PositivityUnachievable if min(1 + a) or min(1 + theta) <= 0.5; the error
/// carries the largest admissible amplitude for the offending component.
State synthesize_initial_data(const InitialDataSpec& spec, GridPtr grid, ModelKind model, std::uint64_t seed);

/// Root-mean-square of a field over the box, ||f|| / sqrt(L^3).
double rms(const Field& f);

}  // namespace nsdecay
