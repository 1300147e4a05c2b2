#include "nsdecay/initial_data.hpp"

#include <cmath>
#include <cstdio>

#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"
#include "nsdecay/rng.hpp"
#include "nsdecay/spectral.hpp"

namespace nsdecay {

namespace {

enum Stream : std::uint64_t { kStreamA = 0, kStreamU0 = 1, kStreamTheta = 4 };

Field spectrum_component(const InitialDataSpec& spec, GridPtr grid, std::uint64_t seed, std::uint64_t stream) {
    Field f = Field::zeros(grid, Representation::spectral);
    auto modes = f.modes();
    const auto& g = *grid;
    const double c = kTwoPi / g.box_length();
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(g.n());
    kernels::for_each_index(modes.size(), [&](std::size_t i) {
        const WaveIndex w = g.wave_index(i);
        if (w.norm2() == 0 || !g.dealias_keep(w)) return;
        const double rho = c * std::sqrt(static_cast<double>(w.norm2()));
        const std::uint64_t id = (static_cast<std::uint64_t>(w.kx + g.n()) * span + static_cast<std::uint64_t>(w.ky + g.n())) * span +
                                 static_cast<std::uint64_t>(w.kz + g.n());
        modes[i] = std::pow(rho, spec.sigma) * std::exp(-rho * rho / (spec.cutoff * spec.cutoff)) *
                   rng::unit_phase(seed, stream, id);
    });
    // Round trip enforces Hermitian symmetry on the self-conjugate planes.
    Field out = forward(inverse(f));
    dealias_in_place(out);
    out.modes()[0] = cplx{};
    return out;
}

Field manufactured_component(GridPtr grid, int which) {
    const double k = kTwoPi / grid->box_length();
    switch (which) {
        case 0:
            return to_spectral(Field::from_function(grid, [k](double x, double y, double z) {
                return std::sin(k * x) * std::cos(k * y) + 0.5 * std::cos(k * (y + z));
            }));
        case 1:
            return to_spectral(Field::from_function(grid, [k](double, double y, double z) {
                return std::sin(k * y) + 0.5 * std::cos(k * z) * std::sin(2.0 * k * y);
            }));
        case 2:
            return to_spectral(Field::from_function(grid, [k](double x, double, double z) {
                return std::sin(k * z) * std::cos(k * x) + 0.3 * std::sin(k * x);
            }));
        case 3:
            return to_spectral(Field::from_function(grid, [k](double x, double y, double) {
                return std::cos(k * x) - 0.4 * std::sin(k * (x + y));
            }));
        default:
            return to_spectral(Field::from_function(grid, [k](double x, double, double z) {
                return std::cos(k * x) * std::cos(k * z);
            }));
    }
}

Field scaled(Field f, double amplitude) {
    const double r = rms(f);
    if (amplitude == 0.0 || r == 0.0) return Field::zeros(f.grid_ptr(), Representation::spectral);
    f *= amplitude / r;
    return f;
}

// Largest amplitude keeping 1 + f > floor, using linearity of f in its amplitude.
void check_floor(const Field& f, double amplitude, const char* what) {
    if (amplitude == 0.0) return;
    const double lowest = min_value(f);
    if (1.0 + lowest > kInitialPositivityFloor) return;
    const double admissible = amplitude * (1.0 - kInitialPositivityFloor) / (-lowest);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s amplitude %.6g gives min(1+%s) = %.6g <= %.2g; largest admissible amplitude %.6g",
                  what, amplitude, what, 1.0 + lowest, kInitialPositivityFloor, admissible);
    throw PositivityUnachievable(buf, admissible);
}

}  // namespace

double rms(const Field& f) { return l2_norm(f) / std::sqrt(f.grid().volume()); }

State synthesize_initial_data(const InitialDataSpec& spec, GridPtr grid, ModelKind model, std::uint64_t seed) {
    if (!(spec.amp_a >= 0.0 && spec.amp_u >= 0.0 && spec.amp_theta >= 0.0))
        throw InvalidArgument("amplitudes must be nonnegative");
    const bool spectrum = spec.kind == InitKind::spectrum;
    const auto component = [&](std::uint64_t stream, int which) {
        return spectrum ? spectrum_component(spec, grid, seed, stream) : dealias(manufactured_component(grid, which));
    };
    State s;
    s.a = scaled(component(kStreamA, 0), spec.amp_a);
    for (int i = 0; i < 3; ++i) s.u[i] = scaled(component(kStreamU0 + i, 1 + i), spec.amp_u);
    if (model == ModelKind::fcns) s.theta = scaled(component(kStreamTheta, 4), spec.amp_theta);
    check_floor(s.a, spec.amp_a, "a");
    if (s.theta) check_floor(*s.theta, spec.amp_theta, "theta");
    return s;
}

}  // namespace nsdecay
