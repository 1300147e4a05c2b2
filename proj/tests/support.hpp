#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "nsdecay/models.hpp"
#include "nsdecay/spectral.hpp"

namespace testsupport {

using namespace nsdecay;

using Fn = std::function<double(double, double, double)>;

// Random low-mode trigonometric polynomial: sum of `terms` products of
// sin/cos of integer wavenumbers up to kmax, zero mean.
inline Fn random_trig(std::mt19937_64& gen, double L, int kmax, int terms, double amp) {
    std::uniform_int_distribution<int> kd(-kmax, kmax);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    struct Term {
        int kx, ky, kz;
        double c, s;
    };
    std::vector<Term> ts;
    while (static_cast<int>(ts.size()) < terms) {
        Term t{kd(gen), kd(gen), kd(gen), ud(gen), ud(gen)};
        if (t.kx == 0 && t.ky == 0 && t.kz == 0) continue;
        ts.push_back(t);
    }
    const double w = kTwoPi / L;
    return [ts, w, amp](double x, double y, double z) {
        double v = 0.0;
        for (const auto& t : ts) {
            const double ph = w * (t.kx * x + t.ky * y + t.kz * z);
            v += t.c * std::cos(ph) + t.s * std::sin(ph);
        }
        return amp * v;
    };
}

inline Field sample(GridPtr g, const Fn& f) { return Field::from_function(g, f); }

// Random spectral state on modes |k_i| <= kmax with the given amplitude.
inline State random_state(GridPtr g, std::mt19937_64& gen, ModelKind model, double amp, int kmax = 2) {
    const double L = g->box_length();
    State s;
    s.a = to_spectral(sample(g, random_trig(gen, L, kmax, 4, amp)));
    for (int i = 0; i < 3; ++i) s.u[i] = to_spectral(sample(g, random_trig(gen, L, kmax, 4, amp)));
    if (model == ModelKind::fcns) s.theta = to_spectral(sample(g, random_trig(gen, L, kmax, 4, amp)));
    return s;
}

// Largest pointwise difference of two fields.
inline double max_diff(const Field& a, const Field& b) {
    const Field pa = to_physical(a);
    const Field pb = to_physical(b);
    double m = 0.0;
    for (std::size_t i = 0; i < pa.values().size(); ++i) m = std::max(m, std::abs(pa.values()[i] - pb.values()[i]));
    return m;
}

// Fourth-order central differences of a function of three variables.
inline double d1(const Fn& f, int axis, double x, double y, double z, double h = 1e-3) {
    auto at = [&](double s) {
        double p[3] = {x, y, z};
        p[axis] += s;
        return f(p[0], p[1], p[2]);
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

inline double d2(const Fn& f, int i, int j, double x, double y, double z, double h = 1e-3) {
    Fn fi = [&f, i, h](double a, double b, double c) { return d1(f, i, a, b, c, h); };
    return d1(fi, j, x, y, z, h);
}

}  // namespace testsupport
