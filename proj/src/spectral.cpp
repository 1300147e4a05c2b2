#include "nsdecay/spectral.hpp"

#include <cmath>
#include <string>

#include "fft.hpp"
#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"

namespace nsdecay {

namespace {

constexpr std::array<std::array<int, 2>, 6> kSymPairs{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

int component(const WaveIndex& w, int axis) {
    return axis == 0 ? w.kx : (axis == 1 ? w.ky : w.kz);
}

}  // namespace

Field forward(const Field& f) {
    if (!f.is_physical()) throw RepresentationMismatch("forward() expects a physical field");
    Field out = Field::zeros(f.grid_ptr(), Representation::spectral);
    const auto& g = f.grid();
    auto modes = out.modes();
    g.plans().forward(f.values().data(), modes.data());
    const double scale = 1.0 / static_cast<double>(g.physical_size());
    kernels::for_each_index(modes.size(), [&](std::size_t i) { modes[i] *= scale; });
    return out;
}

Field inverse(const Field& f) {
    if (!f.is_spectral()) throw RepresentationMismatch("inverse() expects a spectral field");
    Field out = Field::zeros(f.grid_ptr(), Representation::physical);
    std::vector<cplx> scratch(f.modes().begin(), f.modes().end());
    f.grid().plans().inverse(scratch.data(), out.values().data());
    return out;
}

Field to_spectral(const Field& f) { return f.is_spectral() ? f : forward(f); }
Field to_physical(const Field& f) { return f.is_physical() ? f : inverse(f); }

VecField to_spectral(const VecField& v) { return {to_spectral(v[0]), to_spectral(v[1]), to_spectral(v[2])}; }
VecField to_physical(const VecField& v) { return {to_physical(v[0]), to_physical(v[1]), to_physical(v[2])}; }

Field apply_symbol(const Field& f, const std::function<cplx(const WaveIndex&)>& symbol) {
    Field out = to_spectral(f);
    const auto& g = out.grid();
    auto modes = out.modes();
    kernels::for_each_index(modes.size(), [&](std::size_t i) { modes[i] *= symbol(g.wave_index(i)); });
    return out;
}

Field lambda_pow(const Field& f, double s) {
    Field out = to_spectral(f);
    auto modes = out.modes();
    if (s == 0.0) return out;
    if (s < 0.0) {
        const double norm = l2_norm(out);
        const double mean_norm = std::abs(modes[0]) * std::sqrt(out.grid().volume());
        if (mean_norm > kZeroMeanTol * norm)
            throw NegativePowerOnNonzeroMean("Lambda^" + std::to_string(s) +
                                             " applied to a field with nonzero mean");
    }
    const auto& g = out.grid();
    const double inv_l2 = 1.0 / (g.box_length() * g.box_length());
    kernels::for_each_index(modes.size(), [&](std::size_t i) {
        const long long k2 = g.wave_index(i).norm2();
        modes[i] = k2 == 0 ? cplx{} : modes[i] * std::pow(static_cast<double>(k2) * inv_l2, 0.5 * s);
    });
    return out;
}

Field partial(const Field& f, int axis) {
    if (axis < 0 || axis > 2) throw InvalidArgument("axis must be 0, 1 or 2");
    Field out = to_spectral(f);
    const auto& g = out.grid();
    const double c = kTwoPi / g.box_length();
    auto modes = out.modes();
    kernels::for_each_index(modes.size(), [&](std::size_t i) {
        const int k = component(g.wave_index(i), axis);
        modes[i] = g.is_nyquist(k) ? cplx{} : modes[i] * cplx{0.0, c * k};
    });
    return out;
}

VecField gradient(const Field& f) {
    const Field fs = to_spectral(f);
    return {partial(fs, 0), partial(fs, 1), partial(fs, 2)};
}

Field divergence(const VecField& v) {
    Field out = partial(v[0], 0);
    out += partial(v[1], 1);
    out += partial(v[2], 2);
    return out;
}

Field laplacian(const Field& f) {
    const auto& g = f.grid();
    const double c = kTwoPi / g.box_length();
    return apply_symbol(f, [c](const WaveIndex& w) { return cplx{-c * c * static_cast<double>(w.norm2()), 0.0}; });
}

VecField grad_div(const VecField& v) { return gradient(divergence(v)); }

std::array<VecField, 3> gradient_tensor(const VecField& v) {
    std::array<VecField, 3> out;
    const VecField vs = to_spectral(v);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = partial(vs[j], i);
    return out;
}

std::array<Field, 6> sym_gradient(const VecField& v) {
    const auto grad = gradient_tensor(v);
    std::array<Field, 6> out;
    for (std::size_t c = 0; c < 6; ++c) {
        const auto [i, j] = kSymPairs[c];
        out[c] = grad[i][j];
        if (i != j) {
            out[c] += grad[j][i];
            out[c] *= 0.5;
        }
    }
    return out;
}

std::array<Field, 6> hessian(const Field& f) {
    const VecField grad = gradient(f);
    std::array<Field, 6> out;
    for (std::size_t c = 0; c < 6; ++c) {
        const auto [i, j] = kSymPairs[c];
        out[c] = partial(grad[j], i);
    }
    return out;
}

void dealias_in_place(Field& f) {
    auto modes = f.modes();
    const auto& g = f.grid();
    kernels::for_each_index(modes.size(), [&](std::size_t i) {
        if (!g.dealias_keep(i)) modes[i] = cplx{};
    });
}

Field dealias(const Field& f) {
    Field out = to_spectral(f);
    dealias_in_place(out);
    return f.is_physical() ? inverse(out) : out;
}

double mean(const Field& f) {
    if (f.is_spectral()) return f.modes()[0].real();
    const auto vals = f.values();
    return kernels::sum_over(vals.size(), [&](std::size_t i) { return vals[i]; }) /
           static_cast<double>(vals.size());
}

Field remove_mean(const Field& f) {
    Field out = f;
    if (out.is_spectral()) {
        out.modes()[0] = cplx{};
    } else {
        const double m = mean(out);
        auto vals = out.values();
        kernels::for_each_index(vals.size(), [&](std::size_t i) { vals[i] -= m; });
    }
    return out;
}

double l2_norm_sq(const Field& f) {
    const auto& g = f.grid();
    if (f.is_spectral()) {
        const auto modes = f.modes();
        return g.volume() * kernels::sum_over_modes(g, [&](std::size_t i) { return std::norm(modes[i]); });
    }
    const auto vals = f.values();
    const double cell = g.dx() * g.dx() * g.dx();
    return cell * kernels::sum_over(vals.size(), [&](std::size_t i) { return vals[i] * vals[i]; });
}

double l2_norm(const Field& f) { return std::sqrt(l2_norm_sq(f)); }

double l2_norm_sq(const VecField& v) { return l2_norm_sq(v[0]) + l2_norm_sq(v[1]) + l2_norm_sq(v[2]); }

double inner_product(const Field& f, const Field& g) {
    const auto& grid = f.grid();
    if (f.is_spectral() && g.is_spectral()) {
        const auto a = f.modes();
        const auto b = g.modes();
        return grid.volume() *
               kernels::sum_over_modes(grid, [&](std::size_t i) { return (a[i] * std::conj(b[i])).real(); });
    }
    const Field fp = to_physical(f);
    const Field gp = to_physical(g);
    const auto a = fp.values();
    const auto b = gp.values();
    const double cell = grid.dx() * grid.dx() * grid.dx();
    return cell * kernels::sum_over(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

double weighted_energy(const Field& f, const std::function<double(const WaveIndex&)>& weight) {
    const Field fs = to_spectral(f);
    const auto& g = fs.grid();
    const auto modes = fs.modes();
    return g.volume() *
           kernels::sum_over_modes(g, [&](std::size_t i) { return weight(g.wave_index(i)) * std::norm(modes[i]); });
}

double hermitian_defect(const Field& f) {
    if (!f.is_spectral()) throw RepresentationMismatch("hermitian_defect() expects a spectral field");
    const auto& g = f.grid();
    const auto modes = f.modes();
    const int n = g.n();
    double worst = 0.0;
    for (int kz : {0, n / 2}) {
        for (int ix = 0; ix < n; ++ix) {
            for (int iy = 0; iy < n; ++iy) {
                const std::size_t a = (static_cast<std::size_t>(ix) * n + iy) * g.nz_spectral() + kz;
                const std::size_t b =
                    (static_cast<std::size_t>((n - ix) % n) * n + (n - iy) % n) * g.nz_spectral() + kz;
                worst = std::max(worst, std::abs(modes[a] - std::conj(modes[b])));
            }
        }
    }
    return worst;
}

double min_value(const Field& f) {
    const Field p = to_physical(f);
    const auto v = p.values();
    return kernels::min_over(v.size(), [&](std::size_t i) { return v[i]; });
}

double max_value(const Field& f) {
    const Field p = to_physical(f);
    const auto v = p.values();
    return kernels::max_over(v.size(), [&](std::size_t i) { return v[i]; });
}

double max_abs(const Field& f) {
    const Field p = to_physical(f);
    const auto v = p.values();
    return kernels::max_over(v.size(), [&](std::size_t i) { return std::abs(v[i]); });
}

}  // namespace nsdecay
