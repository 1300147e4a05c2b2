#include "nsdecay/inequalities.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "nsdecay/diagnostics.hpp"
#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"
#include "nsdecay/rng.hpp"
#include "nsdecay/spectral.hpp"

namespace nsdecay {

namespace {

void require_zero_mean(const Field& fs) {
    const double mean_norm = std::abs(fs.modes()[0]) * std::sqrt(fs.grid().volume());
    if (mean_norm > kZeroMeanTol * l2_norm(fs))
        throw NegativePowerOnNonzeroMean("inequality check needs a zero-mean field");
}

// L^3 sum_k |2 pi xi|^(2 e) |c_k|^2 over k != 0.
double eta_moment(const Field& fs, double e) {
    const double c2 = (kTwoPi / fs.grid().box_length()) * (kTwoPi / fs.grid().box_length());
    return weighted_energy(fs, [&](const WaveIndex& w) {
        const long long k2 = w.norm2();
        return k2 == 0 ? 0.0 : std::pow(c2 * static_cast<double>(k2), e);
    });
}

InequalityReport single(const std::string& name, double ratio, double limit) {
    InequalityReport r;
    r.name = name;
    r.limit = limit;
    r.add(ratio);
    return r;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace

void InequalityReport::add(double ratio) {
    ratios.push_back(ratio);
    ++samples;
    if (samples == 1 || ratio > max_ratio) max_ratio = ratio;
    if (!(std::isfinite(ratio) && ratio > 0.0)) pass = false;
    if (limit > 0.0 && !(ratio <= limit)) pass = false;
}

void InequalityReport::merge(const InequalityReport& other) {
    if (samples == 0) {
        name = other.name;
        limit = other.limit;
    }
    for (double r : other.ratios) add(r);
}

Field random_band_limited(GridPtr grid, std::uint64_t seed, std::uint64_t sample, int kmax) {
    if (kmax <= 0) kmax = grid->n() / 4;
    Field f = Field::zeros(grid, Representation::spectral);
    auto modes = f.modes();
    const double beta = 2.0 * rng::uniform(seed, 2 * sample + 1, 0);
    const long long kmax2 = static_cast<long long>(kmax) * kmax;
    const auto& g = *grid;
    const std::uint64_t n = static_cast<std::uint64_t>(g.n());
    kernels::for_each_index(modes.size(), [&](std::size_t i) {
        const WaveIndex w = g.wave_index(i);
        const long long k2 = w.norm2();
        if (k2 == 0 || k2 > kmax2) return;
        const std::uint64_t id = (static_cast<std::uint64_t>(w.kx + g.n()) * 2 * n + static_cast<std::uint64_t>(w.ky + g.n())) *
                                     2 * n + static_cast<std::uint64_t>(w.kz + g.n());
        const double amp = std::pow(static_cast<double>(k2), -0.5 * beta);
        modes[i] = amp * cplx{rng::normal(seed, 2 * sample, 2 * id), rng::normal(seed, 2 * sample, 2 * id + 1)};
    });
    // Round trip enforces Hermitian symmetry on the self-conjugate planes.
    return forward(inverse(f));
}

double lp_norm(const Field& f, double p) {
    const Field fp = to_physical(f);
    if (std::isinf(p)) return max_abs(fp);
    if (!(p >= 1.0)) throw InvalidArgument("lp_norm needs p >= 1");
    const auto v = fp.values();
    const auto& g = fp.grid();
    const double cell = g.dx() * g.dx() * g.dx();
    const double s = kernels::sum_over(v.size(), [&](std::size_t i) { return std::pow(std::abs(v[i]), p); });
    return std::pow(cell * s, 1.0 / p);
}

Field gradient_magnitude(const Field& f, int k) {
    if (k == 0) {
        Field out = to_physical(f);
        for (double& x : out.values()) x = std::abs(x);
        return out;
    }
    std::vector<std::pair<Field, double>> parts;
    if (k == 1) {
        for (auto& c : gradient(f)) parts.emplace_back(to_physical(c), 1.0);
    } else if (k == 2) {
        const auto h = hessian(f);
        for (std::size_t c = 0; c < 6; ++c) parts.emplace_back(to_physical(h[c]), c < 3 ? 1.0 : 2.0);
    } else {
        throw InvalidArgument("gradient_magnitude supports k in {0,1,2}");
    }
    Field out = Field::zeros(f.grid_ptr(), Representation::physical);
    auto o = out.values();
    for (const auto& [comp, w] : parts) {
        const auto v = comp.values();
        kernels::for_each_index(o.size(), [&](std::size_t i) { o[i] += w * v[i] * v[i]; });
    }
    kernels::for_each_index(o.size(), [&](std::size_t i) { o[i] = std::sqrt(o[i]); });
    return out;
}

InequalityReport check_interp(const Field& f, int l, double s) {
    if (l < 0 || l > 2) throw InvalidArgument("interpolation check needs l in {0,1,2}");
    if (!(s > 0.0 && s < 1.5)) throw InvalidArgument("interpolation check needs s in (0, 3/2)");
    const Field fs = to_spectral(f);
    require_zero_mean(fs);
    const double alpha = 1.0 / (l + 1 + s);
    const double lhs = std::sqrt(eta_moment(fs, l));
    const double rhs = std::pow(std::sqrt(eta_moment(fs, l + 1)), 1.0 - alpha) * std::pow(std::sqrt(eta_moment(fs, -s)), alpha);
    return single("interp_l" + std::to_string(l) + "_s" + fmt(s), lhs / rhs, 1.0 + 1e-10);
}

double gn_exponent(int alpha, int m, int l, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidArgument("GN needs theta in [0, 1]");
    if (alpha < 0 || m < 0 || l < 0 || alpha > 2 || m > 3 || l > 3) throw InvalidArgument("GN indices out of range");
    const double inv_p = alpha / 3.0 + (0.5 - m / 3.0) * (1.0 - theta) + (0.5 - l / 3.0) * theta;
    if (!(inv_p > 0.0 && inv_p <= 0.5)) throw InvalidArgument("GN exponent p must lie in [2, infinity)");
    return 1.0 / inv_p;
}

InequalityReport check_gn(const Field& f, int alpha, int m, int l, double theta) {
    const double p = gn_exponent(alpha, m, l, theta);
    const double lhs = lp_norm(gradient_magnitude(f, alpha), p);
    const double rhs = std::pow(hk_norm(f, m), 1.0 - theta) * std::pow(hk_norm(f, l), theta);
    return single("gn_a" + std::to_string(alpha) + "_m" + std::to_string(m) + "_l" + std::to_string(l) + "_th" + fmt(theta),
                  lhs / rhs, 0.0);
}

double hls_exponent(double s, double p) {
    if (!(s > 0.0 && s < 3.0)) throw InvalidArgument("HLS needs s in (0, 3)");
    if (!(p > 1.0)) throw InvalidArgument("HLS needs p > 1");
    const double inv_q = 1.0 / p - s / 3.0;
    if (!(inv_q > 0.0)) throw InvalidArgument("HLS needs 1 < p < q < infinity");
    return 1.0 / inv_q;
}

InequalityReport check_hls(const Field& f, double s, double p) {
    const double q = hls_exponent(s, p);
    const Field fs = to_spectral(f);
    require_zero_mean(fs);
    const double lhs = lp_norm(lambda_pow(fs, -s), q);
    return single("hls_s" + fmt(s) + "_p" + fmt(p), lhs / lp_norm(fs, p), 0.0);
}

InequalityReport check_hausdorff_young(const Field& f, double p) {
    if (!(p >= 1.0 && p <= 2.0)) throw InvalidArgument("Hausdorff-Young needs p in [1, 2]");
    const Field fs = to_spectral(f);
    const auto& g = fs.grid();
    const auto modes = fs.modes();
    const double vol = g.volume();
    double lhs = 0.0;
    if (p == 1.0) {
        lhs = vol * kernels::max_over(modes.size(), [&](std::size_t i) { return std::abs(modes[i]); });
    } else {
        const double pp = p / (p - 1.0);
        const double s = kernels::sum_over_modes(g, [&](std::size_t i) { return std::pow(vol * std::abs(modes[i]), pp); });
        lhs = std::pow(s / vol, 1.0 / pp);
    }
    return single("hausdorff_young_p" + fmt(p), lhs / lp_norm(fs, p), 1.05);
}

std::vector<InequalityReport> run_inequality_battery(std::uint64_t seed, int samples) {
    const GridPtr grid = make_grid(32, 1.0);
    std::vector<InequalityReport> reports;
    auto record = [&reports](const InequalityReport& r) {
        for (auto& existing : reports) {
            if (existing.name == r.name) {
                existing.merge(r);
                return;
            }
        }
        reports.push_back(r);
    };
    for (int i = 0; i < samples; ++i) {
        const Field f = random_band_limited(grid, seed, static_cast<std::uint64_t>(i));
        for (int l = 0; l <= 2; ++l)
            for (double s : kNegativeIndices) record(check_interp(f, l, s));
        record(check_gn(f, 1, 1, 1, 0.5));
        record(check_gn(f, 0, 0, 1, 0.5));
        record(check_gn(f, 0, 0, 1, 0.75));
        record(check_gn(f, 0, 0, 1, 1.0));
        record(check_hls(f, 1.0, 1.2));
        record(check_hls(f, 0.5, 1.5));
        record(check_hls(f, 1.0, 1.5));
        for (double p : {1.0, 4.0 / 3.0, 1.5, 2.0}) record(check_hausdorff_young(f, p));
    }
    return reports;
}

}  // namespace nsdecay
