#include "nsdecay/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "nsdecay/errors.hpp"
#include "nsdecay/spectral.hpp"

namespace nsdecay {

namespace {

std::vector<std::string> build_schema() {
    std::vector<std::string> cols{"t", "mass", "mean_u", "mean_theta"};
    for (const char* level : {"l2", "grad", "hess"})
        for (const char* f : {"a", "u", "theta", "total"}) cols.push_back(std::string(level) + "_" + f);
    for (const char* f : {"a", "u", "theta"}) cols.push_back(std::string("h1_") + f);
    cols.push_back("l2_udot");
    for (double s : kNegativeIndices) {
        const std::string l = s_label(s);
        for (const char* f : {"a", "u", "theta", "udot", "total"}) cols.push_back(std::string("negs_") + f + "_" + l);
        cols.push_back("neg_energy_" + l);
    }
    for (const char* c : {"E1sq", "E1_lower", "E1_upper", "E2sq", "E2_lower", "E2_upper", "X1", "X2", "split_low",
                          "split_high", "split_residual", "rel_entropy", "min_density", "min_temperature"})
        cols.emplace_back(c);
    return cols;
}

double eta_scale(const SpectralGrid& g) { return kTwoPi / g.box_length(); }

// L^3 sum_k w(|2 pi xi|^2) |c_k|^2
template <class W>
double eta_weighted(const Field& f, W&& w) {
    const Field fs = to_spectral(f);
    const double c2 = eta_scale(fs.grid()) * eta_scale(fs.grid());
    return weighted_energy(fs, [&](const WaveIndex& k) { return w(c2 * static_cast<double>(k.norm2())); });
}

double sq(double x) { return x * x; }

double sum_sq(const VecField& v, int k) {
    double acc = 0.0;
    for (const auto& c : v) acc += sq(hk_norm(c, k));
    return acc;
}

}  // namespace

const std::vector<std::string>& diag_schema() {
    static const std::vector<std::string> schema = build_schema();
    return schema;
}

std::size_t diag_column(const std::string& name) {
    static const std::unordered_map<std::string, std::size_t> index = [] {
        std::unordered_map<std::string, std::size_t> m;
        const auto& s = diag_schema();
        for (std::size_t i = 0; i < s.size(); ++i) m.emplace(s[i], i);
        return m;
    }();
    const auto it = index.find(name);
    if (it == index.end()) throw SchemaError("unknown diagnostic column '" + name + "'");
    return it->second;
}

std::string s_label(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "s%g", s);
    return buf;
}

double sobolev_norm(const Field& f, double s) { return l2_norm(lambda_pow(f, s)); }

double sobolev_norm_fluctuation(const Field& f, double s) { return sobolev_norm(remove_mean(to_spectral(f)), s); }

double hk_norm(const Field& f, int k) {
    if (k < 0 || k > 3) throw InvalidArgument("hk_norm supports k in {0,1,2,3}");
    if (k == 0) return l2_norm(f);
    return std::sqrt(eta_weighted(f, [k](double e2) { return std::pow(e2, k); }));
}

double h_s_full(const Field& f, int k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += sq(hk_norm(f, j));
    return std::sqrt(acc);
}

double hk_norm(const VecField& v, int k) { return std::sqrt(sum_sq(v, k)); }

double h_s_full(const VecField& v, int k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += sum_sq(v, j);
    return std::sqrt(acc);
}

double cross_term(const Field& a, const VecField& u) {
    const Field a_hat = to_spectral(a);
    const VecField u_hat = to_spectral(u);
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Field dia = partial(a_hat, i);
        for (int j = 0; j < 3; ++j) acc += inner_product(partial(u_hat[j], i), partial(dia, j));
    }
    return acc;
}

EnergyValue energy_E1(const State& state, double delta0, double pressure_slope) {
    const double m = std::min(1.0, pressure_slope);
    if (!(pressure_slope > 0.0)) throw InvalidArgument("pressure slope must be positive");
    if (!(delta0 > 0.0 && delta0 < 0.5 * m)) throw InvalidArgument("delta0 must lie in (0, min(1, P'(1)) / 2)");
    EnergyValue e;
    const double grad_u = sum_sq(state.u, 1) + sum_sq(state.u, 2);
    const double grad_a = sq(hk_norm(state.a, 1)) + sq(hk_norm(state.a, 2));
    e.base = grad_u + pressure_slope * grad_a;
    e.cross = cross_term(state.a, state.u);
    e.value = e.base + 2.0 * delta0 * e.cross;
    e.lower = (1.0 - delta0 / m) * e.base;
    e.upper = (1.0 + delta0 / m) * e.base;
    return e;
}

EnergyValue energy_E2(const State& state, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
    EnergyValue e;
    e.base = sum_sq(state.u, 1) + sum_sq(state.u, 2) + sq(hk_norm(state.a, 1)) + sq(hk_norm(state.a, 2));
    if (state.theta) e.base += sq(hk_norm(*state.theta, 1)) + sq(hk_norm(*state.theta, 2));
    e.cross = cross_term(state.a, state.u);
    e.value = e.base + delta * e.cross;
    e.lower = (1.0 - 0.5 * delta) * e.base;
    e.upper = (1.0 + 0.5 * delta) * e.base;
    return e;
}

double functional_X1(const State& state, const VecField& udot) {
    return sq(h_s_full(state.u, 1)) + sq(h_s_full(state.a, 1)) + l2_norm_sq(to_spectral(udot));
}

double functional_X2(const State& state, const VecField& udot) {
    double x = functional_X1(state, udot);
    if (state.theta) x += sq(h_s_full(*state.theta, 1));
    return x;
}

NegativeEnergy neg_energy(const State& state, double s, const ModelParams& params, const VecField* udot) {
    if (!(s > 0.0 && s < 1.5)) throw InvalidArgument("negative index s must lie in (0, 3/2)");
    NegativeEnergy r;
    const Field a_hat = to_spectral(state.a);
    r.a = sobolev_norm(a_hat, -s);
    double u2 = 0.0;
    for (const auto& c : state.u) u2 += sq(sobolev_norm_fluctuation(c, -s));
    r.u = std::sqrt(u2);
    if (state.theta) r.theta = sobolev_norm_fluctuation(*state.theta, -s);
    if (udot) {
        double d2 = 0.0;
        for (const auto& c : *udot) d2 += sq(sobolev_norm_fluctuation(c, -s));
        r.udot = std::sqrt(d2);
    }
    r.total = std::sqrt(sq(r.a) + sq(r.u) + sq(r.theta));
    if (params.model == ModelKind::icns) {
        const Field a = inverse(a_hat);
        const auto av = a.values();
        double m2 = 0.0;
        for (const auto& c : state.u) {
            Field mom = to_physical(c);
            auto mv = mom.values();
            for (std::size_t i = 0; i < mv.size(); ++i) mv[i] *= 1.0 + av[i];
            m2 += sq(sobolev_norm_fluctuation(dealias(forward(mom)), -s));
        }
        r.energy = params.gamma * sq(r.a) + m2;
    } else {
        r.energy = sq(r.a) + sq(r.u) + sq(r.theta);
    }
    return r;
}

SplitEnergy fourier_split(const Field& f, double R, double t) {
    if (!(R > 0.0)) throw InvalidArgument("R must be positive");
    if (!(t >= 0.0)) throw InvalidArgument("t must be nonnegative");
    const double r = R / (1.0 + t);
    SplitEnergy out;
    out.low = eta_weighted(f, [r](double e2) { return e2 <= r ? 1.0 : 0.0; });
    out.high = eta_weighted(f, [r](double e2) { return e2 <= r ? 0.0 : 1.0; });
    return out;
}

SplitEnergy fourier_split(const VecField& v, double R, double t) {
    SplitEnergy out;
    for (const auto& c : v) {
        const SplitEnergy p = fourier_split(c, R, t);
        out.low += p.low;
        out.high += p.high;
    }
    return out;
}

double splitting_residual(const VecField& u, double R, double t) {
    if (!(R > 0.0)) throw InvalidArgument("R must be positive");
    if (!(t >= 0.0)) throw InvalidArgument("t must be nonnegative");
    const double r = R / (1.0 + t);
    return sum_sq(u, 3) - r * sum_sq(u, 2) + r * r * sum_sq(u, 1);
}

VecField full_velocity_tendency(const State& state, const ModelParams& params, const Tendency& nonlinear) {
    Tendency lin = linear_tendency(state, params);
    for (int i = 0; i < 3; ++i) lin.du[i] += to_spectral(nonlinear.du[i]);
    return lin.du;
}

DiagRecord snapshot(const State& state, const ModelParams& params, const Tendency& nonlinear,
                    const DiagSettings& settings) {
    const State s = to_spectral(state);
    DiagRecord rec;
    rec.values.assign(diag_schema().size(), 0.0);
    const auto& g = s.a.grid();

    rec.set("t", s.t);
    rec.set("mass", mean(s.a) * g.volume());
    rec.set("mean_u", std::sqrt(sq(mean(s.u[0])) + sq(mean(s.u[1])) + sq(mean(s.u[2]))));
    if (s.theta) rec.set("mean_theta", mean(*s.theta));

    const std::array<std::string, 3> levels{"l2", "grad", "hess"};
    for (int k = 0; k < 3; ++k) {
        const double na = hk_norm(s.a, k);
        const double nu = hk_norm(s.u, k);
        const double nt = s.theta ? hk_norm(*s.theta, k) : 0.0;
        rec.set(levels[k] + "_a", na);
        rec.set(levels[k] + "_u", nu);
        rec.set(levels[k] + "_theta", nt);
        rec.set(levels[k] + "_total", std::sqrt(na * na + nu * nu + nt * nt));
    }
    rec.set("h1_a", h_s_full(s.a, 1));
    rec.set("h1_u", h_s_full(s.u, 1));
    if (s.theta) rec.set("h1_theta", h_s_full(*s.theta, 1));

    const VecField udot = material_derivative(s, full_velocity_tendency(s, params, nonlinear));
    rec.set("l2_udot", std::sqrt(l2_norm_sq(udot)));

    for (double si : kNegativeIndices) {
        const std::string l = s_label(si);
        const NegativeEnergy ne = neg_energy(s, si, params, &udot);
        rec.set("negs_a_" + l, ne.a);
        rec.set("negs_u_" + l, ne.u);
        rec.set("negs_theta_" + l, ne.theta);
        rec.set("negs_udot_" + l, ne.udot);
        rec.set("negs_total_" + l, ne.total);
        rec.set("neg_energy_" + l, ne.energy);
    }

    const double slope = params.pressure_slope();
    const double delta0 = settings.delta0 > 0.0 ? settings.delta0 : 0.1 * std::min(1.0, slope);
    const EnergyValue e1 = energy_E1(s, delta0, slope);
    const EnergyValue e2 = energy_E2(s, settings.delta);
    rec.set("E1sq", e1.value);
    rec.set("E1_lower", e1.lower);
    rec.set("E1_upper", e1.upper);
    rec.set("E2sq", e2.value);
    rec.set("E2_lower", e2.lower);
    rec.set("E2_upper", e2.upper);
    rec.set("X1", functional_X1(s, udot));
    rec.set("X2", functional_X2(s, udot));

    SplitEnergy split = fourier_split(gradient(s.a), settings.split_R, s.t);
    const auto add = [&split](const SplitEnergy& p) {
        split.low += p.low;
        split.high += p.high;
    };
    for (const auto& c : s.u) add(fourier_split(gradient(c), settings.split_R, s.t));
    if (s.theta) add(fourier_split(gradient(*s.theta), settings.split_R, s.t));
    rec.set("split_low", split.low);
    rec.set("split_high", split.high);
    rec.set("split_residual", splitting_residual(s.u, settings.split_R, s.t));

    rec.set("rel_entropy", relative_entropy(s.a, params.model == ModelKind::icns ? params.gamma : 1.0));
    rec.set("min_density", 1.0 + min_value(s.a));
    rec.set("min_temperature", s.theta ? 1.0 + min_value(*s.theta) : 1.0);
    return rec;
}

DiagRecord snapshot(const State& state, const ModelParams& params, const DiagSettings& settings) {
    return snapshot(state, params, evaluate_nonlinear(state, params).tendency, settings);
}

}  // namespace nsdecay
