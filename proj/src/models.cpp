#include "nsdecay/models.hpp"

#include <cmath>

#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"
#include "nsdecay/spectral.hpp"

namespace nsdecay {

std::string to_string(ModelKind kind) { return kind == ModelKind::icns ? "icns" : "fcns"; }

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "icns") return ModelKind::icns;
    if (name == "fcns") return ModelKind::fcns;
    throw InvalidArgument("unknown model '" + name + "' (expected icns or fcns)");
}

void ModelParams::validate() const {
    if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
    if (!(2.0 * mu + 3.0 * lambda_v >= 0.0)) throw InvalidArgument("viscosities must satisfy 2 mu + 3 lambda >= 0");
    if (!(gamma >= 1.0)) throw InvalidArgument("gamma must be >= 1");
}

State zero_state(GridPtr grid, ModelKind model) {
    State s;
    s.a = Field::zeros(grid, Representation::spectral);
    s.u = zeros_vec(grid, Representation::spectral);
    if (model == ModelKind::fcns) s.theta = Field::zeros(grid, Representation::spectral);
    return s;
}

State to_spectral(const State& s) {
    State out;
    out.a = dealias(to_spectral(s.a));
    for (int i = 0; i < 3; ++i) out.u[i] = dealias(to_spectral(s.u[i]));
    if (s.theta) out.theta = dealias(to_spectral(*s.theta));
    out.t = s.t;
    return out;
}

namespace {

double checked_min_density(const Field& a_phys) {
    const auto v = a_phys.values();
    const double m = 1.0 + kernels::min_over(v.size(), [&](std::size_t i) { return v[i]; });
    if (!(m > 0.0)) throw DensityNonpositive(m);
    return m;
}

double checked_min_temperature(const Field& th_phys) {
    const auto v = th_phys.values();
    const double m = 1.0 + kernels::min_over(v.size(), [&](std::size_t i) { return v[i]; });
    if (!(m > 0.0)) throw TemperatureNonpositive(m);
    return m;
}

template <class Fn>
Field pointwise(const Field& a, Fn&& fn) {
    Field ap = to_physical(a);
    checked_min_density(ap);
    auto v = ap.values();
    kernels::for_each_index(v.size(), [&](std::size_t i) { v[i] = fn(v[i]); });
    return ap;
}

// Spectral viscous operator V_i = mu Lap u_i + (mu + lambda) d_i div u.
VecField viscous_operator(const VecField& u_hat, const ModelParams& p) {
    const auto& g = u_hat[0].grid();
    VecField out = zeros_vec(u_hat[0].grid_ptr(), Representation::spectral);
    const double c = kTwoPi / g.box_length();
    const std::array<std::span<const cplx>, 3> in{u_hat[0].modes(), u_hat[1].modes(), u_hat[2].modes()};
    const std::array<std::span<cplx>, 3> res{out[0].modes(), out[1].modes(), out[2].modes()};
    const double bulk = p.mu + p.lambda_v;
    kernels::for_each_index(g.spectral_size(), [&](std::size_t m) {
        const WaveIndex w = g.wave_index(m);
        const std::array<int, 3> k{w.kx, w.ky, w.kz};
        std::array<double, 3> eta{};
        std::array<double, 3> eta_d{};
        for (int j = 0; j < 3; ++j) {
            eta[j] = c * k[j];
            eta_d[j] = g.is_nyquist(k[j]) ? 0.0 : eta[j];
        }
        const double eta2 = eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2];
        const cplx div = eta_d[0] * in[0][m] + eta_d[1] * in[1][m] + eta_d[2] * in[2][m];
        for (int i = 0; i < 3; ++i) res[i][m] = -p.mu * eta2 * in[i][m] - bulk * eta_d[i] * div;
    });
    return out;
}

// -div(f u) computed from the physical products (f u_j), dealiased.
Field minus_divergence_of_products(const std::array<Field, 3>& products) {
    Field out = divergence({forward(products[0]), forward(products[1]), forward(products[2])});
    out *= -1.0;
    dealias_in_place(out);
    return out;
}

struct PhysicalState {
    Field a;
    VecField u;
    VecField grad_a;
    std::array<VecField, 3> grad_u;  // [j][i] = d_j u_i
    VecField visc;
    std::optional<Field> theta;
    std::optional<VecField> grad_theta;
    std::optional<Field> lap_theta;
};

PhysicalState gather(const State& state, const ModelParams& params) {
    PhysicalState ps;
    const Field a_hat = to_spectral(state.a);
    const VecField u_hat = to_spectral(state.u);
    ps.a = inverse(a_hat);
    ps.u = to_physical(u_hat);
    ps.grad_a = to_physical(gradient(a_hat));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) ps.grad_u[j][i] = inverse(partial(u_hat[i], j));
    ps.visc = to_physical(viscous_operator(u_hat, params));
    if (state.theta) {
        const Field th_hat = to_spectral(*state.theta);
        ps.theta = inverse(th_hat);
        ps.grad_theta = to_physical(gradient(th_hat));
        ps.lap_theta = inverse(laplacian(th_hat));
    }
    return ps;
}

double max_speed(const VecField& u) {
    const auto u0 = u[0].values();
    const auto u1 = u[1].values();
    const auto u2 = u[2].values();
    return kernels::max_over(u0.size(), [&](std::size_t i) {
        return std::sqrt(u0[i] * u0[i] + u1[i] * u1[i] + u2[i] * u2[i]);
    });
}

}  // namespace

Field h_of_a(const Field& a) {
    return pointwise(a, [](double x) { return x / (1.0 + x); });
}

Field g_of_a(const Field& a) {
    return pointwise(a, [](double x) { return 1.0 / (1.0 + x); });
}

Field pressure_nonlinearity(const Field& a, double gamma) {
    return pointwise(a, [gamma](double x) { return gamma * std::pow(1.0 + x, gamma - 2.0) - gamma; });
}

NonlinearEval evaluate_nonlinear(const State& state, const ModelParams& params) {
    const bool full = params.model == ModelKind::fcns;
    if (full && !state.theta) throw InvalidArgument("full model requires a temperature field");
    if (!full && state.theta) throw InvalidArgument("isentropic model takes no temperature field");

    NonlinearEval ev;
    const PhysicalState ps = gather(state, params);
    ev.min_density = checked_min_density(ps.a);
    if (full) ev.min_temperature = checked_min_temperature(*ps.theta);
    ev.max_speed = max_speed(ps.u);

    const GridPtr grid = state.grid();
    const std::size_t npts = grid->physical_size();
    std::array<Field, 3> a_u;
    std::array<Field, 3> th_u;
    std::array<Field, 3> s2;
    Field s3 = Field::zeros(grid, Representation::physical);
    for (int j = 0; j < 3; ++j) {
        a_u[j] = Field::zeros(grid, Representation::physical);
        th_u[j] = Field::zeros(grid, Representation::physical);
        s2[j] = Field::zeros(grid, Representation::physical);
    }

    const auto a = ps.a.values();
    const std::array<std::span<const double>, 3> u{ps.u[0].values(), ps.u[1].values(), ps.u[2].values()};
    const std::array<std::span<const double>, 3> ga{ps.grad_a[0].values(), ps.grad_a[1].values(),
                                                    ps.grad_a[2].values()};
    const std::array<std::span<const double>, 3> visc{ps.visc[0].values(), ps.visc[1].values(),
                                                      ps.visc[2].values()};
    std::array<std::array<std::span<const double>, 3>, 3> gu;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) gu[j][i] = ps.grad_u[j][i].values();
    std::array<std::span<double>, 3> out_au{a_u[0].values(), a_u[1].values(), a_u[2].values()};
    std::array<std::span<double>, 3> out_s2{s2[0].values(), s2[1].values(), s2[2].values()};

    const double mu = params.mu;
    const double lam = params.lambda_v;

    if (full) {
        const auto th = ps.theta->values();
        const std::array<std::span<const double>, 3> gt{(*ps.grad_theta)[0].values(), (*ps.grad_theta)[1].values(),
                                                        (*ps.grad_theta)[2].values()};
        const auto lap_th = ps.lap_theta->values();
        std::array<std::span<double>, 3> out_thu{th_u[0].values(), th_u[1].values(), th_u[2].values()};
        auto out_s3 = s3.values();
        kernels::for_each_index(npts, [&](std::size_t p) {
            const double rho = 1.0 + a[p];
            const double h = a[p] / rho;
            const double g = 1.0 / rho;
            double div = 0.0;
            double d_sq = 0.0;
            for (int i = 0; i < 3; ++i) {
                div += gu[i][i][p];
                for (int j = 0; j < 3; ++j) {
                    const double dij = 0.5 * (gu[i][j][p] + gu[j][i][p]);
                    d_sq += dij * dij;
                }
            }
            for (int i = 0; i < 3; ++i) {
                const double adv = u[0][p] * gu[0][i][p] + u[1][p] * gu[1][i][p] + u[2][p] * gu[2][i][p];
                // g grad(a theta) expanded by the product rule
                const double grad_a_theta = th[p] * ga[i][p] + a[p] * gt[i][p];
                out_s2[i][p] = -adv - h * visc[i][p] + h * (ga[i][p] + gt[i][p]) - g * grad_a_theta;
                out_au[i][p] = a[p] * u[i][p];
                out_thu[i][p] = th[p] * u[i][p];
            }
            out_s3[p] = g * (2.0 * mu * d_sq + lam * div * div) - h * lap_th[p];
        });
    } else {
        const double gamma = params.gamma;
        kernels::for_each_index(npts, [&](std::size_t p) {
            const double rho = 1.0 + a[p];
            const double h = a[p] / rho;
            const double pn = gamma * std::pow(rho, gamma - 2.0) - gamma;
            for (int i = 0; i < 3; ++i) {
                const double adv = u[0][p] * gu[0][i][p] + u[1][p] * gu[1][i][p] + u[2][p] * gu[2][i][p];
                out_s2[i][p] = -adv - h * visc[i][p] - pn * ga[i][p];
                out_au[i][p] = a[p] * u[i][p];
            }
        });
    }

    Tendency& td = ev.tendency;
    td.da = minus_divergence_of_products(a_u);
    for (int i = 0; i < 3; ++i) {
        td.du[i] = forward(s2[i]);
        dealias_in_place(td.du[i]);
    }
    if (full) {
        Field s3_hat = forward(s3);
        s3_hat += minus_divergence_of_products(th_u);
        dealias_in_place(s3_hat);
        td.dtheta = std::move(s3_hat);
    }
    return ev;
}

Tendency nonlinear_fcns(const State& state, const ModelParams& params) {
    if (params.model != ModelKind::fcns) throw InvalidArgument("nonlinear_fcns called with isentropic parameters");
    return evaluate_nonlinear(state, params).tendency;
}

Tendency nonlinear_icns(const State& state, const ModelParams& params) {
    if (params.model != ModelKind::icns) throw InvalidArgument("nonlinear_icns called with full-model parameters");
    return evaluate_nonlinear(state, params).tendency;
}

Tendency linear_tendency(const State& state, const ModelParams& params) {
    const Field a_hat = to_spectral(state.a);
    const VecField u_hat = to_spectral(state.u);
    Tendency td;
    td.da = divergence(u_hat);
    td.da *= -1.0;
    td.du = viscous_operator(u_hat, params);
    const VecField grad_a = gradient(a_hat);
    const double slope = params.pressure_slope();
    std::optional<VecField> grad_th;
    if (state.theta) grad_th = gradient(to_spectral(*state.theta));
    for (int i = 0; i < 3; ++i) {
        td.du[i] -= slope * grad_a[i];
        if (grad_th) td.du[i] -= (*grad_th)[i];
    }
    if (state.theta) {
        Field dth = laplacian(to_spectral(*state.theta));
        dth += td.da;  // - div u
        td.dtheta = std::move(dth);
    }
    return td;
}

VecField material_derivative(const State& state, const VecField& dudt) {
    const VecField u_hat = to_spectral(state.u);
    const VecField u = to_physical(u_hat);
    VecField out;
    for (int i = 0; i < 3; ++i) {
        Field adv = Field::zeros(state.grid(), Representation::physical);
        auto av = adv.values();
        for (int j = 0; j < 3; ++j) {
            const Field dj = inverse(partial(u_hat[i], j));
            const auto dv = dj.values();
            const auto uj = u[j].values();
            kernels::for_each_index(av.size(), [&](std::size_t p) { av[p] += uj[p] * dv[p]; });
        }
        Field adv_hat = forward(adv);
        dealias_in_place(adv_hat);
        out[i] = to_spectral(dudt[i]);
        out[i] += adv_hat;
    }
    return out;
}

double relative_entropy(const Field& a, double gamma) {
    if (!(gamma >= 1.0)) throw InvalidArgument("gamma must be >= 1");
    const Field ap = to_physical(a);
    checked_min_density(ap);
    const auto v = ap.values();
    const auto& g = ap.grid();
    const bool isothermal = std::abs(gamma - 1.0) < 1e-12;
    const double cell = g.dx() * g.dx() * g.dx();
    const double sum = kernels::sum_over(v.size(), [&](std::size_t i) {
        const double x = v[i];
        const double lg = std::log1p(x);
        return isothermal ? (1.0 + x) * lg - x : (std::expm1(gamma * lg) - gamma * x) / (gamma - 1.0);
    });
    return cell * sum;
}

void check_positivity(const State& state) {
    checked_min_density(to_physical(state.a));
    if (state.theta) checked_min_temperature(to_physical(*state.theta));
}

}  // namespace nsdecay
