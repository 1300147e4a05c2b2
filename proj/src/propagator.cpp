#include "nsdecay/propagator.hpp"

#include <cmath>

#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"

namespace nsdecay {

PropagatorCache::PropagatorCache(GridPtr grid, const ModelParams& params, double dt)
    : grid_(std::move(grid)), params_(params), dt_(dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("time step must be positive");
    params_.validate();
    const long long kmax = grid_->n() / 3;
    const long long max_k2 = 3 * kmax * kmax;
    shells_.resize(static_cast<std::size_t>(max_k2 + 1));
    const double c = kTwoPi / grid_->box_length();
    const int dim = longitudinal_size(params_);
    for (long long k2 = 0; k2 <= max_k2; ++k2) {
        ShellWeights& w = shells_[static_cast<std::size_t>(k2)];
        if (k2 == 0) {
            w.exp = CMatrix::Identity(dim, dim);
            w.phi1 = dt * CMatrix::Identity(dim, dim);
            w.phi2 = 0.5 * dt * CMatrix::Identity(dim, dim);
            w.t_exp = 1.0;
            w.t_phi1 = dt;
            w.t_phi2 = 0.5 * dt;
            continue;
        }
        const double rho = c * std::sqrt(static_cast<double>(k2));
        PhiMatrices pm = phi_matrices(longitudinal_block(rho, params_) * dt);
        if (pm.used_fallback) ++fallbacks_;
        w.exp = std::move(pm.exp);
        w.phi1 = dt * pm.phi1;
        w.phi2 = dt * pm.phi2;
        const double z = transverse_rate(rho, params_) * dt;
        w.t_exp = std::exp(z);
        w.t_phi1 = dt * phi1(cplx{z, 0.0}).real();
        w.t_phi2 = dt * phi2(cplx{z, 0.0}).real();
    }
}

bool PropagatorCache::matches(const ModelParams& params, double dt) const noexcept {
    return dt == dt_ && params.mu == params_.mu && params.lambda_v == params_.lambda_v &&
           params.gamma == params_.gamma && params.model == params_.model;
}

PropagatorCache build_propagator(GridPtr grid, const ModelParams& params, double dt) {
    return PropagatorCache(std::move(grid), params, dt);
}

void apply_propagator(const PropagatorCache& cache, PropagatorPart part, const Field& a, const VecField& u,
                      const Field* theta, Field& out_a, VecField& out_u, Field* out_theta, bool accumulate) {
    const SpectralGrid& g = *cache.grid();
    const bool full = cache.params().model == ModelKind::fcns;
    if (full && (theta == nullptr || out_theta == nullptr))
        throw InvalidArgument("full-model propagator needs temperature fields");

    const auto in_a = a.modes();
    const std::array<std::span<const cplx>, 3> in_u{u[0].modes(), u[1].modes(), u[2].modes()};
    const std::span<const cplx> in_t = full ? theta->modes() : std::span<const cplx>{};
    auto o_a = out_a.modes();
    const std::array<std::span<cplx>, 3> o_u{out_u[0].modes(), out_u[1].modes(), out_u[2].modes()};
    const std::span<cplx> o_t = full ? out_theta->modes() : std::span<cplx>{};

    kernels::for_each_index(g.spectral_size(), [&](std::size_t m) {
        cplx ra{};
        std::array<cplx, 3> ru{};
        cplx rt{};
        if (g.dealias_keep(m)) {
            const WaveIndex w = g.wave_index(m);
            const long long k2 = w.norm2();
            const ShellWeights& sw = cache.shell(k2);
            const CMatrix& block = part == PropagatorPart::exp ? sw.exp : (part == PropagatorPart::phi1 ? sw.phi1 : sw.phi2);
            const double t_fac = part == PropagatorPart::exp ? sw.t_exp : (part == PropagatorPart::phi1 ? sw.t_phi1 : sw.t_phi2);
            std::array<double, 3> nhat{0.0, 0.0, 0.0};
            if (k2 > 0) {
                const double inv = 1.0 / std::sqrt(static_cast<double>(k2));
                nhat = {w.kx * inv, w.ky * inv, w.kz * inv};
            }
            const cplx ul = nhat[0] * in_u[0][m] + nhat[1] * in_u[1][m] + nhat[2] * in_u[2][m];
            const cplx th = full ? in_t[m] : cplx{};
            const cplx la = block(0, 0) * in_a[m] + block(0, 1) * ul + (full ? block(0, 2) * th : cplx{});
            const cplx ll = block(1, 0) * in_a[m] + block(1, 1) * ul + (full ? block(1, 2) * th : cplx{});
            if (full) rt = block(2, 0) * in_a[m] + block(2, 1) * ul + block(2, 2) * th;
            ra = la;
            if (k2 > 0) {
                for (int i = 0; i < 3; ++i) ru[i] = t_fac * (in_u[i][m] - ul * nhat[i]) + ll * nhat[i];
            } else {
                // zero mode: the block is a multiple of the identity
                for (int i = 0; i < 3; ++i) ru[i] = block(1, 1) * in_u[i][m];
            }
        }
        if (accumulate) {
            o_a[m] += ra;
            for (int i = 0; i < 3; ++i) o_u[i][m] += ru[i];
            if (full) o_t[m] += rt;
        } else {
            o_a[m] = ra;
            for (int i = 0; i < 3; ++i) o_u[i][m] = ru[i];
            if (full) o_t[m] = rt;
        }
    });
}

}  // namespace nsdecay
