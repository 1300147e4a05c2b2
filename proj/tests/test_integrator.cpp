#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "nsdecay/errors.hpp"
#include "nsdecay/integrator.hpp"
#include "nsdecay/linear_symbol.hpp"
#include "nsdecay/matrix_exp.hpp"
#include "nsdecay/propagator.hpp"
#include "support.hpp"

using namespace nsdecay;

namespace {

// Reference exponential: Eigen's own Pade / scaling-squaring implementation.
CMatrix eigen_exp(const CMatrix& a) { return a.exp(); }

CMatrix augmented_block(const CMatrix& a, int which) {
    const Eigen::Index n = a.rows();
    CMatrix aug = CMatrix::Zero(3 * n, 3 * n);
    aug.topLeftCorner(n, n) = a;
    aug.block(0, n, n, n) = CMatrix::Identity(n, n);
    aug.block(n, 2 * n, n, n) = CMatrix::Identity(n, n);
    const CMatrix e = eigen_exp(aug);
    return e.block(0, which * n, n, n);
}

CMatrix random_matrix(std::mt19937_64& gen, int n, double scale) {
    std::normal_distribution<double> nd(0.0, scale);
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = cplx{nd(gen), nd(gen)};
    return m;
}

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / std::max(1e-300, b.norm()); }

double state_diff(const State& x, const State& y) {
    double d = l2_norm_sq(to_spectral(x.a) - to_spectral(y.a));
    for (int i = 0; i < 3; ++i) d += l2_norm_sq(to_spectral(x.u[i]) - to_spectral(y.u[i]));
    if (x.theta) d += l2_norm_sq(to_spectral(*x.theta) - to_spectral(*y.theta));
    return std::sqrt(d);
}

ModelParams fcns_params() {
    ModelParams p;
    p.model = ModelKind::fcns;
    p.mu = 0.6;
    p.lambda_v = 0.2;
    return p;
}

}  // namespace

TEST_CASE("Pade exponential agrees with an independent implementation") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const CMatrix m = random_matrix(gen, 1 + trial % 6, trial < 15 ? 0.3 : 4.0);
        CHECK(rel(expm_pade(m), eigen_exp(m)) < 1e-12);
    }
}

TEST_CASE("phi functions agree with the augmented-matrix construction") {
    std::mt19937_64 gen(32);
    for (int trial = 0; trial < 30; ++trial) {
        const CMatrix m = random_matrix(gen, 2 + trial % 4, trial < 15 ? 0.2 : 2.0);
        const PhiMatrices pm = phi_matrices(m);
        CHECK(rel(pm.exp, eigen_exp(m)) < 1e-11);
        CHECK(rel(pm.phi1, augmented_block(m, 1)) < 1e-11);
        CHECK(rel(pm.phi2, augmented_block(m, 2)) < 1e-11);
    }
}

TEST_CASE("scalar phi functions near and away from zero") {
    for (double x : {-30.0, -2.0, -0.51, 0.51, 2.0}) {
        const cplx z{x, 0.1 * x};
        CHECK(std::abs(phi1(z) - (std::exp(z) - 1.0) / z) < 1e-13 * std::max(1.0, std::abs(phi1(z))));
        CHECK(std::abs(phi2(z) - (std::exp(z) - 1.0 - z) / (z * z)) < 1e-12 * std::max(1.0, std::abs(phi2(z))));
    }
    // Series branch against a truncated Taylor polynomial.
    for (double x : {-0.49, -1e-3, 1e-9, 0.3}) {
        const cplx z{x, -0.2 * x};
        cplx p1{}, p2{}, term{1.0, 0.0};
        for (int k = 0; k < 40; ++k) {
            p1 += term / static_cast<double>(k + 1);
            p2 += term / (static_cast<double>(k + 1) * static_cast<double>(k + 2));
            term *= z / static_cast<double>(k + 1);
        }
        CHECK(std::abs(phi1(z) - p1) < 1e-15);
        CHECK(std::abs(phi2(z) - p2) < 1e-15);
    }
    CHECK(phi1(cplx{}) == cplx{1.0, 0.0});
    CHECK(phi2(cplx{}) == cplx{0.5, 0.0});
}

TEST_CASE("coalescing eigenvalues take the fallback route") {
    // lambda^2 + nu rho^2 lambda + gamma rho^2 = 0 has a double root at rho = 2 sqrt(gamma) / nu.
    ModelParams p;
    p.model = ModelKind::icns;
    p.mu = 1.0;
    p.lambda_v = 0.0;
    p.gamma = 1.0;
    const CMatrix m = longitudinal_block(1.0, p) * 0.3;
    const PhiMatrices pm = phi_matrices(m);
    CHECK(pm.used_fallback);
    CHECK(rel(pm.exp, eigen_exp(m)) < 1e-12);
    CHECK(rel(pm.phi2, augmented_block(m, 2)) < 1e-12);
    const auto g = make_grid(8, kTwoPi);
    const PropagatorCache cache(g, p, 0.3);
    CHECK(cache.fallback_count() >= 1);
}

TEST_CASE("propagator shells") {
    const auto g = make_grid(12, kPi);
    ModelParams p;
    p.model = ModelKind::fcns;
    const PropagatorCache cache(g, p, 0.1);
    CHECK(cache.shell(0).exp.isApprox(CMatrix::Identity(3, 3)));
    CHECK(cache.shell(0).t_exp == 1.0);
    // |2 pi xi| = 2 at k = 1 when L = pi
    CHECK(cache.shell(1).t_exp == doctest::Approx(std::exp(-0.4)).epsilon(1e-15));
    CHECK(cache.matches(p, 0.1));
    CHECK_FALSE(cache.matches(p, 0.2));
    ModelParams q = p;
    q.mu = 2.0;
    CHECK_FALSE(cache.matches(q, 0.1));
    CHECK_THROWS_AS(PropagatorCache(g, p, 0.0), InvalidArgument);
}

TEST_CASE("cached propagator equals the exponential of the full symbol") {
    const double L = 2.3;
    const auto g = make_grid(12, L);
    for (ModelKind kind : {ModelKind::icns, ModelKind::fcns}) {
        ModelParams p = fcns_params();
        p.model = kind;
        p.gamma = 1.4;
        const double dt = 0.17;
        const PropagatorCache cache(g, p, dt);
        std::mt19937_64 gen(33);
        const State s = to_spectral(testsupport::random_state(g, gen, kind, 1.0, 4));
        for (PropagatorPart part : {PropagatorPart::exp, PropagatorPart::phi1, PropagatorPart::phi2}) {
            State out = zero_state(g, kind);
            apply_propagator(cache, part, s.a, s.u, s.theta ? &*s.theta : nullptr, out.a, out.u,
                             out.theta ? &*out.theta : nullptr, false);
            double worst = 0.0;
            for (std::size_t idx = 0; idx < g->spectral_size(); idx += 7) {
                if (!g->dealias_keep(idx)) continue;
                const CMatrix m = linear_symbol(g->xi(idx), p) * dt;
                CMatrix w;
                if (part == PropagatorPart::exp) w = eigen_exp(m);
                else w = dt * augmented_block(m, part == PropagatorPart::phi1 ? 1 : 2);
                const int n = static_cast<int>(m.rows());
                CVector v(n), r(n);
                v(0) = s.a.modes()[idx];
                r(0) = out.a.modes()[idx];
                for (int i = 0; i < 3; ++i) {
                    v(1 + i) = s.u[i].modes()[idx];
                    r(1 + i) = out.u[i].modes()[idx];
                }
                if (n == 5) {
                    v(4) = s.theta->modes()[idx];
                    r(4) = out.theta->modes()[idx];
                }
                worst = std::max(worst, (w * v - r).norm() / std::max(1.0, v.norm()));
            }
            CHECK(worst < 1e-12);
        }
    }
}

TEST_CASE("zero state stays zero") {
    const auto g = make_grid(8, 1.0);
    const PropagatorCache cache(g, fcns_params(), 0.01);
    const State s = step(zero_state(g, ModelKind::fcns), cache);
    CHECK(l2_norm(s.a) == 0.0);
    CHECK(l2_norm_sq(s.u) == 0.0);
    CHECK(l2_norm(*s.theta) == 0.0);
    CHECK(s.t == doctest::Approx(0.01));
}

TEST_CASE("linear-only step is the cached exponential") {
    const auto g = make_grid(12, 2.0);
    const ModelParams p = fcns_params();
    const PropagatorCache cache(g, p, 0.05);
    std::mt19937_64 gen(34);
    const State s = to_spectral(testsupport::random_state(g, gen, ModelKind::fcns, 0.1, 3));
    StepOptions opt;
    opt.linear_only = true;
    const State lin = step(s, cache, opt);
    State ref = zero_state(g, ModelKind::fcns);
    apply_propagator(cache, PropagatorPart::exp, s.a, s.u, &*s.theta, ref.a, ref.u, &*ref.theta, false);
    ref.t = lin.t;
    CHECK(state_diff(lin, ref) == 0.0);
}

TEST_CASE("small transverse shear mode decays at the heat rate") {
    const double L = 2.0;
    const auto g = make_grid(16, L);
    ModelParams p = fcns_params();
    const double dt = 0.02;
    const PropagatorCache cache(g, p, dt);
    const double rho = kTwoPi / L;
    for (double eps : {1e-2, 1e-4}) {
        State s = zero_state(g, ModelKind::fcns);
        s.u[0] = to_spectral(Field::from_function(g, [eps, L](double, double y, double) { return eps * std::sin(kTwoPi * y / L); }));
        const State next = step(s, cache);
        const std::size_t idx = g->spectral_index(0, 1, 0);
        const double ratio = std::abs(next.u[0].modes()[idx]) / std::abs(s.u[0].modes()[idx]);
        CHECK(std::abs(ratio - std::exp(-p.mu * rho * rho * dt)) < 10.0 * eps * eps);
    }
}

TEST_CASE("mass is conserved step by step") {
    const auto g = make_grid(16, 3.0);
    const ModelParams p = fcns_params();
    const PropagatorCache cache(g, p, 0.02);
    std::mt19937_64 gen(35);
    State s = testsupport::random_state(g, gen, ModelKind::fcns, 0.1, 3);
    s.a = to_spectral(s.a) + to_spectral(Field::constant(g, 0.05));
    const double m0 = mean(to_spectral(s.a));
    for (int i = 0; i < 20; ++i) {
        const double before = mean(to_spectral(s.a));
        s = step(s, cache);
        CHECK(std::abs(mean(s.a) - before) <= 1e-12 * std::abs(m0));
    }
}

TEST_CASE("second-order self-convergence") {
    const double L = kTwoPi;
    const auto g = make_grid(16, L);
    const ModelParams p = fcns_params();
    std::mt19937_64 gen(36);
    const State s0 = to_spectral(testsupport::random_state(g, gen, ModelKind::fcns, 0.2, 2));
    const double t_end = 0.8;
    auto run = [&](double dt) {
        const PropagatorCache cache(g, p, dt);
        return advance(s0, cache, std::llround(t_end / dt));
    };
    const State ref = run(0.00625);
    const double e1 = state_diff(run(0.1), ref);
    const double e2 = state_diff(run(0.05), ref);
    const double e3 = state_diff(run(0.025), ref);
    MESSAGE("errors " << e1 << " " << e2 << " " << e3);
    CHECK(std::log2(e1 / e2) > 1.9);
    CHECK(std::log2(e2 / e3) > 1.9);
}

TEST_CASE("loss of positivity and CFL violations abort with the state time") {
    const double L = 1.0;
    const auto g = make_grid(16, L);
    const ModelParams p = fcns_params();
    {
        const PropagatorCache cache(g, p, 0.001);
        State s = zero_state(g, ModelKind::fcns);
        s.a = Field::from_function(g, [](double x, double, double) { return -1.2 * std::cos(kTwoPi * x); });
        s.t = 3.5;
        try {
            step(s, cache);
            FAIL("expected an abort");
        } catch (const RunAborted& e) {
            CHECK(e.cause() == RunAborted::Cause::density);
            CHECK(e.time() == 3.5);
        }
    }
    {
        const PropagatorCache cache(g, p, 0.5);
        State s = zero_state(g, ModelKind::fcns);
        s.u[1] = Field::from_function(g, [](double x, double, double) { return std::sin(kTwoPi * x); });
        try {
            step(s, cache);
            FAIL("expected an abort");
        } catch (const RunAborted& e) {
            CHECK(e.cause() == RunAborted::Cause::cfl);
        }
        StepOptions opt;
        opt.check_cfl = false;
        CHECK_NOTHROW(step(s, cache, opt));
    }
}

TEST_CASE("state and propagator must agree") {
    const auto g = make_grid(8, 1.0);
    const PropagatorCache cache(g, fcns_params(), 0.01);
    CHECK_THROWS_AS(step(zero_state(g, ModelKind::icns), cache), InvalidArgument);
    const auto other = make_grid(8, 1.0);
    CHECK_THROWS_AS(step(zero_state(other, ModelKind::fcns), cache), InvalidArgument);
}
