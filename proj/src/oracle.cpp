#include "nsdecay/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "nsdecay/diagnostics.hpp"
#include "nsdecay/errors.hpp"
#include "nsdecay/linear_symbol.hpp"
#include "nsdecay/matrix_exp.hpp"

namespace nsdecay {

namespace {

constexpr double kQuadTol = 1e-8;
constexpr double kRangeFactor = 8.0;

struct CurveIntegrand {
    const SpectrumProfile& prof;
    const ModelParams& params;
    double order;
    double t;
    CVector wl;
    bool has_long;

    CurveIntegrand(const SpectrumProfile& p, const ModelParams& m, double q, double time)
        : prof(p), params(m), order(q), t(time), wl(longitudinal_size(m)) {
        wl(0) = p.w_a;
        wl(1) = p.w_long;
        if (m.model == ModelKind::fcns) wl(2) = p.w_theta;
        has_long = wl.norm() > 0.0;
    }

    // Integrand without its rho^(2 sigma + 2 order + 2) factor.
    double smooth(double rho) const {
        const double r2 = rho * rho;
        double amp2 = prof.w_trans * prof.w_trans * std::exp(-2.0 * params.mu * r2 * t);
        if (has_long) {
            const CMatrix e = t == 0.0 ? CMatrix::Identity(wl.size(), wl.size())
                                       : expm(longitudinal_block(rho, params) * t);
            amp2 += (e * wl).squaredNorm();
        }
        return prof.amplitude * prof.amplitude * amp2 * 4.0 * kPi * std::exp(-2.0 * r2 / (prof.cutoff * prof.cutoff));
    }

    double beta() const { return 2.0 * prof.sigma + 2.0 * order + 3.0; }

    double operator()(double rho) const {
        if (!(rho > 0.0)) return 0.0;
        return std::exp((beta() - 1.0) * std::log(rho)) * smooth(rho);
    }
};

// Bound on the integral beyond R using |e^{Mt} w|^2 <= kappa |w|^2.
double tail_bound(const SpectrumProfile& p, const ModelParams& m, double order, double R) {
    const double kappa = m.model == ModelKind::icns ? std::max(m.gamma, 1.0 / m.gamma) : 1.0;
    double w2 = p.w_a * p.w_a + p.w_long * p.w_long;
    if (m.model == ModelKind::fcns) w2 += p.w_theta * p.w_theta;
    const double weight = kappa * w2 + p.w_trans * p.w_trans;
    const double alpha = 2.0 * p.sigma + 2.0 * order + 2.0;
    const double b = 2.0 / (p.cutoff * p.cutoff);
    const double a = 0.5 * (alpha + 1.0);
    return p.amplitude * p.amplitude * weight * 4.0 * kPi * 0.5 * std::pow(b, -a) *
           boost::math::tgamma(a, b * R * R);
}

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double refine(const CurveIntegrand& f, double a, double b, double abs_tol, int depth, double& err_sum) {
    double err = 0.0;
    const double v = GK::integrate(f, a, b, 0, 0.0, &err);
    if (std::abs(err) <= abs_tol || depth == 0) {
        err_sum += std::abs(err);
        return v;
    }
    const double mid = 0.5 * (a + b);
    return refine(f, a, mid, 0.5 * abs_tol, depth - 1, err_sum) + refine(f, mid, b, 0.5 * abs_tol, depth - 1, err_sum);
}

double integrate_curve(const SpectrumProfile& p, const ModelParams& m, double order, double t) {
    const CurveIntegrand f(p, m, order, t);
    const double R = kRangeFactor * p.cutoff;
    const double d = 0.25 * std::min(m.mu, 1.0);
    const double rho_star = 1.0 / std::sqrt(1.0 / (p.cutoff * p.cutoff) + d * t);
    const double speed = std::sqrt(m.pressure_slope() + 1.0);
    double w = rho_star / 4.0;
    if (t > 0.0) w = std::min(w, 2.0 * kPi / (speed * t));
    w = std::min(w, R);
    const double fine_end = std::min(R, 12.0 * rho_star);

    double total = 0.0;
    double err_sum = 0.0;
    {
        // rho = w u^(1/beta) absorbs the power at the origin.
        const double b = f.beta();
        const auto g = [&](double u) { return u > 0.0 ? f.smooth(w * std::pow(u, 1.0 / b)) : f.smooth(0.0); };
        boost::math::quadrature::tanh_sinh<double> ts;
        double err = 0.0;
        const double scale = std::pow(w, b) / b;
        total += scale * ts.integrate(g, 0.0, 1.0, 1e-12, &err);
        err_sum += scale * std::abs(err);
    }
    std::vector<std::pair<double, double>> panels;
    double lo = w;
    double width = w;
    while (lo < R) {
        if (lo >= fine_end) width *= 2.0;
        const double hi = std::min(R, lo + width);
        panels.emplace_back(lo, hi);
        lo = hi;
    }
    // First pass fixes the scale; panels are then refined to an absolute budget.
    std::vector<double> coarse(panels.size());
    std::vector<double> coarse_err(panels.size());
    double estimate = std::abs(total);
    for (std::size_t i = 0; i < panels.size(); ++i) {
        coarse[i] = GK::integrate(f, panels[i].first, panels[i].second, 0, 0.0, &coarse_err[i]);
        estimate += std::abs(coarse[i]);
    }
    const double budget = 0.1 * kQuadTol * estimate / static_cast<double>(std::max<std::size_t>(1, panels.size()));
    for (std::size_t i = 0; i < panels.size(); ++i) {
        if (std::abs(coarse_err[i]) <= budget) {
            total += coarse[i];
            err_sum += std::abs(coarse_err[i]);
        } else {
            total += refine(f, panels[i].first, panels[i].second, budget, 12, err_sum);
        }
    }
    total += tail_bound(p, m, order, R);
    if (!(std::isfinite(total)) || err_sum > kQuadTol * std::abs(total))
        throw QuadratureNonconvergence("oracle quadrature did not converge at t=" + std::to_string(t) + " (error " + std::to_string(err_sum / std::abs(total)) + " relative)");
    return total;
}

}  // namespace

void SpectrumProfile::validate() const {
    if (!(amplitude > 0.0)) throw InvalidArgument("profile amplitude must be positive");
    if (!(cutoff > 0.0)) throw InvalidArgument("profile cutoff must be positive");
    if (!(sigma > -1.5)) throw InvalidArgument("profile sigma must exceed -3/2");
}

double borderline_sigma(double s) { return s - 1.5 + 0.01; }

double sigma_for_lp(double p) {
    if (!(p >= 1.0 && p <= 2.0)) throw InvalidArgument("p must lie in [1, 2]");
    return 3.0 / p - 3.0;
}

std::vector<double> linear_decay_curve(const SpectrumProfile& profile, const ModelParams& params, double order,
                                       const std::vector<double>& times) {
    profile.validate();
    params.validate();
    if (!(2.0 * profile.sigma + 2.0 * order + 3.0 > 0.0))
        throw InvalidArgument("integrand not integrable at rho = 0 for this order");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw InvalidArgument("times must be nonnegative");
        if (i > 0 && !(times[i] > times[i - 1])) throw InvalidArgument("times must be increasing");
    }
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(integrate_curve(profile, params, order, t));
    return out;
}

double heat_closed_form(double sigma, double mu, double cutoff, double k, double t) {
    if (!(sigma > -1.5)) throw InvalidArgument("sigma must exceed -3/2");
    const double a = sigma + k + 1.5;
    if (!(a > 0.0)) throw InvalidArgument("sigma + k must exceed -3/2");
    return 2.0 * kPi * boost::math::tgamma(a) * std::pow(2.0 * (1.0 / (cutoff * cutoff) + mu * t), -a);
}

double max_real_eigenvalue(double rho, const ModelParams& params) {
    const CMatrix m = longitudinal_block(rho, params);
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    double best = transverse_rate(rho, params);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) best = std::max(best, es.eigenvalues()(i).real());
    return best;
}

std::vector<std::string> oracle_columns() {
    std::vector<std::string> cols{"t", "l2_total", "grad_total", "hess_total"};
    for (double s : kNegativeIndices) cols.push_back("negs_total_" + s_label(s));
    return cols;
}

std::vector<std::vector<double>> oracle_table(const SpectrumProfile& profile, const ModelParams& params,
                                              const std::vector<double>& times) {
    std::vector<std::vector<double>> cols;
    for (int k = 0; k < 3; ++k) cols.push_back(linear_decay_curve(profile, params, k, times));
    for (double s : kNegativeIndices) {
        if (!profile.in_negative_space(s)) {
            cols.emplace_back(times.size(), std::nan(""));
            continue;
        }
        auto c = linear_decay_curve(profile, params, -s, times);
        for (double& v : c) v *= std::pow(kTwoPi, 2.0 * s);
        cols.push_back(std::move(c));
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::vector<double> row{times[i]};
        for (const auto& c : cols) row.push_back(std::sqrt(c[i]));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> log_times(double t0, double t1, int n) {
    if (!(t0 > 0.0 && t1 > t0 && n >= 2)) throw InvalidArgument("log_times needs 0 < t0 < t1 and n >= 2");
    std::vector<double> out(n);
    const double l0 = std::log(t0);
    const double l1 = std::log(t1);
    for (int i = 0; i < n; ++i) out[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
    out.back() = t1;
    return out;
}

}  // namespace nsdecay
