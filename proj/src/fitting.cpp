#include "nsdecay/fitting.hpp"

#include <algorithm>
#include <cmath>

#include "nsdecay/errors.hpp"
#include "nsdecay/grid.hpp"

namespace nsdecay {

FitResult fit_exponent(const std::vector<double>& times, const std::vector<double>& values,
                       const FitWindow& window) {
    if (times.size() != values.size()) throw InvalidArgument("times and values differ in length");
    if (!(window.t_lo < window.t_hi)) throw InvalidArgument("fit window must satisfy t_lo < t_hi");
    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < window.t_lo || times[i] > window.t_hi) continue;
        if (!(values[i] > 0.0))
            throw InvalidArgument("nonpositive value " + std::to_string(values[i]) + " at t=" + std::to_string(times[i]));
        x.push_back(std::log1p(times[i]));
        y.push_back(std::log(values[i]));
    }
    const std::size_t n = x.size();
    if (n < 5) throw InvalidArgument("need at least 5 samples in the fit window, got " + std::to_string(n));

    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw InvalidArgument("fit window contains a single distinct time");
    FitResult r;
    r.exponent = sxy / sxx;
    r.intercept = my - r.exponent * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - r.intercept - r.exponent * x[i];
        rss += e * e;
    }
    r.stderr_ = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
    r.n_points = static_cast<int>(n);
    r.window = window;
    return r;
}

FitWindow default_window(const std::vector<double>& times, double t_box) {
    if (times.empty()) throw InvalidArgument("empty time series");
    const std::size_t skip = times.size() / 5;
    FitWindow w;
    w.t_lo = times[std::min(skip, times.size() - 1)];
    w.t_hi = std::min(times.back(), t_box);
    return w;
}

double box_horizon(double L, double mu) {
    const double r = L / kTwoPi;
    return r * r / std::min(mu, 1.0);
}

void flag_box(FitResult& fit, double t_box) { fit.box_warning = fit.window.t_hi > t_box; }

std::optional<double> stable_onset(const std::vector<double>& times, const std::vector<double>& values,
                                   const FitWindow& window, int span, double tol) {
    if (span < 5) throw InvalidArgument("stable_onset needs span >= 5");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < times.size(); ++i)
        if (times[i] >= window.t_lo && times[i] <= window.t_hi) idx.push_back(i);
    const auto n = static_cast<std::size_t>(span);
    if (idx.size() < n + 1) return std::nullopt;
    auto slope_at = [&](std::size_t k) {
        return fit_exponent(times, values, {times[idx[k]], times[idx[k + n - 1]]}).exponent;
    };
    double prev = slope_at(0);
    for (std::size_t k = 1; k + n <= idx.size(); ++k) {
        const double cur = slope_at(k);
        if (std::abs(cur - prev) <= tol) return times[idx[k - 1]];
        prev = cur;
    }
    return std::nullopt;
}

Verdict compare_rates(const FitResult& fit, double theoretical, double tol, bool one_sided,
                      const std::string& quantity) {
    Verdict v;
    v.quantity = quantity;
    v.fit = fit;
    v.theoretical = theoretical;
    v.tol = tol;
    v.one_sided = one_sided;
    v.pass = one_sided ? fit.exponent <= theoretical + tol : std::abs(fit.exponent - theoretical) <= tol;
    return v;
}

}  // namespace nsdecay
