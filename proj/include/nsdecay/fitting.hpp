#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nsdecay {

/// Time window [t_lo, t_hi] (inclusive).
struct FitWindow {
    double t_lo = 0.0;
    double t_hi = 0.0;
};

/// Slope of log(value) against log(1 + t) by ordinary least squares.
struct FitResult {
    double exponent = 0.0;
    double stderr_ = 0.0;
    double intercept = 0.0;
    FitWindow window;
    int n_points = 0;
    bool box_warning = false;  ///< window extends past the box-validity horizon
};

/// Fits inside `window`. Throws InvalidArgument on fewer than 5 samples or
/// a nonpositive value in the window.
FitResult fit_exponent(const std::vector<double>& times, const std::vector<double>& values,
                       const FitWindow& window);

/// Drops the first 20% of the samples and everything past t_box.
FitWindow default_window(const std::vector<double>& times, double t_box);

/// Box-validity horizon (L / 2 pi)^2 / min(mu, 1).
double box_horizon(double L, double mu);

/// Marks fit.box_warning if the window reaches past t_box.
void flag_box(FitResult& fit, double t_box);

/// Earliest start time from which the slope over `span` consecutive samples
/// changes by at most `tol` when the window advances by one sample. Descriptive
/// only. Returns nullopt if the slope never settles inside `window`.
std::optional<double> stable_onset(const std::vector<double>& times, const std::vector<double>& values,
                                   const FitWindow& window, int span = 8, double tol = 0.02);

struct Verdict {
    std::string quantity;
    FitResult fit;
    double theoretical = 0.0;
    double tol = 0.0;
    bool one_sided = false;
    bool pass = false;
};

/// Two-sided: |exponent - theoretical| <= tol. One-sided (upper bound):
/// exponent <= theoretical + tol.
Verdict compare_rates(const FitResult& fit, double theoretical, double tol, bool one_sided,
                      const std::string& quantity = {});

}  // namespace nsdecay
