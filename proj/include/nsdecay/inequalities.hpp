#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsdecay/field.hpp"

namespace nsdecay {

/// Ratios LHS / RHS of one inequality over a family of samples.
struct InequalityReport {
    std::string name;
    std::vector<double> ratios;
    double max_ratio = 0.0;
    int samples = 0;
    double limit = 0.0;  ///< pass threshold on every ratio; 0 when only an empirical maximum is recorded
    bool pass = true;

    void add(double ratio);
    /// Appends all samples of another report with the same name.
    void merge(const InequalityReport& other);
};

/// Real zero-mean field with random Gaussian coefficients on 0 < |k| <= kmax,
/// scaled by |k|^-beta with beta drawn from [0, 2]. kmax <= 0 selects n / 4.
Field random_band_limited(GridPtr grid, std::uint64_t seed, std::uint64_t sample, int kmax = 0);

/// Lebesgue norm by equal-weight quadrature on the grid; p = inf allowed.
double lp_norm(const Field& f, double p);
/// Pointwise Frobenius magnitude |grad^k f| (k = 0, 1, 2), physical.
Field gradient_magnitude(const Field& f, int k);

/// ||grad^l f|| <= ||grad^(l+1) f||^(1 - alpha) ||Lambda_2pi^-s f||^alpha, alpha = 1 / (l + 1 + s),
/// where Lambda_2pi <-> |2 pi xi|. Constant 1; passes at ratio <= 1 + 1e-10.
InequalityReport check_interp(const Field& f, int l, double s);

/// Exponent p of the Gagliardo-Nirenberg relation
///   1/p - alpha/3 = (1/2 - m/3)(1 - theta) + (1/2 - l/3) theta.
/// Throws InvalidArgument unless 2 <= p < infinity and theta in [0, 1].
double gn_exponent(int alpha, int m, int l, double theta);
/// ||grad^alpha f||_{L^p} / (||grad^m f||^(1 - theta) ||grad^l f||^theta). Empirical constant.
InequalityReport check_gn(const Field& f, int alpha, int m, int l, double theta);

/// q with 1/q = 1/p - s/3. Throws unless 0 < s < 3 and 1 < p < q < infinity.
double hls_exponent(double s, double p);
/// ||Lambda^-s f||_{L^q} / ||f||_{L^p}. Empirical constant.
InequalityReport check_hls(const Field& f, double s, double p);

/// ||f_hat||_{L^p'} / ||f||_{L^p} with f_hat(xi) = L^3 c_k on the lattice xi = k / L
/// (cell measure L^-3). Declared constant 1 with 5% quadrature slack; p in [1, 2].
InequalityReport check_hausdorff_young(const Field& f, double p);

/// The whole battery on 32^3 band-limited samples, deterministic in seed.
std::vector<InequalityReport> run_inequality_battery(std::uint64_t seed, int samples = 200);

}  // namespace nsdecay
