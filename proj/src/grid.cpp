#include "nsdecay/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "fft.hpp"
#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"

#include <fftw3.h>

namespace nsdecay {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

FftPlans::FftPlans(int n) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    static const bool threads_ready = [] {
        fftw_init_threads();
        return true;
    }();
    (void)threads_ready;
    fftw_plan_with_nthreads(configured_threads());

    const std::size_t nphys = static_cast<std::size_t>(n) * n * n;
    const std::size_t nspec = static_cast<std::size_t>(n) * n * (n / 2 + 1);
    double* real = fftw_alloc_real(nphys);
    fftw_complex* spec = fftw_alloc_complex(nspec);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    r2c_ = fftw_plan_dft_r2c_3d(n, n, n, real, spec, flags);
    c2r_ = fftw_plan_dft_c2r_3d(n, n, n, spec, real, flags);
    fftw_free(real);
    fftw_free(spec);
    if (r2c_ == nullptr || c2r_ == nullptr) throw Error("FFTW planning failed");
}

FftPlans::~FftPlans() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (r2c_ != nullptr) fftw_destroy_plan(r2c_);
    if (c2r_ != nullptr) fftw_destroy_plan(c2r_);
}

void FftPlans::forward(const double* in, cplx* out) const {
    // r2c does not modify its input with FFTW_ESTIMATE plans.
    fftw_execute_dft_r2c(r2c_, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
}

void FftPlans::inverse(cplx* in, double* out) const {
    fftw_execute_dft_c2r(c2r_, reinterpret_cast<fftw_complex*>(in), out);
}

SpectralGrid::SpectralGrid(int n, double box_length)
    : n_(n),
      box_length_(box_length),
      physical_size_(static_cast<std::size_t>(n) * n * n),
      spectral_size_(static_cast<std::size_t>(n) * n * (n / 2 + 1)),
      keep_(spectral_size_, 0) {
    for (std::size_t i = 0; i < spectral_size_; ++i) keep_[i] = dealias_keep(wave_index(i)) ? 1 : 0;
    apply_thread_cap();
    plans_ = std::make_unique<FftPlans>(n);
}

SpectralGrid::~SpectralGrid() = default;

std::vector<double> SpectralGrid::axis_wavenumbers() const {
    std::vector<double> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = axis_index(i) / box_length_;
    return out;
}

bool SpectralGrid::dealias_keep(const WaveIndex& w) const noexcept {
    auto ok = [this](int k) { return 3 * std::abs(k) <= n_; };
    return ok(w.kx) && ok(w.ky) && ok(w.kz);
}

std::size_t SpectralGrid::spectral_index(int kx, int ky, int kz) const noexcept {
    const int ix = kx < 0 ? kx + n_ : kx;
    const int iy = ky < 0 ? ky + n_ : ky;
    return (static_cast<std::size_t>(ix) * n_ + static_cast<std::size_t>(iy)) * nz_spectral() +
           static_cast<std::size_t>(kz);
}

long long SpectralGrid::max_norm2() const noexcept {
    const long long h = n_ / 2;
    return 3 * h * h;
}

GridPtr make_grid(int n, double box_length) {
    if (n < 8 || n % 2 != 0)
        throw InvalidArgument("grid size must be even and >= 8, got " + std::to_string(n));
    if (!(box_length > 0.0) || !std::isfinite(box_length))
        throw InvalidArgument("box length must be positive and finite");
    return std::make_shared<const SpectralGrid>(n, box_length);
}

}  // namespace nsdecay
