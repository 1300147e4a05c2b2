#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace nsdecay {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Integer wavevector of one stored spectral coefficient.
struct WaveIndex {
    int kx = 0;
    int ky = 0;
    int kz = 0;

    long long norm2() const noexcept {
        return static_cast<long long>(kx) * kx + static_cast<long long>(ky) * ky +
               static_cast<long long>(kz) * kz;
    }
};

class FftPlans;

/// Periodic box [0, L)^3 sampled on n^3 points.
///
/// Frequency convention: a Fourier mode with integer index k has frequency
/// xi = k / L and the transform kernel is exp(2 pi i x . xi), so Lambda^s acts
/// as |xi|^s and the gradient as 2 pi i xi. Spectral coefficients are stored in
/// real-to-complex layout n x n x (n/2 + 1); the conjugate half is implicit.
///
/// Normalization: c_k = n^-3 sum_x f(x) exp(-2 pi i k.x / L), hence
/// ||f||_{L2}^2 = L^3 sum_k |c_k|^2 (see kParsevalNote in spectral.hpp).
class SpectralGrid {
public:
    SpectralGrid(int n, double box_length);
    ~SpectralGrid();
    SpectralGrid(const SpectralGrid&) = delete;
    SpectralGrid& operator=(const SpectralGrid&) = delete;

    int n() const noexcept { return n_; }
    int nz_spectral() const noexcept { return n_ / 2 + 1; }
    double box_length() const noexcept { return box_length_; }
    double dx() const noexcept { return box_length_ / n_; }
    double volume() const noexcept { return box_length_ * box_length_ * box_length_; }

    std::size_t physical_size() const noexcept { return physical_size_; }
    std::size_t spectral_size() const noexcept { return spectral_size_; }

    /// Signed integer index of position i along a full axis: {0,1,..,n/2-1,-n/2,..,-1}.
    int axis_index(int i) const noexcept { return i < n_ / 2 ? i : i - n_; }
    /// xi values (k / L) along a full axis, DFT order.
    std::vector<double> axis_wavenumbers() const;

    WaveIndex wave_index(std::size_t spectral_idx) const noexcept {
        const int nzs = nz_spectral();
        const int iz = static_cast<int>(spectral_idx % nzs);
        const std::size_t rest = spectral_idx / nzs;
        const int iy = static_cast<int>(rest % n_);
        const int ix = static_cast<int>(rest / n_);
        // The stored kz axis never wraps: kz = iz in [0, n/2].
        return {axis_index(ix), axis_index(iy), iz};
    }

    /// Frequency vector xi = k / L of a stored coefficient.
    std::array<double, 3> xi(std::size_t spectral_idx) const noexcept {
        const WaveIndex w = wave_index(spectral_idx);
        return {w.kx / box_length_, w.ky / box_length_, w.kz / box_length_};
    }

    /// Multiplicity of a stored coefficient in the full (Hermitian) mode set.
    double multiplicity(std::size_t spectral_idx) const noexcept {
        const int iz = static_cast<int>(spectral_idx % nz_spectral());
        return (iz == 0 || iz == n_ / 2) ? 1.0 : 2.0;
    }

    /// Two-thirds rule: mode is retained iff every |k_i| <= n/3.
    bool dealias_keep(std::size_t spectral_idx) const noexcept { return keep_[spectral_idx] != 0; }
    bool dealias_keep(const WaveIndex& w) const noexcept;

    /// Whether |k_axis| == n/2 (Nyquist along that axis).
    bool is_nyquist(int k) const noexcept { return k == -n_ / 2 || k == n_ / 2; }

    /// Flat spectral index of an integer wavevector (kz >= 0 required).
    std::size_t spectral_index(int kx, int ky, int kz) const noexcept;

    /// Largest integer |k|^2 present on the stored half grid.
    long long max_norm2() const noexcept;

    const FftPlans& plans() const noexcept { return *plans_; }

private:
    int n_;
    double box_length_;
    std::size_t physical_size_;
    std::size_t spectral_size_;
    std::vector<std::uint8_t> keep_;
    std::unique_ptr<FftPlans> plans_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Validates (n even, n >= 8, L > 0) and builds the grid.
GridPtr make_grid(int n, double box_length);

}  // namespace nsdecay
