#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "nsdecay/grid.hpp"

namespace nsdecay {

enum class Representation { physical, spectral };

/// Scalar quantity on a SpectralGrid, stored either as n^3 real point values
/// or as the n x n x (n/2+1) half-spectrum (Hermitian symmetry implied).
class Field {
public:
    Field() = default;

    static Field zeros(GridPtr grid, Representation rep);
    /// Samples fn(x, y, z) at the grid points x_i = i L / n.
    static Field from_function(GridPtr grid, const std::function<double(double, double, double)>& fn);
    static Field constant(GridPtr grid, double value);

    bool empty() const noexcept { return grid_ == nullptr; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    const SpectralGrid& grid() const noexcept { return *grid_; }
    Representation representation() const noexcept { return rep_; }
    bool is_physical() const noexcept { return rep_ == Representation::physical; }
    bool is_spectral() const noexcept { return rep_ == Representation::spectral; }

    /// Point values; throws RepresentationMismatch on a spectral field.
    std::span<double> values();
    std::span<const double> values() const;
    /// Stored half-spectrum; throws RepresentationMismatch on a physical field.
    std::span<cplx> modes();
    std::span<const cplx> modes() const;

    /// Grid coordinate of a physical point index.
    std::array<double, 3> point(std::size_t idx) const noexcept;

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double c);

private:
    Field(GridPtr grid, Representation rep);
    void require_same_layout(const Field& other) const;

    GridPtr grid_;
    Representation rep_ = Representation::physical;
    std::vector<double> real_;
    std::vector<cplx> spec_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double c, Field a);

using VecField = std::array<Field, 3>;

VecField zeros_vec(GridPtr grid, Representation rep);

}  // namespace nsdecay
