#include "nsdecay/field.hpp"

#include "nsdecay/errors.hpp"
#include "nsdecay/parallel.hpp"

namespace nsdecay {

Field::Field(GridPtr grid, Representation rep) : grid_(std::move(grid)), rep_(rep) {
    if (!grid_) throw InvalidArgument("field requires a grid");
    if (rep_ == Representation::physical)
        real_.assign(grid_->physical_size(), 0.0);
    else
        spec_.assign(grid_->spectral_size(), cplx{});
}

Field Field::zeros(GridPtr grid, Representation rep) { return Field(std::move(grid), rep); }

Field Field::from_function(GridPtr grid, const std::function<double(double, double, double)>& fn) {
    Field f(std::move(grid), Representation::physical);
    auto vals = f.values();
    kernels::for_each_index(vals.size(), [&](std::size_t i) {
        const auto x = f.point(i);
        vals[i] = fn(x[0], x[1], x[2]);
    });
    return f;
}

Field Field::constant(GridPtr grid, double value) {
    Field f(std::move(grid), Representation::physical);
    std::fill(f.real_.begin(), f.real_.end(), value);
    return f;
}

std::span<double> Field::values() {
    if (!is_physical()) throw RepresentationMismatch("values() on a spectral field");
    return real_;
}

std::span<const double> Field::values() const {
    if (!is_physical()) throw RepresentationMismatch("values() on a spectral field");
    return real_;
}

std::span<cplx> Field::modes() {
    if (!is_spectral()) throw RepresentationMismatch("modes() on a physical field");
    return spec_;
}

std::span<const cplx> Field::modes() const {
    if (!is_spectral()) throw RepresentationMismatch("modes() on a physical field");
    return spec_;
}

std::array<double, 3> Field::point(std::size_t idx) const noexcept {
    const auto n = static_cast<std::size_t>(grid_->n());
    const double h = grid_->dx();
    return {static_cast<double>(idx / (n * n)) * h, static_cast<double>((idx / n) % n) * h,
            static_cast<double>(idx % n) * h};
}

void Field::require_same_layout(const Field& other) const {
    if (grid_ != other.grid_) throw InvalidArgument("fields live on different grids");
    if (rep_ != other.rep_) throw RepresentationMismatch("fields in different representations");
}

Field& Field::operator+=(const Field& other) {
    require_same_layout(other);
    if (is_physical())
        kernels::for_each_index(real_.size(), [&](std::size_t i) { real_[i] += other.real_[i]; });
    else
        kernels::for_each_index(spec_.size(), [&](std::size_t i) { spec_[i] += other.spec_[i]; });
    return *this;
}

Field& Field::operator-=(const Field& other) {
    require_same_layout(other);
    if (is_physical())
        kernels::for_each_index(real_.size(), [&](std::size_t i) { real_[i] -= other.real_[i]; });
    else
        kernels::for_each_index(spec_.size(), [&](std::size_t i) { spec_[i] -= other.spec_[i]; });
    return *this;
}

Field& Field::operator*=(double c) {
    if (is_physical())
        kernels::for_each_index(real_.size(), [&](std::size_t i) { real_[i] *= c; });
    else
        kernels::for_each_index(spec_.size(), [&](std::size_t i) { spec_[i] *= c; });
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double c, Field a) { return a *= c; }

VecField zeros_vec(GridPtr grid, Representation rep) {
    return {Field::zeros(grid, rep), Field::zeros(grid, rep), Field::zeros(grid, rep)};
}

}  // namespace nsdecay
