#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include <omp.h>

#include "nsdecay/grid.hpp"

// Data-parallel loop kernels. Every kernel exists twice: an OpenMP version in
// `kernels::omp` used by the library, and a plain-loop reference in
// `kernels::serial` kept for tests and the benchmark. The dispatching entry
// points in `kernels` pick one according to the calling thread's ExecMode.
//
// Reductions are deterministic irrespective of thread count: partial sums are
// taken per x-slab and combined in slab order.

namespace nsdecay {

/// Threads used by the OpenMP kernels; NSDECAY_THREADS caps the default.
int configured_threads();
/// Applies NSDECAY_THREADS (if set) to the OpenMP runtime. Idempotent.
void apply_thread_cap();

namespace kernels {

enum class ExecMode { parallel, serial };

ExecMode exec_mode() noexcept;

/// Forces the given mode on the current thread for the guard's lifetime.
class ScopedExec {
public:
    explicit ScopedExec(ExecMode mode) noexcept;
    ~ScopedExec();
    ScopedExec(const ScopedExec&) = delete;
    ScopedExec& operator=(const ScopedExec&) = delete;

private:
    ExecMode previous_;
};

namespace serial {

template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

template <class Fn>
double sum_over(std::size_t count, Fn&& fn) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += fn(i);
    return acc;
}

template <class Fn>
double max_over(std::size_t count, Fn&& fn) {
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        const double v = fn(i);
        if (v > acc) acc = v;
    }
    return acc;
}

}  // namespace serial

namespace omp {

template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

/// Sum over [0, count) in `slabs` contiguous blocks; block results are added
/// in order so the value does not depend on the thread count.
template <class Fn>
double sum_over(std::size_t count, Fn&& fn, std::size_t slabs = 64) {
    if (count == 0) return 0.0;
    if (slabs > count) slabs = count;
    std::vector<double> partial(slabs, 0.0);
    const auto ns = static_cast<std::ptrdiff_t>(slabs);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < ns; ++s) {
        const std::size_t lo = count * static_cast<std::size_t>(s) / slabs;
        const std::size_t hi = count * static_cast<std::size_t>(s + 1) / slabs;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += fn(i);
        partial[static_cast<std::size_t>(s)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

template <class Fn>
double max_over(std::size_t count, Fn&& fn) {
    double acc = -std::numeric_limits<double>::infinity();
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) reduction(max : acc)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double v = fn(static_cast<std::size_t>(i));
        if (v > acc) acc = v;
    }
    return acc;
}

}  // namespace omp

template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
    if (exec_mode() == ExecMode::serial)
        serial::for_each_index(count, fn);
    else
        omp::for_each_index(count, fn);
}

template <class Fn>
double sum_over(std::size_t count, Fn&& fn) {
    return exec_mode() == ExecMode::serial ? serial::sum_over(count, fn) : omp::sum_over(count, fn);
}

template <class Fn>
double max_over(std::size_t count, Fn&& fn) {
    return exec_mode() == ExecMode::serial ? serial::max_over(count, fn) : omp::max_over(count, fn);
}

template <class Fn>
double min_over(std::size_t count, Fn&& fn) {
    return -max_over(count, [&](std::size_t i) { return -fn(i); });
}

/// Sum of multiplicity-weighted per-mode contributions over the stored half grid,
/// i.e. a sum over the full Hermitian mode set.
template <class Fn>
double sum_over_modes(const SpectralGrid& grid, Fn&& fn) {
    return sum_over(grid.spectral_size(), [&](std::size_t i) { return grid.multiplicity(i) * fn(i); });
}

}  // namespace kernels
}  // namespace nsdecay
