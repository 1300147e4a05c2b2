#pragma once

#include <fftw3.h>

#include "nsdecay/grid.hpp"

namespace nsdecay {

/// FFTW r2c/c2r plans for one grid. Execution goes through the new-array
/// interface, so one plan pair serves every field on the grid and may be used
/// from several threads at once.
class FftPlans {
public:
    explicit FftPlans(int n);
    ~FftPlans();
    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;

    /// Unnormalized r2c transform.
    void forward(const double* in, cplx* out) const;
    /// Unnormalized c2r transform. Overwrites `in`.
    void inverse(cplx* in, double* out) const;

private:
    fftw_plan r2c_ = nullptr;
    fftw_plan c2r_ = nullptr;
};

}  // namespace nsdecay
