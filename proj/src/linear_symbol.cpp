#include "nsdecay/linear_symbol.hpp"

#include <cmath>

#include "nsdecay/grid.hpp"

namespace nsdecay {

CMatrix linear_symbol(const std::array<double, 3>& xi, const ModelParams& params) {
    const bool full = params.model == ModelKind::fcns;
    const int dim = full ? 5 : 4;
    CMatrix m = CMatrix::Zero(dim, dim);
    const std::array<double, 3> eta{kTwoPi * xi[0], kTwoPi * xi[1], kTwoPi * xi[2]};
    const double eta2 = eta[0] * eta[0] + eta[1] * eta[1] + eta[2] * eta[2];
    const cplx i_unit{0.0, 1.0};
    const double slope = params.pressure_slope();
    for (int j = 0; j < 3; ++j) {
        m(0, 1 + j) = -i_unit * eta[j];
        m(1 + j, 0) = -i_unit * slope * eta[j];
        for (int k = 0; k < 3; ++k) {
            m(1 + j, 1 + k) = -(params.mu + params.lambda_v) * eta[j] * eta[k];
        }
        m(1 + j, 1 + j) -= params.mu * eta2;
        if (full) {
            m(1 + j, 4) = -i_unit * eta[j];
            m(4, 1 + j) = -i_unit * eta[j];
        }
    }
    if (full) m(4, 4) = -eta2;
    return m;
}

CMatrix longitudinal_block(double rho, const ModelParams& params) {
    const int dim = longitudinal_size(params);
    CMatrix m = CMatrix::Zero(dim, dim);
    const cplx i_rho{0.0, rho};
    m(0, 1) = -i_rho;
    m(1, 0) = -params.pressure_slope() * i_rho;
    m(1, 1) = -params.longitudinal_viscosity() * rho * rho;
    if (dim == 3) {
        m(1, 2) = -i_rho;
        m(2, 1) = -i_rho;
        m(2, 2) = -rho * rho;
    }
    return m;
}

}  // namespace nsdecay
