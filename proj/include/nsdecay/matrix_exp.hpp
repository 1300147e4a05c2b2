#pragma once

#include "nsdecay/linear_symbol.hpp"

namespace nsdecay {

/// exp(A) by scaling and squaring with a [6/6] Pade approximant.
CMatrix expm_pade(const CMatrix& a);

/// e^A, phi1(A), phi2(A) with phi1(z) = (e^z - 1)/z and phi2(z) = (e^z - 1 - z)/z^2.
struct PhiMatrices {
    CMatrix exp;
    CMatrix phi1;
    CMatrix phi2;
    bool used_fallback = false;
};

/// Eigendecomposition route; falls back to the Pade route on the augmented
/// matrix [[A, I, 0], [0, 0, I], [0, 0, 0]] when two eigenvalues are within
/// kCoalescenceTol (relative) of each other or the eigenbasis is ill-conditioned.
PhiMatrices phi_matrices(const CMatrix& a);

/// exp(A) only, same routing as phi_matrices.
CMatrix expm(const CMatrix& a, bool* used_fallback = nullptr);

inline constexpr double kCoalescenceTol = 1e-8;
inline constexpr double kEigenbasisCondLimit = 1e6;

/// Scalar phi functions, series near zero.
cplx phi1(cplx z);
cplx phi2(cplx z);

}  // namespace nsdecay
