#include "nsdecay/matrix_exp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Eigenvalues>

namespace nsdecay {

namespace {

constexpr int kPadeOrder = 6;

double one_norm(const CMatrix& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

struct EigenRoute {
    CMatrix vectors;
    CMatrix inverse;
    CVector values;
};

std::optional<EigenRoute> well_conditioned_eigen(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    Eigen::ComplexEigenSolver<CMatrix> solver(a, true);
    if (solver.info() != Eigen::Success) return std::nullopt;
    const CVector& vals = solver.eigenvalues();
    const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (std::abs(vals(i) - vals(j)) <= kCoalescenceTol * scale) return std::nullopt;
    EigenRoute r{solver.eigenvectors(), CMatrix(), vals};
    Eigen::PartialPivLU<CMatrix> lu(r.vectors);
    r.inverse = lu.inverse();
    const double cond = one_norm(r.vectors) * one_norm(r.inverse);
    if (!std::isfinite(cond) || cond > kEigenbasisCondLimit) return std::nullopt;
    return r;
}

template <class Fn>
CMatrix apply_function(const EigenRoute& r, Fn&& fn) {
    CVector d = r.values.unaryExpr([&](cplx z) { return fn(z); });
    return r.vectors * d.asDiagonal() * r.inverse;
}

}  // namespace

cplx phi1(cplx z) {
    if (std::abs(z) < 0.5) {
        cplx term{1.0, 0.0};
        cplx sum = term;
        for (int j = 1; j < 30; ++j) {
            term *= z / static_cast<double>(j + 1);
            sum += term;
        }
        return sum;
    }
    return (std::exp(z) - 1.0) / z;
}

cplx phi2(cplx z) {
    if (std::abs(z) < 0.5) {
        cplx term{0.5, 0.0};
        cplx sum = term;
        for (int j = 1; j < 30; ++j) {
            term *= z / static_cast<double>(j + 2);
            sum += term;
        }
        return sum;
    }
    return (std::exp(z) - 1.0 - z) / (z * z);
}

CMatrix expm_pade(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    const double norm = one_norm(a);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const CMatrix b = a / std::ldexp(1.0, squarings);

    // c_j = (2q - j)! q! / ((2q)! j! (q - j)!)
    std::array<double, kPadeOrder + 1> c{};
    c[0] = 1.0;
    for (int j = 1; j <= kPadeOrder; ++j)
        c[j] = c[j - 1] * static_cast<double>(kPadeOrder - j + 1) /
               (static_cast<double>(j) * static_cast<double>(2 * kPadeOrder - j + 1));

    const CMatrix id = CMatrix::Identity(n, n);
    CMatrix power = id;
    CMatrix num = c[0] * id;
    CMatrix den = c[0] * id;
    for (int j = 1; j <= kPadeOrder; ++j) {
        power = power * b;
        num += c[j] * power;
        den += ((j % 2 == 0) ? c[j] : -c[j]) * power;
    }
    CMatrix r = den.partialPivLu().solve(num);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

PhiMatrices phi_matrices(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    if (auto route = well_conditioned_eigen(a)) {
        return {apply_function(*route, [](cplx z) { return std::exp(z); }),
                apply_function(*route, [](cplx z) { return phi1(z); }),
                apply_function(*route, [](cplx z) { return phi2(z); }), false};
    }
    CMatrix aug = CMatrix::Zero(3 * n, 3 * n);
    aug.topLeftCorner(n, n) = a;
    aug.block(0, n, n, n) = CMatrix::Identity(n, n);
    aug.block(n, 2 * n, n, n) = CMatrix::Identity(n, n);
    const CMatrix e = expm_pade(aug);
    return {e.topLeftCorner(n, n), e.block(0, n, n, n), e.block(0, 2 * n, n, n), true};
}

CMatrix expm(const CMatrix& a, bool* used_fallback) {
    if (auto route = well_conditioned_eigen(a)) {
        if (used_fallback) *used_fallback = false;
        return apply_function(*route, [](cplx z) { return std::exp(z); });
    }
    if (used_fallback) *used_fallback = true;
    return expm_pade(a);
}

}  // namespace nsdecay
