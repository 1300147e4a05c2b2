#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nsdecay/models.hpp"

namespace nsdecay {

/// Negative-Sobolev indices carried by every record. Fixed so that the CSV
/// column set never depends on the run.
inline constexpr std::array<double, 4> kNegativeIndices{0.25, 0.5, 1.0, 1.4};

/// Column names of a DiagRecord, in CSV order (first column is "t").
const std::vector<std::string>& diag_schema();
inline constexpr int kSchemaVersion = 1;

/// Index of a column in diag_schema(); throws SchemaError if absent.
std::size_t diag_column(const std::string& name);

/// One time sample of every tracked quantity.
struct DiagRecord {
    std::vector<double> values;  ///< aligned with diag_schema()

    double t() const { return values.at(0); }
    double get(const std::string& name) const { return values.at(diag_column(name)); }
    void set(const std::string& name, double v) { values.at(diag_column(name)) = v; }
};

/// Column suffix for a negative index, e.g. 0.25 -> "s0.25".
std::string s_label(double s);

// ---- norms ----------------------------------------------------------------

/// ||Lambda^s f||_{L2} with Lambda <-> |xi|. Negative s requires zero mean.
double sobolev_norm(const Field& f, double s);
/// Same, applied to f minus its mean (box stand-in for the whole-space norm
/// of a field whose zero mode is not controlled).
double sobolev_norm_fluctuation(const Field& f, double s);
/// ||nabla^k f||_{L2}, k in {0,1,2,3}.
double hk_norm(const Field& f, int k);
/// ||f||_{H^k} = sqrt(sum_{j<=k} ||nabla^j f||^2).
double h_s_full(const Field& f, int k);
double hk_norm(const VecField& v, int k);
double h_s_full(const VecField& v, int k);

// ---- energy functionals ---------------------------------------------------

/// Value of an energy functional with its two-sided Cauchy-Schwarz envelope
/// lower <= value <= upper.
struct EnergyValue {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double base = 0.0;    ///< the norm combination the envelope scales
    double cross = 0.0;   ///< the integral of grad u : grad^2 a
};

/// Integral of sum_ij d_i u_j d_i d_j a.
double cross_term(const Field& a, const VecField& u);

/// ||grad u||_{H1}^2 + P'(1) ||grad a||_{H1}^2 + 2 delta0 cross,
/// delta0 in (0, min(1, P'(1)) / 2).
EnergyValue energy_E1(const State& state, double delta0, double pressure_slope);
/// ||grad a||_{H1}^2 + ||grad u||_{H1}^2 + ||grad theta||_{H1}^2 + delta cross, delta in (0, 1).
EnergyValue energy_E2(const State& state, double delta);

/// Canonical representatives of the equivalence classes X1, X2:
/// ||u||_{H1}^2 + ||a||_{H1}^2 + ||u_dot||^2 (+ ||theta||_{H1}^2).
double functional_X1(const State& state, const VecField& udot);
double functional_X2(const State& state, const VecField& udot);

/// Negative-Sobolev energy at index s: gamma ||L a||^2 + ||L((1+a)u)||^2 (isentropic)
/// or ||L a||^2 + ||L u||^2 + ||L theta||^2 (full), L = Lambda^{-s}, plus ||L u_dot||^2.
struct NegativeEnergy {
    double energy = 0.0;
    double a = 0.0;       ///< ||Lambda^-s a||
    double u = 0.0;       ///< ||Lambda^-s u||
    double theta = 0.0;   ///< ||Lambda^-s theta||
    double udot = 0.0;    ///< ||Lambda^-s u_dot|| (0 if not supplied)
    double total = 0.0;   ///< sqrt(a^2 + u^2 + theta^2)
};

/// Requires s in (0, 3/2) and a zero-mean density perturbation (mass 0 up to
/// kZeroMeanTol relative). Velocity, temperature and momentum are measured on
/// their fluctuating part.
NegativeEnergy neg_energy(const State& state, double s, const ModelParams& params,
                          const VecField* udot = nullptr);

// ---- Fourier splitting ----------------------------------------------------

struct SplitEnergy {
    double low = 0.0;
    double high = 0.0;
};

/// Partition of ||f||^2 at |2 pi xi|^2 <= R / (1 + t).
SplitEnergy fourier_split(const Field& f, double R, double t);
SplitEnergy fourier_split(const VecField& v, double R, double t);

/// ||grad^3 u||^2 - r ||grad^2 u||^2 + r^2 ||grad u||^2 with r = R / (1 + t).
double splitting_residual(const VecField& u, double R, double t);

// ---- snapshot -------------------------------------------------------------

struct DiagSettings {
    double delta0 = -1.0;  ///< <= 0 selects 0.1 min(1, P'(1))
    double delta = 0.1;
    double split_R = 10.0;
};

/// Full time derivative of u at the state: linear part plus nonlinear part.
VecField full_velocity_tendency(const State& state, const ModelParams& params, const Tendency& nonlinear);

/// Fully populated record. `nonlinear` must be the nonlinear tendency at `state`.
DiagRecord snapshot(const State& state, const ModelParams& params, const Tendency& nonlinear,
                    const DiagSettings& settings = {});
/// Convenience overload evaluating the nonlinear tendency itself.
DiagRecord snapshot(const State& state, const ModelParams& params, const DiagSettings& settings = {});

}  // namespace nsdecay
