#pragma once

#include <stdexcept>
#include <string>

namespace nsdecay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by a caller (bad grid size, out-of-range parameter, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Spectral/physical representation does not match the requested operation.
class RepresentationMismatch : public Error {
public:
    using Error::Error;
};

/// Negative power of Lambda requested on a field whose mean does not vanish.
class NegativePowerOnNonzeroMean : public Error {
public:
    using Error::Error;
};

/// 1 + a <= 0 somewhere on the grid (vacuum).
class DensityNonpositive : public Error {
public:
    explicit DensityNonpositive(double min_density)
        : Error("density nonpositive: min(1+a) = " + std::to_string(min_density)),
          min_density_(min_density) {}
    double min_density() const noexcept { return min_density_; }

private:
    double min_density_;
};

/// 1 + theta <= 0 somewhere on the grid.
class TemperatureNonpositive : public Error {
public:
    explicit TemperatureNonpositive(double min_temperature)
        : Error("temperature nonpositive: min(1+theta) = " + std::to_string(min_temperature)),
          min_temperature_(min_temperature) {}
    double min_temperature() const noexcept { return min_temperature_; }

private:
    double min_temperature_;
};

/// Advective CFL bound dt <= 0.5 dx / max|u| violated.
class CflViolation : public Error {
public:
    using Error::Error;
};

/// Initial-data amplitude cannot satisfy min(1+a) > 0.5 / min(1+theta) > 0.5.
class PositivityUnachievable : public Error {
public:
    PositivityUnachievable(const std::string& what, double max_amplitude)
        : Error(what), max_amplitude_(max_amplitude) {}
    double max_admissible_amplitude() const noexcept { return max_amplitude_; }

private:
    double max_amplitude_;
};

/// Adaptive quadrature failed to reach the requested relative tolerance.
class QuadratureNonconvergence : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Missing file, bad header, schema_version mismatch.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A time integration stopped early. Carries the time of the last good state.
class RunAborted : public Error {
public:
    enum class Cause { density, temperature, cfl };

    RunAborted(Cause cause, double t, const std::string& detail)
        : Error("run aborted at t=" + std::to_string(t) + ": " + detail), cause_(cause), t_(t) {}
    Cause cause() const noexcept { return cause_; }
    double time() const noexcept { return t_; }

private:
    Cause cause_;
    double t_;
};

}  // namespace nsdecay
