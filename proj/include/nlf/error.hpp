#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlf {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent input: incommensurate grids, bad parameters,
/// malformed config documents, initial data outside its admissible range.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The config text is not well-formed JSON.
class ParseError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// An API was called with arguments that do not belong together
/// (for example a kernel discretized for a different dx than the field).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A diagnostic could not be computed for the given data.
class AnalysisError : public Error {
public:
    using Error::Error;
};

/// A non-finite value appeared in the state during time stepping.
class SimulationDiverged : public Error {
public:
    SimulationDiverged(double t, std::size_t step, std::size_t node);

    double time() const noexcept { return t_; }
    std::size_t step() const noexcept { return step_; }
    std::size_t node() const noexcept { return node_; }

private:
    double t_;
    std::size_t step_;
    std::size_t node_;
};

}  // namespace nlf
