#pragma once

#include <stdexcept>
#include <string>

namespace hawkes {

// Base class for all errors raised by the library.
class HawkesError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Structurally inconsistent inputs (vector/matrix shapes disagree).
class DimensionMismatchError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

// The branching matrix has spectral radius >= 1: the stationary process
// does not exist and none of the stationary quantities are defined.
class UnstableModelError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

// Tilt level at or beyond the integrability bound of the birth density.
class TiltTooLargeError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

// The birth-time c.g.f. system has no finite solution at the requested tilt.
class InfeasibleTiltError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

// A single cluster exceeded the configured event cap, which indicates a
// near-critical or misconfigured model rather than normal operation.
class ClusterSizeCapError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

// Statistics requested on an empty sample.
class EmptyInputError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

// Malformed configuration file or command-line input.
class ConfigError : public HawkesError {
  public:
    using HawkesError::HawkesError;
};

} // namespace hawkes
