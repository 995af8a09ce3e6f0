#pragma once

#include <stdexcept>
#include <string>

namespace xxc {

// Invalid model parameters or run configuration.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A discrete momentum mode sits on a Fermi point; its occupation is ambiguous
// and the caller has to change the chain length or the grid offset.
struct ZeroModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A correlation-matrix eigenvalue landed outside [0, 1] by more than the
// roundoff window; signals a correlator construction bug upstream.
struct SpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed-form expression evaluated outside its domain (wrong branch).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Not enough points inside the fit window.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degenerate many-body ground state; entropies are not well defined there.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xxc
