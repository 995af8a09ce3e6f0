#pragma once

#include <cmath>

#include "xxc/errors.hpp"

namespace xxc {

/// Parameters of the driven chain: transverse field h and the Lagrange
/// multiplier lambda conjugate to the energy current. Both dimensionless,
/// both required non-negative (negative h is not mapped by symmetry here).
struct ModelParams {
  double h = 0.0;
  double lambda = 0.0;

  void validate() const {
    if (!(h >= 0.0)) throw ConfigError("ModelParams: h must be >= 0");
    if (!(lambda >= 0.0)) throw ConfigError("ModelParams: lambda must be >= 0");
  }
};

inline bool operator==(const ModelParams& a, const ModelParams& b) {
  return a.h == b.h && a.lambda == b.lambda;
}

}  // namespace xxc
