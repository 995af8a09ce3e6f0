#include "xxc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace xxc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateTol = 1e-10;  // on interval length
constexpr double kBoundaryTol = 1e-9;     // on |k_h - k_lambda| for labels

// Antiderivative of (-cos k - h) sin k; even in k, so symmetric seas carry
// exactly zero current.
double current_antiderivative(double k, double h) {
  const double s = std::sin(k);
  return h * std::cos(k) - 0.5 * s * s;
}

}  // namespace

double dispersion(double k, const ModelParams& p) {
  return (-std::cos(k) - p.h) * (1.0 - p.lambda * std::sin(k));
}

CharacteristicWavenumbers characteristic_wavenumbers(const ModelParams& p) {
  p.validate();
  CharacteristicWavenumbers out;
  if (p.h <= 1.0) out.k_h = std::asin(p.h);
  if (p.lambda >= 1.0) out.k_lambda = std::acos(1.0 / p.lambda);
  return out;
}

double FermiSeaDecomposition::occupied_measure() const {
  double total = 0.0;
  for (const auto& sea : seas) total += sea.length();
  return total;
}

bool FermiSeaDecomposition::occupied(double k) const {
  for (const auto& sea : seas)
    if (sea.contains(k)) return true;
  return false;
}

FermiSeaDecomposition fermi_seas(const ModelParams& p) {
  p.validate();
  FermiSeaDecomposition out;

  // First factor is negative on (-a, a); for h >= 1 on the whole circle.
  // Second factor is negative on (b_lo, b_hi), empty for lambda <= 1.
  if (p.lambda <= 1.0) {
    if (p.h < 1.0) {
      const double a = std::acos(-p.h);
      out.seas.push_back({-a, a});
    } else {
      out.seas.push_back({-kPi, kPi});
    }
    out.sea_count = 1;
    return out;
  }

  const double b_lo = std::asin(1.0 / p.lambda);
  const double b_hi = kPi - b_lo;

  if (p.h >= 1.0) {
    // Everything except (b_lo, b_hi); one arc wrapping through +-pi.
    out.seas.push_back({-kPi, b_lo});
    out.seas.push_back({b_hi, kPi});
    out.sea_count = 1;
    return out;
  }

  const double a = std::acos(-p.h);  // in [pi/2, pi); always > b_lo
  if (b_hi < a) {
    // k_lambda < k_h: the negative lobe of the second factor sits inside
    // the first factor's sea and punches a hole in it.
    out.seas.push_back({-a, b_lo});
    out.seas.push_back({b_hi, a});
  } else {
    // k_lambda > k_h: the lobe sticks out past a and contributes new modes.
    out.seas.push_back({-a, b_lo});
    out.seas.push_back({a, b_hi});
  }

  // Tangential zeros: drop zero-length seas, close zero-length gaps. The
  // drop is what turns R = 2 into R = 1 on the k_h = k_lambda line.
  std::vector<Interval> kept;
  for (const auto& sea : out.seas) {
    if (sea.length() < kDegenerateTol) {
      out.degenerate = true;
      continue;
    }
    if (!kept.empty() && sea.lo - kept.back().hi < kDegenerateTol) {
      out.degenerate = true;
      kept.back().hi = sea.hi;
      continue;
    }
    kept.push_back(sea);
  }
  out.seas = std::move(kept);

  const bool wraps = out.seas.size() >= 2 && out.seas.front().lo == -kPi &&
                     out.seas.back().hi == kPi;
  out.sea_count = static_cast<int>(out.seas.size()) - (wraps ? 1 : 0);
  return out;
}

double current_density(const ModelParams& p) {
  const FermiSeaDecomposition seas = fermi_seas(p);
  double integral = 0.0;
  for (const auto& sea : seas.seas)
    integral += current_antiderivative(sea.hi, p.h) - current_antiderivative(sea.lo, p.h);
  return integral / (2.0 * kPi);
}

double transverse_magnetization(const ModelParams& p) {
  return fermi_seas(p).occupied_measure() / (2.0 * kPi) - 0.5;
}

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::NoCurrentCritical: return "NoCurrentCritical";
    case Phase::NoCurrentPolarized: return "NoCurrentPolarized";
    case Phase::Phase1: return "Phase1";
    case Phase::Phase2: return "Phase2";
    case Phase::Phase3: return "Phase3";
    case Phase::BoundaryHighSymmetry: return "BoundaryHighSymmetry";
    case Phase::BoundaryOther: return "BoundaryOther";
  }
  return "?";
}

PhaseLabel classify_phase(const ModelParams& p) {
  p.validate();
  PhaseLabel out;
  out.current_density = current_density(p);
  out.magnetization = transverse_magnetization(p);

  if (p.lambda <= 1.0) {
    out.phase = p.h < 1.0 ? Phase::NoCurrentCritical : Phase::NoCurrentPolarized;
    return out;
  }
  if (p.h >= 1.0) {
    out.phase = Phase::Phase3;
    return out;
  }

  const double k_h = std::asin(p.h);
  const double k_lambda = std::acos(1.0 / p.lambda);
  if (std::abs(k_h - k_lambda) <= kBoundaryTol) {
    out.phase = Phase::BoundaryHighSymmetry;
  } else if (k_lambda <= kBoundaryTol || k_h <= kBoundaryTol ||
             kPi / 2.0 - k_h <= kBoundaryTol) {
    out.phase = Phase::BoundaryOther;
  } else {
    out.phase = k_lambda < k_h ? Phase::Phase1 : Phase::Phase2;
  }
  return out;
}

}  // namespace xxc
