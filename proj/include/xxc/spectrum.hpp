#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xxc/model.hpp"

namespace xxc {

/// Single-particle energy of the driven chain,
///   (-cos k - h) * (1 - lambda * sin k),
/// for a wavenumber k in (-pi, pi]. Negative-energy modes are occupied in
/// the ground state. The lambda term breaks k -> -k symmetry.
double dispersion(double k, const ModelParams& p);

/// k_h = arcsin(h), defined for h <= 1; k_lambda = arccos(1/lambda),
/// defined for lambda >= 1. Their comparison organizes the phase diagram;
/// k_h = k_lambda is the high-symmetry line where two seas merge into one.
struct CharacteristicWavenumbers {
  std::optional<double> k_h;
  std::optional<double> k_lambda;
};

CharacteristicWavenumbers characteristic_wavenumbers(const ModelParams& p);

/// Open interval (lo, hi) of wavenumbers, a subset of (-pi, pi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double k) const { return lo < k && k < hi; }
};

/// Maximal arcs of negative-energy modes. Intervals are disjoint, sorted by
/// left endpoint and stored within (-pi, pi]; sea_count counts arcs on the
/// circle, so an interval ending at pi merges with one starting at -pi.
/// `degenerate` is set when a zero-length sea (coincident dispersion zeros,
/// e.g. on the k_h = k_lambda line) was dropped, or a zero-length gap between
/// seas was closed; tolerance 1e-10 on the length.
struct FermiSeaDecomposition {
  std::vector<Interval> seas;
  int sea_count = 0;
  bool degenerate = false;

  double occupied_measure() const;
  bool occupied(double k) const;
};

/// Sea endpoints are computed from the analytic zeros of the two dispersion
/// factors (cos k = -h, sin k = 1/lambda), not by root finding.
FermiSeaDecomposition fermi_seas(const ModelParams& p);

/// Energy current density carried by the ground state,
///   j = (1/2pi) Int_occupied (-cos k - h) sin k dk,
/// evaluated in closed form per sea. Zero for lambda <= 1, positive past the
/// onset for h < 1.
double current_density(const ModelParams& p);

/// Transverse magnetization per site, (occupied measure)/(2 pi) - 1/2.
double transverse_magnetization(const ModelParams& p);

enum class Phase {
  NoCurrentCritical,     // h < 1, lambda <= 1
  NoCurrentPolarized,    // h >= 1, lambda <= 1
  Phase1,                // lambda > 1, h < 1, k_lambda < k_h
  Phase2,                // lambda > 1, h < 1, k_lambda > k_h
  Phase3,                // lambda > 1, h >= 1
  BoundaryHighSymmetry,  // lambda > 1, |k_h - k_lambda| <= 1e-9
  BoundaryOther,         // lambda > 1, within 1e-9 of the k_lambda = 0 / h = 0 / h = 1 edges
};

const char* phase_name(Phase phase);

struct PhaseLabel {
  Phase phase = Phase::NoCurrentCritical;
  double current_density = 0.0;
  double magnetization = 0.0;
};

/// Classifies by the characteristic-wavenumber rules; transition lines are
/// measure-zero, so the k_h = k_lambda test uses an absolute 1e-9 tolerance
/// and callers doing scaling studies pass exact boundary parameters.
PhaseLabel classify_phase(const ModelParams& p);

}  // namespace xxc
