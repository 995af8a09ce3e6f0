#pragma once

#include <numbers>
#include <utility>
#include <vector>

#include "xxc/entropy.hpp"
#include "xxc/model.hpp"

namespace xxc {

/// Constants entering the closed-form entropy offset on the hl = 1 line:
/// C = 1 + gamma_E - 6 I ln 2, with I a numerically evaluated integral.
namespace constants {
inline constexpr double entropy_integral = 0.0221603;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double offset_C =
    1.0 + euler_gamma - 6.0 * entropy_integral * std::numbers::ln2;
}  // namespace constants

/// Tabulated (L, S_L) at fixed parameters; L strictly increasing.
struct EntropySeries {
  ModelParams params;
  std::vector<std::pair<int, double>> points;
};

struct FitWindow {
  int lo = 0;
  int hi = 0;
};

/// Least-squares fit S = prefactor * ln L + offset. Fitting is done on
/// parity-damped points: consecutive (L, L+1) pairs are averaged and placed
/// at the geometric-mean abscissa (ln L + ln(L+1))/2, which damps the
/// filling-dependent even/odd oscillation and still recovers exact synthetic
/// data exactly. A pair participates iff its base L lies in the window.
struct LogFit {
  double prefactor = 0.0;
  double offset = 0.0;
  FitWindow window;
  double residual_rms = 0.0;      // damped points against the fit
  double raw_residual_rms = 0.0;  // raw in-window points against the fit
  int raw_points = 0;
};

/// Throws FitError when fewer than 8 raw points fall inside the window.
LogFit fit_log_growth(const EntropySeries& series, FitWindow window);

/// Which side of the high-symmetry crossing a symmetric-line parameter sits
/// on: k_lambda < k_h corresponds to 1/lambda in (1/sqrt2, 1).
enum class SymmetricBranch { KLambdaBelowKH, KLambdaAboveKH };

SymmetricBranch symmetric_branch(double lambda);

/// Closed-form constant term of S_L = (2/3) ln L + S0 on the hl = 1 line.
/// Throws DomainError when the branch radicand is non-positive (the
/// expression diverges logarithmically toward 1/lambda = 1/sqrt2).
double analytic_entropy_offset(double lambda, SymmetricBranch branch);

/// The factor f with scaled block length = L * f on the hl = 1 line, so that
/// S_L = (2/3)(ln(L f) + C). Zero exactly at 1/lambda = 1/sqrt2; throws
/// DomainError only for a negative radicand (wrong branch).
double scaling_length_factor(double lambda, SymmetricBranch branch);

/// Geometric grid of n distinct integers from lo to hi inclusive.
std::vector<int> geometric_grid(int lo, int hi, int n);

/// Adds L+1 for every L (for parity damping); sorted, deduplicated.
std::vector<int> with_parity_partners(const std::vector<int>& blocks);

/// Evaluates the entropy pipeline over the given block sizes in parallel.
EntropySeries entropy_series(const ModelParams& p, std::vector<int> blocks);

enum class TransitionLine {
  KhEqualsKLambda,  // anchor = h, path crosses the high-symmetry line
  KLambdaZero,      // anchor = h, path leaves lambda = 1 upward
  KhZero,           // anchor = lambda, path leaves h = 0 upward
};

/// One curve of the finite-size scaling analysis: delta_s(x) with
/// x = L * (distance to the transition in the characteristic wavenumber)
/// and delta_s = S_L(x) - S_L(transition). Signed x for the two-sided
/// high-symmetry crossing, x >= 0 for the one-sided lines.
struct ScalingCurve {
  double anchor = 0.0;
  int block_size = 0;
  double critical_entropy = 0.0;
  std::vector<double> x;
  std::vector<double> delta_s;
};

struct CollapseConfig {
  TransitionLine transition = TransitionLine::KhEqualsKLambda;
  std::vector<double> anchors;
  std::vector<int> block_sizes;
  double x_max = 12.0;
  int points_per_side = 64;
};

/// All curves share the same x grid; the critical entropy is computed at the
/// exact boundary parameter (lambda = 1/cos k_h on the high-symmetry line),
/// and the x = 0 sample is zero by construction. The farthest sample must
/// stay inside the adjacent phase or the config is rejected.
std::vector<ScalingCurve> scaling_collapse(const CollapseConfig& config);

/// Sup over the shared x grid of (max - min) across curves.
double collapse_spread(const std::vector<ScalingCurve>& curves);

}  // namespace xxc
