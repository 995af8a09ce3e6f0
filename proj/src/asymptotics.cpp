#include "xxc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xxc/errors.hpp"
#include "xxc/sweep.hpp"

namespace xxc {

namespace {

constexpr double kPi = std::numbers::pi;

double radicand(double lambda, SymmetricBranch branch) {
  if (!(lambda > 1.0)) throw DomainError("symmetric-line closed forms need lambda > 1");
  const double u = 1.0 / (lambda * lambda);
  // snap the branch point: lambda = sqrt(2) lands within rounding of u = 1/2
  const double edge = std::abs(2.0 * u - 1.0) <= 1e-14 ? 0.0 : 2.0 * u - 1.0;
  switch (branch) {
    case SymmetricBranch::KLambdaBelowKH:
      return 4.0 * (1.0 - u) * edge;
    case SymmetricBranch::KLambdaAboveKH:
      return -edge / (1.0 - u);
  }
  throw DomainError("unknown branch");
}

}  // namespace

SymmetricBranch symmetric_branch(double lambda) {
  if (!(lambda > 1.0)) throw DomainError("symmetric branch defined for lambda > 1");
  const double inv = 1.0 / lambda;
  if (inv == std::numbers::sqrt2 / 2.0)
    throw DomainError("1/lambda = 1/sqrt2 lies between the branches");
  return inv > std::numbers::sqrt2 / 2.0 ? SymmetricBranch::KLambdaBelowKH
                                         : SymmetricBranch::KLambdaAboveKH;
}

double analytic_entropy_offset(double lambda, SymmetricBranch branch) {
  const double r = radicand(lambda, branch);
  if (r <= 0.0) throw DomainError("non-positive radicand: wrong branch or phase boundary");
  return (2.0 / 3.0) * (std::log(std::sqrt(r)) + constants::offset_C);
}

double scaling_length_factor(double lambda, SymmetricBranch branch) {
  const double r = radicand(lambda, branch);
  if (r < 0.0) throw DomainError("negative radicand: wrong branch");
  return std::sqrt(r);
}

LogFit fit_log_growth(const EntropySeries& series, FitWindow window) {
  if (window.lo > window.hi) throw ConfigError("fit window: lo > hi");
  const auto& pts = series.points;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first <= pts[i - 1].first)
      throw ConfigError("entropy series must have strictly increasing block sizes");

  // Pair (L, L+1) neighbors first, then apply the window to the pair base.
  struct Sample {
    double x, y;
  };
  std::vector<Sample> damped;
  std::vector<Sample> raw;
  for (std::size_t i = 0; i < pts.size();) {
    const bool paired = i + 1 < pts.size() && pts[i + 1].first == pts[i].first + 1;
    const int base = pts[i].first;
    if (base >= window.lo && base <= window.hi) {
      if (paired) {
        damped.push_back({0.5 * (std::log(static_cast<double>(pts[i].first)) +
                                 std::log(static_cast<double>(pts[i + 1].first))),
                          0.5 * (pts[i].second + pts[i + 1].second)});
        raw.push_back({std::log(static_cast<double>(pts[i].first)), pts[i].second});
        raw.push_back({std::log(static_cast<double>(pts[i + 1].first)), pts[i + 1].second});
      } else {
        damped.push_back({std::log(static_cast<double>(base)), pts[i].second});
        raw.push_back(damped.back());
      }
    }
    i += paired ? 2 : 1;
  }
  if (raw.size() < 8) throw FitError("fewer than 8 points inside the fit window");

  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& s : damped) {
    mean_x += s.x;
    mean_y += s.y;
  }
  mean_x /= static_cast<double>(damped.size());
  mean_y /= static_cast<double>(damped.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& s : damped) {
    sxx += (s.x - mean_x) * (s.x - mean_x);
    sxy += (s.x - mean_x) * (s.y - mean_y);
  }
  if (sxx == 0.0) throw FitError("fit window spans a single block size");

  LogFit fit;
  fit.prefactor = sxy / sxx;
  fit.offset = mean_y - fit.prefactor * mean_x;
  fit.window = window;
  fit.raw_points = static_cast<int>(raw.size());

  auto rms = [&](const std::vector<Sample>& samples) {
    double ss = 0.0;
    for (const auto& s : samples) {
      const double r = s.y - (fit.prefactor * s.x + fit.offset);
      ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(samples.size()));
  };
  fit.residual_rms = rms(damped);
  fit.raw_residual_rms = rms(raw);
  return fit;
}

std::vector<int> geometric_grid(int lo, int hi, int n) {
  if (lo < 1 || hi < lo || n < 2 || hi - lo + 1 < n)
    throw ConfigError("bad geometric grid spec");
  std::vector<int> grid;
  grid.reserve(static_cast<std::size_t>(n));
  const double step = std::log(static_cast<double>(hi) / lo) / (n - 1);
  for (int j = 0; j < n; ++j) {
    int value = static_cast<int>(std::lround(lo * std::exp(step * j)));
    // rounding collisions at the small end bump up to stay distinct
    if (!grid.empty() && value <= grid.back()) value = grid.back() + 1;
    grid.push_back(std::min(value, hi));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<int> with_parity_partners(const std::vector<int>& blocks) {
  std::vector<int> out = blocks;
  for (int b : blocks) out.push_back(b + 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EntropySeries entropy_series(const ModelParams& p, std::vector<int> blocks) {
  p.validate();
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  if (blocks.empty() || blocks.front() < 1) throw ConfigError("block sizes must be >= 1");

  // One coefficient sequence serves every block size.
  const auto seas = fermi_seas(p);
  const auto seq = correlator_sequence_infinite(blocks.back() - 1, seas);

  const auto values = parallel_map<double>(
      static_cast<int>(blocks.size()), [&](int i) {
        return entropy_from_sequence(seq, blocks[static_cast<std::size_t>(i)], p).nats;
      });

  EntropySeries series;
  series.params = p;
  series.points.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    series.points.emplace_back(blocks[i], values[i]);
  return series;
}

namespace {

struct CollapsePoint {
  std::size_t curve;
  std::size_t slot;   // index into the curve's x grid; slot == npos -> critical
  ModelParams params;
  int block_size;
};

ModelParams params_on_path(TransitionLine line, double anchor, double dk) {
  switch (line) {
    case TransitionLine::KhEqualsKLambda: {
      const double k_h = std::asin(anchor);
      const double k_lambda = k_h - dk;
      return {anchor, 1.0 / std::cos(k_lambda)};
    }
    case TransitionLine::KLambdaZero:
      return {anchor, 1.0 / std::cos(dk)};
    case TransitionLine::KhZero:
      return {std::sin(dk), anchor};
  }
  throw ConfigError("unknown transition line");
}

void check_path_stays_inside(TransitionLine line, double anchor, double max_dk) {
  switch (line) {
    case TransitionLine::KhEqualsKLambda: {
      if (!(anchor > 0.0 && anchor < 1.0))
        throw ConfigError("high-symmetry collapse needs h in (0, 1)");
      const double k_h = std::asin(anchor);
      if (max_dk >= std::min(k_h, kPi / 2.0 - k_h))
        throw ConfigError("x_max/L leaves the phases adjacent to k_h = k_lambda");
      return;
    }
    case TransitionLine::KLambdaZero:
      if (!(anchor > 0.0 && anchor < 1.0))
        throw ConfigError("current-onset collapse needs h in (0, 1)");
      if (max_dk >= std::asin(anchor))
        throw ConfigError("x_max/L crosses the k_h = k_lambda line");
      return;
    case TransitionLine::KhZero:
      if (!(anchor > 1.0)) throw ConfigError("k_h = 0 collapse needs lambda > 1");
      if (max_dk >= std::acos(1.0 / anchor))
        throw ConfigError("x_max/L crosses the k_h = k_lambda line");
      return;
  }
}

}  // namespace

std::vector<ScalingCurve> scaling_collapse(const CollapseConfig& config) {
  if (config.anchors.empty() || config.block_sizes.empty())
    throw ConfigError("collapse needs at least one anchor and one block size");
  if (!(config.x_max > 0.0) || config.points_per_side < 1)
    throw ConfigError("collapse needs x_max > 0 and points_per_side >= 1");

  const bool two_sided = config.transition == TransitionLine::KhEqualsKLambda;
  const int pps = config.points_per_side;

  std::vector<ScalingCurve> curves;
  std::vector<CollapsePoint> tasks;
  for (double anchor : config.anchors) {
    for (int block : config.block_sizes) {
      if (block < 1) throw ConfigError("block sizes must be >= 1");
      check_path_stays_inside(config.transition, anchor, config.x_max / block);

      ScalingCurve curve;
      curve.anchor = anchor;
      curve.block_size = block;
      for (int j = two_sided ? -pps : 0; j <= pps; ++j)
        curve.x.push_back(config.x_max * j / pps);
      curve.delta_s.assign(curve.x.size(), 0.0);

      const std::size_t curve_index = curves.size();
      tasks.push_back({curve_index, static_cast<std::size_t>(-1),
                       params_on_path(config.transition, anchor, 0.0), block});
      for (std::size_t slot = 0; slot < curve.x.size(); ++slot) {
        if (curve.x[slot] == 0.0) continue;  // delta_s = 0 by construction
        tasks.push_back({curve_index, slot,
                         params_on_path(config.transition, anchor, curve.x[slot] / block),
                         block});
      }
      curves.push_back(std::move(curve));
    }
  }

  const auto values = parallel_map<double>(
      static_cast<int>(tasks.size()), [&](int i) {
        const auto& t = tasks[static_cast<std::size_t>(i)];
        return entropy_pipeline(t.params, t.block_size).nats;
      });

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    if (t.slot == static_cast<std::size_t>(-1))
      curves[t.curve].critical_entropy = values[i];
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    if (t.slot != static_cast<std::size_t>(-1))
      curves[t.curve].delta_s[t.slot] = values[i] - curves[t.curve].critical_entropy;
  }
  return curves;
}

double collapse_spread(const std::vector<ScalingCurve>& curves) {
  if (curves.empty()) throw ConfigError("no curves");
  for (const auto& c : curves)
    if (c.x != curves.front().x)
      throw ConfigError("curves do not share an x grid");
  double spread = 0.0;
  for (std::size_t j = 0; j < curves.front().x.size(); ++j) {
    double lo = curves.front().delta_s[j];
    double hi = lo;
    for (const auto& c : curves) {
      lo = std::min(lo, c.delta_s[j]);
      hi = std::max(hi, c.delta_s[j]);
    }
    spread = std::max(spread, hi - lo);
  }
  return spread;
}

}  // namespace xxc
