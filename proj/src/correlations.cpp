#include "xxc/correlations.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "xxc/errors.hpp"

namespace xxc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroModeTol = 1e-12;

// Complement of the seas within (-pi, pi]. Zero-length pieces are skipped.
std::vector<Interval> unoccupied_intervals(const FermiSeaDecomposition& seas) {
  std::vector<Interval> gaps;
  double cursor = -kPi;
  for (const auto& sea : seas.seas) {
    if (sea.lo > cursor) gaps.push_back({cursor, sea.lo});
    cursor = sea.hi;
  }
  if (cursor < kPi) gaps.push_back({cursor, kPi});
  return gaps;
}

void check_offset(double offset) {
  if (offset != 0.0 && offset != 0.5)
    throw ConfigError("momentum grid offset must be 0 or 1/2");
}

}  // namespace

std::complex<double> correlator_infinite(int l, const FermiSeaDecomposition& seas) {
  const auto gaps = unoccupied_intervals(seas);
  if (l == 0) {
    double measure = 0.0;
    for (const auto& gap : gaps) measure += gap.length();
    return {measure / (2.0 * kPi), 0.0};
  }
  std::complex<double> sum = 0.0;
  const double dl = static_cast<double>(l);
  for (const auto& gap : gaps) {
    const std::complex<double> hi{std::cos(dl * gap.hi), -std::sin(dl * gap.hi)};
    const std::complex<double> lo{std::cos(dl * gap.lo), -std::sin(dl * gap.lo)};
    sum += std::complex<double>(0.0, 1.0) * (hi - lo) / dl;
  }
  return sum / (2.0 * kPi);
}

CorrelatorSequence correlator_sequence_infinite(int max_offset,
                                                const FermiSeaDecomposition& seas) {
  if (max_offset < 0) throw ConfigError("max_offset must be >= 0");
  CorrelatorSequence seq;
  seq.source = CorrelatorSequence::Source::InfiniteChain;
  seq.coeff.resize(static_cast<std::size_t>(max_offset) + 1);
  for (int l = 0; l <= max_offset; ++l)
    seq.coeff[static_cast<std::size_t>(l)] = correlator_infinite(l, seas);
  return seq;
}

std::vector<double> momentum_grid(int chain_length, double offset) {
  if (chain_length < 2) throw ConfigError("chain length must be >= 2");
  check_offset(offset);
  std::vector<double> grid(static_cast<std::size_t>(chain_length));
  for (int n = 0; n < chain_length; ++n) {
    double k = 2.0 * kPi * (n + offset) / chain_length;
    if (k > kPi) k -= 2.0 * kPi;
    grid[static_cast<std::size_t>(n)] = k;
  }
  return grid;
}

std::complex<double> correlator_finite(int l, int chain_length, const ModelParams& p,
                                       double offset) {
  p.validate();
  const auto grid = momentum_grid(chain_length, offset);
  std::complex<double> sum = 0.0;
  for (double k : grid) {
    const double energy = dispersion(k, p);
    if (std::abs(energy) < kZeroModeTol) {
      std::ostringstream msg;
      msg << "zero mode at k = " << k << " on the N = " << chain_length
          << ", offset = " << offset << " grid";
      throw ZeroModeError(msg.str());
    }
    if (energy > 0.0)
      sum += std::complex<double>(std::cos(l * k), -std::sin(l * k));
  }
  return sum / static_cast<double>(chain_length);
}

CorrelatorSequence correlator_sequence_finite(int max_offset, int chain_length,
                                              const ModelParams& p, double offset) {
  if (max_offset < 0) throw ConfigError("max_offset must be >= 0");
  CorrelatorSequence seq;
  seq.source = CorrelatorSequence::Source::FiniteChain;
  seq.chain_length = chain_length;
  seq.grid_offset = offset;
  seq.coeff.resize(static_cast<std::size_t>(max_offset) + 1);
  for (int l = 0; l <= max_offset; ++l)
    seq.coeff[static_cast<std::size_t>(l)] = correlator_finite(l, chain_length, p, offset);
  // g_0 is a mode count over N; store it exactly real.
  seq.coeff[0] = {seq.coeff[0].real(), 0.0};
  return seq;
}

Eigen::MatrixXcd build_correlation_matrix(int block_size, const CorrelatorSequence& seq) {
  if (block_size < 1) throw ConfigError("block size must be >= 1");
  if (seq.max_offset() < block_size - 1)
    throw ConfigError("correlator sequence too short for the requested block");
  Eigen::MatrixXcd m(block_size, block_size);
  for (int r = 0; r < block_size; ++r) {
    m(r, r) = seq.g(0);
    for (int c = r + 1; c < block_size; ++c) {
      const std::complex<double> g = seq.g(c - r);
      m(r, c) = g;
      m(c, r) = std::conj(g);
    }
  }
  return m;
}

CorrelatorSequence shift_wavenumbers(const CorrelatorSequence& seq, double phi) {
  CorrelatorSequence out = seq;
  for (int l = 1; l <= out.max_offset(); ++l) {
    const std::complex<double> phase{std::cos(l * phi), -std::sin(l * phi)};
    out.coeff[static_cast<std::size_t>(l)] *= phase;
  }
  return out;
}

}  // namespace xxc
