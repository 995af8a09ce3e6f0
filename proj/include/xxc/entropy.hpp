#pragma once

#include <vector>

#include <Eigen/Dense>

#include "xxc/correlations.hpp"
#include "xxc/model.hpp"

namespace xxc {

/// Eigenvalues of the block correlation matrix, ascending, clamped into
/// [0, 1]. max_excursion records the worst distance outside [0, 1] seen
/// before clamping; anything past 1e-8 is treated as a construction bug.
struct OccupationSpectrum {
  std::vector<double> values;
  double max_excursion = 0.0;
};

struct EntropyValue {
  double nats = 0.0;
  int block_size = 0;
  ModelParams params;
};

/// Entropy of a single fermionic mode with occupation x, with 0 ln 0 = 0.
double binary_entropy(double x);

/// Hermitian eigendecomposition of the correlation matrix. Eigenvalues within
/// 1e-10 of [0, 1] are clamped to the boundary; an excursion beyond 1e-8
/// throws SpectrumError. Matrices whose imaginary parts are all below 1e-14
/// take a real symmetric path.
OccupationSpectrum mode_occupations(const Eigen::MatrixXcd& correlation);

/// S = sum_n [ -v ln v - (1-v) ln(1-v) ] over the occupations, in nats.
double block_entropy(const OccupationSpectrum& occ);

/// fermi_seas -> correlators -> correlation matrix -> occupations -> entropy,
/// for a block of `block_size` contiguous sites of the infinite chain.
EntropyValue entropy_pipeline(const ModelParams& p, int block_size);

/// Same pipeline on the discrete momentum grid of an N-site chain; the grid
/// offset selects the fermion-parity sector (see oracle::match_sector).
EntropyValue entropy_finite_chain(const ModelParams& p, int chain_length, double offset,
                                  int block_size);

/// Entropy of a leading block straight from a coefficient sequence.
EntropyValue entropy_from_sequence(const CorrelatorSequence& seq, int block_size,
                                   const ModelParams& p);

}  // namespace xxc
