#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "xxc/model.hpp"
#include "xxc/spectrum.hpp"

namespace xxc {

/// Two-point correlator coefficients g_l, stored for l >= 0 only; g_{-l} is
/// the complex conjugate by construction (Hermiticity of the correlation
/// matrix). The occupation convention: g_l is the Fourier transform of the
/// characteristic function of the UNOCCUPIED modes, so g_0 is the unoccupied
/// fraction of the circle. The opposite convention maps every occupation
/// eigenvalue to 1 - lambda_n and leaves entropies unchanged.
struct CorrelatorSequence {
  enum class Source { InfiniteChain, FiniteChain };

  std::vector<std::complex<double>> coeff;  // g_0 .. g_max
  Source source = Source::InfiniteChain;
  int chain_length = 0;    // N, finite chains only
  double grid_offset = 0;  // 0 or 1/2, finite chains only

  int max_offset() const { return static_cast<int>(coeff.size()) - 1; }

  std::complex<double> g(int l) const {
    return l >= 0 ? coeff[static_cast<std::size_t>(l)]
                  : std::conj(coeff[static_cast<std::size_t>(-l)]);
  }
};

/// Closed-form g_l of the infinite chain: per unoccupied interval (a, b) the
/// integral of e^{-il theta}/(2 pi) is (b - a)/(2 pi) for l = 0 and
/// i (e^{-ilb} - e^{-ila})/(2 pi l) otherwise. Exact at large |l| where
/// quadrature would struggle with the oscillation.
std::complex<double> correlator_infinite(int l, const FermiSeaDecomposition& seas);

CorrelatorSequence correlator_sequence_infinite(int max_offset, const FermiSeaDecomposition& seas);

/// Momentum grid of an N-site periodic chain, k_n = 2 pi (n + offset)/N
/// mapped into (-pi, pi]. Offset 0 corresponds to the odd fermion-parity
/// sector, offset 1/2 to the even one.
std::vector<double> momentum_grid(int chain_length, double offset);

/// Finite-chain analogue: g_l = (1/N) sum over grid modes with positive
/// energy of e^{-ilk}. Throws ZeroModeError when a grid mode has
/// |energy| < 1e-12 rather than assigning it silently.
std::complex<double> correlator_finite(int l, int chain_length, const ModelParams& p,
                                       double offset);

CorrelatorSequence correlator_sequence_finite(int max_offset, int chain_length,
                                              const ModelParams& p, double offset);

/// L x L Toeplitz matrix with entry (m, n) = g_{n-m}. Hermitian by
/// construction: the lower triangle is the conjugate of the upper.
Eigen::MatrixXcd build_correlation_matrix(int block_size, const CorrelatorSequence& seq);

/// Translate all sea intervals by phi: g_l -> e^{-il phi} g_l. The induced
/// map on the correlation matrix is conjugation by a diagonal unitary, so
/// occupation spectra and entropies are unchanged.
CorrelatorSequence shift_wavenumbers(const CorrelatorSequence& seq, double phi);

}  // namespace xxc
