#include "xxc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xxc/errors.hpp"

namespace xxc {

namespace {

constexpr double kFailureWindow = 1e-8;
constexpr double kRealPathTol = 1e-14;

bool effectively_real(const Eigen::MatrixXcd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c).imag()) > kRealPathTol) return false;
  return true;
}

}  // namespace

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  // separate statements keep the two terms symmetric under x <-> 1-x
  // (a single expression invites an asymmetric fused multiply-add)
  const double y = 1.0 - x;
  const double a = x * std::log(x);
  const double b = y * std::log(y);
  return -(a + b);
}

OccupationSpectrum mode_occupations(const Eigen::MatrixXcd& correlation) {
  Eigen::VectorXd eigenvalues;
  if (effectively_real(correlation)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(correlation.real(),
                                                          Eigen::EigenvaluesOnly);
    eigenvalues = solver.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(correlation,
                                                           Eigen::EigenvaluesOnly);
    eigenvalues = solver.eigenvalues();
  }

  OccupationSpectrum out;
  out.values.resize(static_cast<std::size_t>(eigenvalues.size()));
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double v = eigenvalues(i);
    const double excursion = std::max(0.0 - v, v - 1.0);
    if (excursion > out.max_excursion) out.max_excursion = excursion;
    out.values[static_cast<std::size_t>(i)] = std::clamp(v, 0.0, 1.0);
  }
  if (out.max_excursion > kFailureWindow) {
    std::ostringstream msg;
    msg << "correlation eigenvalue " << out.max_excursion
        << " outside [0,1]; correlator construction is broken";
    throw SpectrumError(msg.str());
  }
  return out;
}

double block_entropy(const OccupationSpectrum& occ) {
  double total = 0.0;
  for (double v : occ.values) total += binary_entropy(v);
  return total;
}

EntropyValue entropy_from_sequence(const CorrelatorSequence& seq, int block_size,
                                   const ModelParams& p) {
  const Eigen::MatrixXcd g = build_correlation_matrix(block_size, seq);
  const OccupationSpectrum occ = mode_occupations(g);
  return {block_entropy(occ), block_size, p};
}

EntropyValue entropy_pipeline(const ModelParams& p, int block_size) {
  if (block_size < 1) throw ConfigError("block size must be >= 1");
  const auto seas = fermi_seas(p);
  const auto seq = correlator_sequence_infinite(block_size - 1, seas);
  return entropy_from_sequence(seq, block_size, p);
}

EntropyValue entropy_finite_chain(const ModelParams& p, int chain_length, double offset,
                                  int block_size) {
  if (block_size < 1 || block_size > chain_length)
    throw ConfigError("block size must be in [1, N]");
  const auto seq = correlator_sequence_finite(block_size - 1, chain_length, p, offset);
  return entropy_from_sequence(seq, block_size, p);
}

}  // namespace xxc
