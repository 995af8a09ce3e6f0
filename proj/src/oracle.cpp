#include "xxc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>
#include <vector>

#include "xxc/correlations.hpp"
#include "xxc/entropy.hpp"
#include "xxc/errors.hpp"
#include "xxc/spectrum.hpp"

namespace xxc {

namespace {

using Complex = std::complex<double>;

constexpr double kHermiticityTol = 1e-12;
constexpr double kCommutatorTol = 1e-10;
constexpr double kDegenerateGap = 1e-10;
constexpr double kSectorEnergyTol = 1e-9;
constexpr double kZeroModeTol = 1e-12;

enum class PauliKind { X, Y, Z };

struct SiteOp {
  int site;  // 1-based
  PauliKind kind;
};

// Adds coeff * product of single-site spin operators to H. Site l lives on
// bit l-1, bit value 1 = spin up. Operators are applied right-to-left, so a
// term like z_l y_{l-1} x_{l+1} is built in its written order (this matters
// only when two factors land on the same site, e.g. N = 2 rings).
void add_term(Eigen::MatrixXcd& h, Complex coeff, const std::vector<SiteOp>& ops,
              double site_scale) {
  const Eigen::Index dim = h.rows();
  for (std::size_t i = 0; i < ops.size(); ++i) coeff *= site_scale;
  for (Eigen::Index r = 0; r < dim; ++r) {
    auto c = static_cast<unsigned long long>(r);
    Complex v = coeff;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const unsigned long long mask = 1ull << (it->site - 1);
      const bool up = (c & mask) != 0;
      switch (it->kind) {
        case PauliKind::Z:
          v *= up ? 1.0 : -1.0;
          break;
        case PauliKind::X:
          c ^= mask;
          break;
        case PauliKind::Y:
          v *= up ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
          c ^= mask;
          break;
      }
    }
    h(static_cast<Eigen::Index>(c), r) += v;
  }
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r <= c; ++r)
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

// Exact max-norm commutator for small dimensions; deterministic random
// matvec probes above that (the dense product at dim 4096 costs as much as
// the eigensolve itself). The probe residual is measured relative to the
// magnitude of the products.
void assert_commuting(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::Index dim = a.rows();
  if (dim <= 1024) {
    const Eigen::MatrixXcd c = a * b - b * a;
    const double worst = c.cwiseAbs().maxCoeff();
    if (worst > kCommutatorTol) {
      std::ostringstream msg;
      msg << "operators do not commute: max |[A,B]| = " << worst;
      throw std::logic_error(msg.str());
    }
    return;
  }
  std::uint64_t lcg = 0x243f6a8885a308d3ull;
  auto next_unit = [&lcg] {
    lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(lcg >> 11) / 9007199254740992.0 - 0.5;
  };
  for (int probe = 0; probe < 4; ++probe) {
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(next_unit(), next_unit());
    v.normalize();
    const Eigen::VectorXcd ab = a * (b * v);
    const Eigen::VectorXcd ba = b * (a * v);
    const double scale = std::max(1.0, std::max(ab.norm(), ba.norm()));
    if ((ab - ba).norm() / scale > kCommutatorTol) {
      std::ostringstream msg;
      msg << "operators do not commute: probe residual "
          << (ab - ba).norm() / scale;
      throw std::logic_error(msg.str());
    }
  }
}

bool conserves_fermion_number(const Eigen::MatrixXcd& h) {
  const Eigen::Index dim = h.rows();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const int pc = std::popcount(static_cast<unsigned long long>(c));
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (h(r, c) != 0.0 &&
          std::popcount(static_cast<unsigned long long>(r)) != pc)
        return false;
    }
  }
  return true;
}

}  // namespace

Hamiltonians build_hamiltonians(int sites, const ModelParams& p, SpinNormalization norm) {
  p.validate();
  if (sites < 2 || sites > 14)
    throw ConfigError("oracle chain length must be in [2, 14]");
  const Eigen::Index dim = Eigen::Index(1) << sites;
  const double scale = norm == SpinNormalization::SpinHalf ? 0.5 : 1.0;

  Hamiltonians ops;
  ops.xx = Eigen::MatrixXcd::Zero(dim, dim);
  ops.current = Eigen::MatrixXcd::Zero(dim, dim);

  auto wrap = [sites](int l) { return (l - 1 + sites) % sites + 1; };
  for (int l = 1; l <= sites; ++l) {
    const int prev = wrap(l - 1);
    const int next = wrap(l + 1);
    add_term(ops.xx, -1.0, {{l, PauliKind::X}, {next, PauliKind::X}}, scale);
    add_term(ops.xx, -1.0, {{l, PauliKind::Y}, {next, PauliKind::Y}}, scale);
    add_term(ops.xx, -p.h, {{l, PauliKind::Z}}, scale);

    // On a two-site ring l-1 and l+1 coincide and the three-site terms
    // collapse to commutators: the literal sum is anti-Hermitian with zero
    // Hermitian part (the field part cancels pairwise as well), so the
    // current operator of the 2-ring is zero.
    if (sites > 2) {
      add_term(ops.current, 1.0,
               {{l, PauliKind::Z}, {prev, PauliKind::Y}, {next, PauliKind::X}}, scale);
      add_term(ops.current, -1.0,
               {{l, PauliKind::Z}, {prev, PauliKind::X}, {next, PauliKind::Y}}, scale);
      add_term(ops.current, p.h, {{l, PauliKind::X}, {next, PauliKind::Y}}, scale);
      add_term(ops.current, -p.h, {{l, PauliKind::Y}, {next, PauliKind::X}}, scale);
    }
  }
  ops.driven = ops.xx - p.lambda * ops.current;

  if (hermiticity_defect(ops.xx) > kHermiticityTol ||
      hermiticity_defect(ops.current) > kHermiticityTol)
    throw std::logic_error("operator construction lost Hermiticity");
  assert_commuting(ops.xx, ops.current);
  return ops;
}

GroundState ground_state(const Eigen::MatrixXcd& hamiltonian) {
  const Eigen::Index dim = hamiltonian.rows();
  if (dim < 2 || hamiltonian.cols() != dim)
    throw ConfigError("ground_state needs a square matrix of dimension >= 2");

  GroundState out;
  const bool power_of_two = (dim & (dim - 1)) == 0;
  if (power_of_two && conserves_fermion_number(hamiltonian)) {
    const int sites = std::countr_zero(static_cast<unsigned long long>(dim));
    std::vector<std::vector<Eigen::Index>> groups(static_cast<std::size_t>(sites) + 1);
    for (Eigen::Index r = 0; r < dim; ++r)
      groups[static_cast<std::size_t>(
                 std::popcount(static_cast<unsigned long long>(r)))]
          .push_back(r);

    double best = std::numeric_limits<double>::infinity();
    double second = best;
    Eigen::VectorXcd best_vector;
    std::vector<Eigen::Index> best_indices;
    for (const auto& idx : groups) {
      const auto m = static_cast<Eigen::Index>(idx.size());
      Eigen::MatrixXcd sub(m, m);
      for (Eigen::Index c = 0; c < m; ++c)
        for (Eigen::Index r = 0; r < m; ++r) sub(r, c) = hamiltonian(idx[r], idx[c]);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub);
      for (Eigen::Index i = 0; i < m; ++i) {
        const double e = solver.eigenvalues()(i);
        if (e < best) {
          second = best;
          best = e;
          best_vector = solver.eigenvectors().col(0);
          best_indices = idx;
        } else if (e < second) {
          second = e;
        }
      }
    }
    out.amplitudes = Eigen::VectorXcd::Zero(dim);
    for (std::size_t i = 0; i < best_indices.size(); ++i)
      out.amplitudes(best_indices[i]) = best_vector(static_cast<Eigen::Index>(i));
    out.energy = best;
    out.gap = second - best;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
    out.amplitudes = solver.eigenvectors().col(0);
    out.energy = solver.eigenvalues()(0);
    out.gap = solver.eigenvalues()(1) - out.energy;
  }
  out.degenerate = out.gap < kDegenerateGap;
  return out;
}

Eigen::MatrixXcd reduced_density_matrix(const Eigen::VectorXcd& state, int sites,
                                        int block_size) {
  if (block_size < 1 || block_size >= sites)
    throw ConfigError("block must satisfy 1 <= L < N");
  if (state.size() != (Eigen::Index(1) << sites))
    throw ConfigError("state dimension does not match the site count");
  const Eigen::Index dl = Eigen::Index(1) << block_size;
  const Eigen::Index dr = Eigen::Index(1) << (sites - block_size);
  // Sites 1..L are the low bits, so the state reshapes column-major into
  // (block configurations) x (environment configurations).
  const Eigen::Map<const Eigen::MatrixXcd> m(state.data(), dl, dr);
  return m * m.adjoint();
}

double reduce_and_entropy(const Eigen::VectorXcd& state, int sites, int block_size) {
  const Eigen::MatrixXcd rho = reduced_density_matrix(state, sites, block_size);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double prob = solver.eigenvalues()(i);
    if (prob > 0.0) entropy -= prob * std::log(prob);
  }
  return entropy;
}

Eigen::VectorXcd translate(const Eigen::VectorXcd& state, int sites) {
  const auto dim = static_cast<unsigned long long>(Eigen::Index(1) << sites);
  if (state.size() != static_cast<Eigen::Index>(dim))
    throw ConfigError("state dimension does not match the site count");
  Eigen::VectorXcd out(state.size());
  for (unsigned long long r = 0; r < dim; ++r) {
    const unsigned long long shifted = ((r << 1) | (r >> (sites - 1))) & (dim - 1);
    out(static_cast<Eigen::Index>(shifted)) = state(static_cast<Eigen::Index>(r));
  }
  return out;
}

double fermion_parity(const Eigen::VectorXcd& state, int sites) {
  const Eigen::Index dim = Eigen::Index(1) << sites;
  if (state.size() != dim) throw ConfigError("state dimension does not match the site count");
  double parity = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    const double w = std::norm(state(r));
    parity += (std::popcount(static_cast<unsigned long long>(r)) & 1) ? -w : w;
  }
  return parity;
}

double expectation(const Eigen::MatrixXcd& op, const Eigen::VectorXcd& state) {
  return (state.adjoint() * op * state)(0, 0).real();
}

SectorEnergy free_fermion_sector_energy(int sites, const ModelParams& p, double offset) {
  SectorEnergy out;
  for (double k : momentum_grid(sites, offset)) {
    const double energy = dispersion(k, p);
    if (std::abs(energy) < kZeroModeTol) {
      out.zero_modes = true;
      continue;
    }
    if (energy < 0.0) {
      out.energy += energy;
      ++out.filled;
    }
  }
  out.energy += sites * p.h / 2.0;
  return out;
}

SectorMatch match_sector(int sites, const ModelParams& p, double ground_energy) {
  for (double offset : {0.5, 0.0}) {
    const SectorEnergy se = free_fermion_sector_energy(sites, p, offset);
    if (se.zero_modes) continue;
    const bool parity_consistent = (se.filled % 2 == 0) == (offset == 0.5);
    if (!parity_consistent) continue;
    if (std::abs(se.energy - ground_energy) <= kSectorEnergyTol)
      return {offset, se.filled, se.energy};
  }
  throw DegenerateError(
      "no momentum sector reproduces the many-body ground energy; "
      "degenerate or zero-mode-afflicted point, perturb the parameters");
}

OracleComparison oracle_compare(int sites, const ModelParams& p,
                                const std::vector<int>& blocks, SpinNormalization norm,
                                bool perturb_on_degeneracy) {
  if (norm != SpinNormalization::SpinHalf)
    throw ConfigError(
        "the cross-method comparison is defined in the spin-half convention; "
        "the Pauli normalization realizes the same models at (2h, lambda/2)");
  for (int block : blocks)
    if (block < 1 || block >= sites) throw ConfigError("blocks must satisfy 1 <= L < N");

  ModelParams params = p;
  for (int attempt = 0;; ++attempt) {
    const Hamiltonians ops = build_hamiltonians(sites, params, norm);
    const GroundState gs = ground_state(ops.driven);
    if (gs.degenerate) {
      if (perturb_on_degeneracy && attempt == 0) {
        params.h += 1e-6;
        continue;
      }
      std::ostringstream msg;
      msg << "degenerate ground state (gap " << gs.gap << ") at h = " << params.h
          << ", lambda = " << params.lambda;
      throw DegenerateError(msg.str());
    }
    const SectorMatch sector = match_sector(sites, params, gs.energy);

    OracleComparison out;
    out.params = params;
    out.offset = sector.offset;
    out.ground_energy = gs.energy;
    out.gap = gs.gap;
    out.rows.reserve(blocks.size());
    for (int block : blocks) {
      OracleRow row;
      row.block_size = block;
      row.entropy_ed = reduce_and_entropy(gs.amplitudes, sites, block);
      row.entropy_correlation =
          entropy_finite_chain(params, sites, sector.offset, block).nats;
      out.rows.push_back(row);
    }
    return out;
  }
}

}  // namespace xxc
