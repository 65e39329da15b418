#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hdet/spectra.hpp"
#include "hdet/types.hpp"

namespace hdet {

enum class Invariant { S, T, HDet };

double invariant_magnitude(const InvariantTriple& inv, Invariant which);

struct MinimizerOptions {
  int random_starts = 8;
  int max_evals = 2000;
  /// Stop once the simplex characteristic size drops below this.
  double size_tol = 1e-12;
  /// Stop once the objective drops below this.
  double value_floor = 1e-300;
  std::uint64_t seed = 0;
};

struct SubspaceMinResult {
  double value = 0.0;
  std::vector<cplx> coefficients;
  bool converged = false;
  int restarts_used = 0;
};

/// Minimizes |invariant(sum_j a_j basis_j)| over unit a in C^m. Starts from
/// every basis vector plus `random_starts` random points. Throws
/// NonOrthonormalBasis if the basis is not orthonormal to 1e-10.
SubspaceMinResult minimize_over_subspace(std::span<const PureState4> basis, Invariant which,
                                         const MinimizerOptions& options = {});

enum class ThermalMode {
  /// Z^-1 sum_i e^{-beta E_i} |inv(v_i)| over the solver's 16 vectors. The
  /// result depends on the basis chosen inside degenerate levels.
  WeightedSum,
  /// Z^-1 sum_levels m e^{-beta E} min_{subspace} |inv|.
  DegenerateMin,
  /// min |inv(psi)| with psi = Z^-1 sum_levels e^{-beta E} sum_j a^l_j v^l_j,
  /// each a^l a unit vector, relative phases between levels free.
  Superposition,
};

struct ThermalSpec {
  double beta = 0.0;
  ThermalMode mode = ThermalMode::WeightedSum;
  Invariant which = Invariant::S;
};

/// Throws BadRange for negative or non-finite beta.
double thermal_invariant(const Hamiltonian16& h, const ThermalSpec& spec,
                         const MinimizerOptions& options = {});
double thermal_invariant(const SpectralDecomposition& spec, const ThermalSpec& ts,
                         const MinimizerOptions& options = {});

/// Defaults used for the Superposition mode, whose search space is larger.
MinimizerOptions superposition_defaults(std::uint64_t seed);

}  // namespace hdet
