#pragma once

#include <array>
#include <string>
#include <vector>

#include "hdet/spectra.hpp"
#include "hdet/types.hpp"

namespace hdet {

// Transverse Ising: H = -sum X_i X_{i+1} - lambda sum Z_i, periodic, 4 sites.
// Analytic eigenstates are written in the sigma-z computational basis.

struct IsingParams {
  double lambda = 0.0;
};

/// Throws BadRange for lambda < 0.
Hamiltonian16 ising_hamiltonian(const IsingParams& p);

/// Closed-form energies ordered from the ground state (ordering valid for
/// 0 <= lambda < 2/sqrt(3)).
std::array<double, 16> ising_energies_analytic(double lambda);

/// Upper end of the range where the analytic level ordering holds.
double ising_ordering_limit();

/// Throws OutOfOrderingRange unless 0 <= lambda < 2/sqrt(3), and
/// SingularAtZeroField for lambda == 0 on levels 0, 2, 13, 15.
PureState4 ising_eigenstate_analytic(int level, double lambda);
InvariantTriple ising_invariants_analytic(int level, double lambda);

struct IsingCoefficients {
  double alpha, beta, gamma;
};

/// Coefficients of the |0000>, two-excitation and |0101>,|1010> amplitudes
/// for levels 0, 2, 13, 15.
IsingCoefficients ising_coefficients(int level, double lambda);

// XXZ: H = sum (X X + Y Y + delta Z Z), periodic, 4 sites, sigma-z basis.

struct XXZParams {
  double delta = 0.0;
};

Hamiltonian16 xxz_hamiltonian(const XXZParams& p);

struct XXZRow {
  std::string label;
  double energy = 0.0;
  PureState4 state;
  InvariantTriple invariants;
};

/// The sixteen printed eigenstates with their closed-form invariants; the
/// first row is the lower (-2(delta + sqrt(8 + delta^2))) member of the
/// two-state block, the second row the upper member.
std::vector<XXZRow> xxz_eigensystem_analytic(double delta);

enum class XXZBranch { Lower, Upper };

/// Closed-form S, T of the Delta-dependent pair. Lower has energy
/// -2(delta + r), Upper -2(delta - r), r = sqrt(8 + delta^2).
InvariantTriple xxz_branch_invariants(double delta, XXZBranch branch);
PureState4 xxz_branch_state(double delta, XXZBranch branch);
double xxz_branch_energy(double delta, XXZBranch branch);

/// 2[s(s+1) - s13(s13+1) - s24(s24+1)]. Throws InvalidCoupling.
double heisenberg_energy(int s13, int s24, int s);

/// cos(theta)|phi1> + e^{i phi} sin(theta)|phi2>.
PureState4 rvb_superposition(double theta, double phi);

// Haldane-Shastry family.

struct HSParams {
  double alpha = 0.5;
  double delta = 0.0;
};

/// (pi^2/16) sum_{i>j} S_i.S_j / sin^2(pi(i-j)/4), S = sigma/2.
Hamiltonian16 hs_hamiltonian();

/// Throws BadRange unless 0 < alpha <= 1/2.
PureState4 hs_state(double alpha);
InvariantTriple hs_invariants_closed_form(double alpha);

struct DimerAmplitudes {
  double a1, a2, a3;
};

/// Weights of (|0011>+|1100>), (|0101>+|1010>), (|0110>+|1001>), rescaled
/// by a common positive factor so they stay finite at delta = +-1/2.
DimerAmplitudes hs_dimer_amplitudes(double alpha, double delta);
PureState4 hs_dimerized_state(const HSParams& p);
InvariantTriple hs_dimerized_invariants_closed_form(double alpha, double delta);

/// -cos(2 pi alpha).
double hs_equivalent_delta(double alpha);

}  // namespace hdet
