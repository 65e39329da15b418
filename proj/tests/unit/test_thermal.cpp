#include <doctest.h>

#include <cmath>

#include "hdet/hdet.hpp"

using namespace hdet;

TEST_CASE("single-vector subspace") {
  const PureState4 g = named_state("GHZ");
  const SubspaceMinResult r = minimize_over_subspace(std::span<const PureState4>(&g, 1), Invariant::S);
  CHECK(r.value == doctest::Approx(1.0 / 192));
}

TEST_CASE("non-orthonormal basis is rejected") {
  const PureState4 b[2] = {named_state("GHZ"), named_state("HD")};
  CHECK_THROWS_AS(minimize_over_subspace(b, Invariant::S), NonOrthonormalBasis);
}

TEST_CASE("Heisenberg multiplets reach zero") {
  const SpectralDecomposition d = eig_hermitian(xxz_hamiltonian({1.0}));
  const SubspaceMinResult trip = minimize_over_subspace(d.levels[1].basis, Invariant::S);
  CHECK(trip.value <= 1e-12);
  double n = 0.0;
  for (const cplx& a : trip.coefficients) n += std::norm(a);
  CHECK(n == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(minimize_over_subspace(d.levels[2].basis, Invariant::HDet).value <= 1e-12);
}

TEST_CASE("DegenerateMin at delta = 0.3 against a scipy oracle") {
  const SpectralDecomposition d = eig_hermitian(xxz_hamiltonian({0.3}));
  CHECK(thermal_invariant(d, {0.0, ThermalMode::DegenerateMin, Invariant::S}) ==
        doctest::Approx(0.0003653509183230676).epsilon(1e-9));
  CHECK(thermal_invariant(d, {1.0, ThermalMode::DegenerateMin, Invariant::S}) ==
        doctest::Approx(0.0001782323360356369).epsilon(1e-9));
  CHECK(thermal_invariant(d, {50.0, ThermalMode::DegenerateMin, Invariant::S}) ==
        doctest::Approx(0.00018588778350427126).epsilon(1e-6));
  CHECK_THROWS_AS(thermal_invariant(d, {-1.0, ThermalMode::WeightedSum, Invariant::S}), BadRange);
}

TEST_CASE("Superposition never exceeds DegenerateMin's ground term at low temperature") {
  const SpectralDecomposition d = eig_hermitian(xxz_hamiltonian({0.55}));
  const double s5 = thermal_invariant(d, {5.0, ThermalMode::Superposition, Invariant::S},
                                      superposition_defaults(1));
  const double s05 = thermal_invariant(d, {0.5, ThermalMode::Superposition, Invariant::S},
                                       superposition_defaults(1));
  CHECK(s5 > s05);
  CHECK(s5 <= xxz_branch_invariants(0.55, XXZBranch::Lower).abs_S);
}
