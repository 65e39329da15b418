#include <doctest.h>

#include "approx.hpp"
#include "hdet/hdet.hpp"

using namespace hdet;

TEST_CASE("diagonal matrix") {
  Matrix16 m{};
  for (int i = 0; i < 16; ++i) m[17 * i] = i == 0 ? 3.0 : (i == 1 ? 1.0 : 2.0 + i);
  const GroundState g = ground_state(Hamiltonian16(m, "diag"));
  CHECK(g.energy == doctest::Approx(1.0));
  CHECK(std::abs(g.state[1]) == doctest::Approx(1.0));
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix16 m{};
  m[1] = 1.0;
  CHECK_THROWS_AS(Hamiltonian16(m, "bad"), NotHermitian);
}

TEST_CASE("XXZ degeneracies") {
  const SpectralDecomposition d = eig_hermitian(xxz_hamiltonian({-2.0}));
  CHECK(d.levels.front().energy == doctest::Approx(-8.0));
  CHECK(d.levels.front().multiplicity == 2);
  const SpectralDecomposition h = eig_hermitian(xxz_hamiltonian({1.0}));
  REQUIRE(h.levels.size() == 4);
  CHECK(h.levels[2].multiplicity == 7);
}

TEST_CASE("ground energies against numpy") {
  CHECK(ground_state(ising_hamiltonian({0.5})).energy == doctest::Approx(-4.271558410139714).epsilon(1e-12));
  CHECK(ground_state(xxz_hamiltonian({0.3})).energy == doctest::Approx(-6.288585061331155).epsilon(1e-12));
}

TEST_CASE("overlap tracking follows the closest level") {
  const SpectralDecomposition a = eig_hermitian(ising_hamiltonian({1.0}));
  const SpectralDecomposition b = eig_hermitian(ising_hamiltonian({1.01}));
  const TrackedState t = track_by_overlap(b, a.levels[2].basis.front());
  CHECK(t.level == 2);
  CHECK(t.overlap > 0.99);
}
