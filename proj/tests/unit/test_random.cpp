#include <doctest.h>

#include "hdet/hdet.hpp"

using namespace hdet;

TEST_CASE("streams are reproducible and independent") {
  Rng a = stream_for(1, 0), b = stream_for(1, 0), c = stream_for(1, 1);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
}

TEST_CASE("ensemble names") {
  for (EnsembleKind k : {EnsembleKind::FlatState, EnsembleKind::HaarState, EnsembleKind::GOE,
                         EnsembleKind::GUE, EnsembleKind::GSE}) {
    CHECK(ensemble_from_name(ensemble_name(k)) == k);
  }
  CHECK_THROWS_AS(ensemble_from_name("cue"), BadRange);
}

TEST_CASE("GOE is real, GSE is Kramers degenerate") {
  Rng rng(5);
  const Hamiltonian16 goe = sample_matrix(EnsembleKind::GOE, rng);
  for (const cplx& z : goe.entries()) CHECK(z.imag() == 0.0);
  const SpectralDecomposition gse = eig_hermitian(sample_matrix(EnsembleKind::GSE, rng));
  CHECK(gse.levels.size() == 8);
  for (const Level& l : gse.levels) CHECK(l.multiplicity == 2);
}

TEST_CASE("statistics are thread-count independent") {
  EnsembleSpec spec{EnsembleKind::GUE, 40, 9};
  spec.threads = 1;
  const HDetStats a = ensemble_hdet_stats(spec);
  spec.threads = 3;
  const HDetStats b = ensemble_hdet_stats(spec);
  CHECK(a.samples == b.samples);
  CHECK(a.mean == b.mean);
  CHECK(a.fraction_above(0.0) == 1.0);
}

TEST_CASE("histogram covers every sample") {
  EnsembleSpec spec{EnsembleKind::FlatState, 500, 2};
  const HDetStats s = ensemble_hdet_stats(spec);
  const auto bins = s.histogram(-14, -7, 14);
  CHECK(bins.size() == 16);
  std::size_t total = 0;
  for (const HistogramBin& b : bins) total += b.count;
  CHECK(total == 500);
}
