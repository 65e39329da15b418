#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "hdet/spectra.hpp"
#include "hdet/types.hpp"

namespace hdet {

/// Independent generator for sample `index` of a run seeded with `seed`
/// (std::seed_seq over the 32-bit halves of both).
Rng stream_for(std::uint64_t seed, std::uint64_t index);

enum class EnsembleKind { FlatState, HaarState, GOE, GUE, GSE };

std::string_view ensemble_name(EnsembleKind k);
/// "flat", "haar", "goe", "gue", "gse". Throws BadRange otherwise.
EnsembleKind ensemble_from_name(std::string_view name);
bool is_matrix_ensemble(EnsembleKind k);

/// How |HDet4| is assigned to a degenerate ground level.
enum class DegeneratePolicy {
  /// Mean over Haar-random unit vectors of the level.
  SubspaceMean,
  /// Minimum over the level.
  SubspaceMin,
  /// The solver's first basis vector.
  First,
};

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::FlatState;
  std::size_t sample_count = 1;
  std::uint64_t seed = 0;
  DegeneratePolicy policy = DegeneratePolicy::SubspaceMean;
  int subspace_draws = 32;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct HistogramBin {
  double low, high;
  std::size_t count;
};

struct HDetStats {
  std::vector<double> samples;
  std::vector<int> ground_multiplicity;
  double mean = 0.0;

  double fraction_above(double threshold) const;
  /// Log-spaced bins between 10^lo and 10^hi plus an underflow bin starting
  /// at 0 and an overflow bin ending at +inf.
  std::vector<HistogramBin> histogram(double log10_lo, double log10_hi, int bins) const;
  std::map<int, std::size_t> multiplicity_counts() const;
};

/// FlatState: real and imaginary parts uniform on [-1, 1]. HaarState:
/// standard complex Gaussians. Both normalized.
PureState4 sample_state(EnsembleKind kind, Rng& rng);

/// GOE (A + A^T)/2, GUE (A + A^dagger)/2, GSE the 16x16 complex image of an
/// 8x8 quaternion-Hermitian (A + A^dagger)/2.
Hamiltonian16 sample_matrix(EnsembleKind kind, Rng& rng);

/// Throws BadRange for sample_count == 0.
HDetStats ensemble_hdet_stats(const EnsembleSpec& spec);

}  // namespace hdet
