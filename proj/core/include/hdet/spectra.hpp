#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hdet/types.hpp"

namespace hdet {

/// Row-major 16x16 complex matrix.
using Matrix16 = std::array<cplx, 256>;

class Hamiltonian16 {
 public:
  /// Throws NotHermitian if any |H_ij - conj(H_ji)| > 1e-12.
  Hamiltonian16(const Matrix16& entries, std::string label);

  const Matrix16& entries() const { return entries_; }
  cplx operator()(std::size_t r, std::size_t c) const { return entries_[16 * r + c]; }
  const std::string& label() const { return label_; }

  double frobenius_norm() const;
  double trace() const;
  Amplitudes4 apply(const Amplitudes4& v) const;

 private:
  Matrix16 entries_;
  std::string label_;
};

struct Level {
  double energy = 0.0;
  int multiplicity = 0;
  std::vector<PureState4> basis;
};

struct SpectralDecomposition {
  std::vector<Level> levels;

  /// All 16 eigenpairs, level by level.
  std::vector<std::pair<double, PureState4>> flattened() const;
};

double default_degeneracy_tol(const Hamiltonian16& h);

/// Eigenvalues within `degeneracy_tol` of their neighbour are grouped into
/// one level; each level's basis is re-orthonormalized (modified Gram-Schmidt
/// in solver order). The in-level basis is an arbitrary gauge.
SpectralDecomposition eig_hermitian(const Hamiltonian16& h,
                                    std::optional<double> degeneracy_tol = std::nullopt);

struct GroundState {
  double energy = 0.0;
  PureState4 state;
  int multiplicity = 0;
};

GroundState ground_state(const Hamiltonian16& h);

struct TrackedState {
  std::size_t level = 0;
  double energy = 0.0;
  PureState4 state;
  double overlap = 0.0;
};

/// The level whose subspace has the largest overlap with `previous`,
/// represented by the normalized projection of `previous` onto it.
TrackedState track_by_overlap(const SpectralDecomposition& spec, const PureState4& previous);

cplx inner(const Amplitudes4& a, const Amplitudes4& b);

}  // namespace hdet
