#pragma once

#include <array>

#include "hdet/poly.hpp"
#include "hdet/types.hpp"

namespace hdet {

/// Scale between the raw lift discriminant of a three-qubit state and the
/// epsilon-contraction tangle; fixed from GHZ3 (raw discriminant 1/4, tangle 1).
inline constexpr double kTangleLiftScale = 4.0;

/// det C = c00 c11 - c10 c01. Concurrence is 2|hdet2|.
cplx hdet2(const PureState2& s);

/// kTangleLiftScale times the discriminant of the quadratic obtained by
/// substituting c_ij -> b_ij0 + b_ij1 x into hdet2.
cplx tangle_via_lift(const PureState3& s);

/// Brute-force six-epsilon contraction over all 2^12 index assignments.
double tangle_direct(const PureState3& s);

/// Raw (unscaled) lift: b_ijk -> t_ijk0 + t_ijk1 x in the three-qubit
/// discriminant, returned in binomial convention.
QuarticBinomial lift_p4(const PureState4& s, Precision precision = Precision::Double);
QuarticBinomial lift_p4(const Amplitudes4& amps, Precision precision = Precision::Double);

InvariantTriple invariants_of(const PureState4& s, Precision precision = Precision::Double);

/// Same pipeline on an unnormalized amplitude vector: S, T, hdet are
/// homogeneous of degree 8, 12 and 24.
InvariantTriple invariants_of_amplitudes(const Amplitudes4& amps,
                                         Precision precision = Precision::Double);

/// |hdet|, snapped to 0 when the value is a structural zero.
double hdet4_magnitude(const PureState4& s);

/// S^3 / hdet. Throws DegenerateJInvariant when hdet is a structural zero.
cplx j_invariant(const PureState4& s);

/// U1 (x) U2 (x) U3 (x) U4 with each factor unitary to 1e-12.
class LocalUnitary4 {
 public:
  /// Throws NonUnitaryFactor.
  explicit LocalUnitary4(const std::array<Mat2, 4>& factors);
  static LocalUnitary4 identity();

  const Mat2& factor(std::size_t k) const { return factors_[k]; }

 private:
  std::array<Mat2, 4> factors_;
};

bool is_unitary(const Mat2& u, double tol = 1e-12);
cplx det(const Mat2& u);

PureState4 apply_local_unitary(const PureState4& s, const LocalUnitary4& u);

/// Haar-distributed SU(2) draw from a normalized Gaussian quaternion.
Mat2 random_su2(Rng& rng);

enum class Pairing { P12_34, P13_24, P14_23 };

/// a occupies the first pair of the pairing, b the second.
PureState4 tensor_product(const PureState2& a, const PureState2& b, Pairing pairing);

/// Single qubit `lone` (1..4) in state q, the other three in r (in increasing
/// qubit order).
PureState4 tensor_product(const PureState<1>& q, const PureState3& r, int lone);

}  // namespace hdet
