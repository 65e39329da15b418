#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <utility>

namespace hdet {

using cplx = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Tolerance on the unit norm of constructed states.
inline constexpr double kNormTolerance = 1e-12;

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<cplx, 4>;

/// Index of a computational-basis ket written as a bit string, qubit 1 first.
/// "0101" -> 5. Throws std::invalid_argument on anything but '0'/'1'.
std::size_t ket_index(std::string_view bits);

/// Normalized pure state of `Qubits` qubits. Amplitude index i has qubit 1 as
/// its most significant bit, so amps()[ket_index("0011")] is t_0011.
template <std::size_t Qubits>
class PureState {
 public:
  static constexpr std::size_t kQubits = Qubits;
  static constexpr std::size_t kDim = std::size_t{1} << Qubits;
  using Amplitudes = std::array<cplx, kDim>;

  /// |0...0>
  PureState() { amps_[0] = 1.0; }

  /// Divides by the Euclidean norm. Throws std::invalid_argument for a zero
  /// or non-finite vector.
  explicit PureState(const Amplitudes& amps);

  /// Builds sum_k w_k |bits_k> and normalizes it. Repeated kets accumulate.
  static PureState from_kets(
      std::initializer_list<std::pair<std::string_view, cplx>> terms);

  const Amplitudes& amps() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }

 private:
  Amplitudes amps_{};
};

using PureState2 = PureState<2>;
using PureState3 = PureState<3>;
using PureState4 = PureState<4>;

/// Unnormalized 16-component amplitude vector (homogeneity and closed-form
/// comparisons work on these directly).
using Amplitudes4 = PureState4::Amplitudes;

double norm(const Amplitudes4& amps);

/// S, T and HDet4 = S^3 - 27 T^2 of a four-qubit state.
struct InvariantTriple {
  cplx S{};
  cplx T{};
  cplx hdet{};
  double abs_S = 0.0;
  double abs_T = 0.0;
  double abs_hdet = 0.0;

  /// hdet is recomputed from S and T; the cached magnitudes follow.
  static InvariantTriple from_st(cplx S, cplx T);
};

/// S^3 - 27 T^2, evaluated in a fixed order so that recomputation is bitwise
/// reproducible.
cplx hdet_from_st(cplx S, cplx T);

extern template class PureState<1>;
extern template class PureState<2>;
extern template class PureState<3>;
extern template class PureState<4>;

}  // namespace hdet
