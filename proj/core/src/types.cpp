#include "hdet/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hdet {

std::size_t ket_index(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty ket");
  std::size_t idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("ket must contain only 0/1: " + std::string(bits));
    }
    idx = (idx << 1) | static_cast<std::size_t>(ch - '0');
  }
  return idx;
}

template <std::size_t Qubits>
PureState<Qubits>::PureState(const Amplitudes& amps) : amps_(amps) {
  double n2 = 0.0;
  for (const cplx& a : amps_) n2 += std::norm(a);
  const double n = std::sqrt(n2);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("state vector has zero or non-finite norm");
  }
  for (cplx& a : amps_) a /= n;
}

template <std::size_t Qubits>
PureState<Qubits> PureState<Qubits>::from_kets(
    std::initializer_list<std::pair<std::string_view, cplx>> terms) {
  Amplitudes amps{};
  for (const auto& [bits, w] : terms) {
    if (bits.size() != Qubits) throw std::invalid_argument("ket length mismatch");
    amps[ket_index(bits)] += w;
  }
  return PureState(amps);
}

template class PureState<1>;
template class PureState<2>;
template class PureState<3>;
template class PureState<4>;

double norm(const Amplitudes4& amps) {
  double n2 = 0.0;
  for (const cplx& a : amps) n2 += std::norm(a);
  return std::sqrt(n2);
}

cplx hdet_from_st(cplx S, cplx T) { return S * S * S - 27.0 * (T * T); }

InvariantTriple InvariantTriple::from_st(cplx S, cplx T) {
  InvariantTriple r;
  r.S = S;
  r.T = T;
  r.hdet = hdet_from_st(S, T);
  r.abs_S = std::abs(S);
  r.abs_T = std::abs(T);
  r.abs_hdet = std::abs(r.hdet);
  return r;
}

}  // namespace hdet
