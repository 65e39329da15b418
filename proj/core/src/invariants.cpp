#include "hdet/invariants.hpp"

#include <cmath>
#include <random>

#include "extended.hpp"
#include "hdet/errors.hpp"

namespace hdet {

namespace {

template <class Scalar>
BasicPoly<Scalar> raw_lift(const std::array<Scalar, 16>& t) {
  using P = BasicPoly<Scalar>;
  auto b = [&](int i, int j, int k) {
    const int base = (i << 3) | (j << 2) | (k << 1);
    return P{t[base], t[base | 1]};
  };
  // c_ij = b_ij0 + b_ij1 y; det = q0 + q1 y + q2 y^2 with polynomial q's.
  const P q0 = b(0, 0, 0) * b(1, 1, 0) - b(1, 0, 0) * b(0, 1, 0);
  const P q1 = b(0, 0, 0) * b(1, 1, 1) + b(0, 0, 1) * b(1, 1, 0) -
               b(1, 0, 0) * b(0, 1, 1) - b(1, 0, 1) * b(0, 1, 0);
  const P q2 = b(0, 0, 1) * b(1, 1, 1) - b(1, 0, 1) * b(0, 1, 1);
  return q1 * q1 - Scalar(4) * (q0 * q2);
}

template <class Scalar>
void binomial(const BasicPoly<Scalar>& p, Scalar out[5]) {
  out[0] = p.coeff(4);
  out[1] = p.coeff(3) / Scalar(4);
  out[2] = p.coeff(2) / Scalar(6);
  out[3] = p.coeff(1) / Scalar(4);
  out[4] = p.coeff(0);
}

InvariantTriple extended_triple(const Amplitudes4& amps) {
  using detail::ExtComplex;
  std::array<ExtComplex, 16> t;
  for (std::size_t i = 0; i < 16; ++i) t[i] = ExtComplex(amps[i]);
  ExtComplex b[5];
  binomial(raw_lift(t), b);
  const ExtComplex S = ExtComplex(3) * b[2] * b[2] - ExtComplex(4) * b[1] * b[3] + b[0] * b[4];
  const ExtComplex T = -(b[2] * b[2] * b[2]) + ExtComplex(2) * b[1] * b[2] * b[3] -
                       b[0] * b[3] * b[3] - b[1] * b[1] * b[4] + b[0] * b[2] * b[4];
  const ExtComplex h = S * S * S - ExtComplex(27) * T * T;
  InvariantTriple r = InvariantTriple::from_st(S.to_cplx(), T.to_cplx());
  r.hdet = h.to_cplx();
  r.abs_hdet = std::abs(r.hdet);
  return r;
}

}  // namespace

cplx hdet2(const PureState2& s) { return s[0] * s[3] - s[2] * s[1]; }

cplx tangle_via_lift(const PureState3& s) {
  auto b = [&](int i, int j, int k) { return s[(i << 2) | (j << 1) | k]; };
  const PolyX p3{b(0, 0, 0) * b(1, 1, 0) - b(1, 0, 0) * b(0, 1, 0),
                 b(0, 0, 0) * b(1, 1, 1) + b(0, 0, 1) * b(1, 1, 0) -
                     b(1, 0, 0) * b(0, 1, 1) - b(1, 0, 1) * b(0, 1, 0),
                 b(0, 0, 1) * b(1, 1, 1) - b(1, 0, 1) * b(0, 1, 1)};
  return kTangleLiftScale * quadratic_discriminant(p3);
}

double tangle_direct(const PureState3& s) {
  constexpr int eps[2][2] = {{0, 1}, {-1, 0}};
  cplx sum = 0.0;
  for (unsigned m = 0; m < 4096; ++m) {
    auto bit = [m](int k) { return static_cast<int>((m >> k) & 1U); };
    const int i1 = bit(0), i2 = bit(1), i3 = bit(2), i4 = bit(3);
    const int j1 = bit(4), j2 = bit(5), j3 = bit(6), j4 = bit(7);
    const int k1 = bit(8), k2 = bit(9), k3 = bit(10), k4 = bit(11);
    const int e = eps[i1][i2] * eps[i3][i4] * eps[j1][j2] * eps[j3][j4] *
                  eps[k1][k3] * eps[k2][k4];
    if (e == 0) continue;
    auto b = [&](int i, int j, int k) { return s[(i << 2) | (j << 1) | k]; };
    sum += static_cast<double>(e) * b(i1, j1, k1) * b(i2, j2, k2) * b(i3, j3, k3) *
           b(i4, j4, k4);
  }
  return 2.0 * std::abs(sum);
}

QuarticBinomial lift_p4(const Amplitudes4& amps, Precision precision) {
  if (precision == Precision::Extended) {
    using detail::ExtComplex;
    std::array<ExtComplex, 16> t;
    for (std::size_t i = 0; i < 16; ++i) t[i] = ExtComplex(amps[i]);
    ExtComplex b[5];
    binomial(raw_lift(t), b);
    return {b[0].to_cplx(), b[1].to_cplx(), b[2].to_cplx(), b[3].to_cplx(), b[4].to_cplx()};
  }
  return QuarticBinomial::from_poly(raw_lift(amps));
}

QuarticBinomial lift_p4(const PureState4& s, Precision precision) {
  return lift_p4(s.amps(), precision);
}

InvariantTriple invariants_of_amplitudes(const Amplitudes4& amps, Precision precision) {
  if (precision == Precision::Extended) return extended_triple(amps);
  const QuarticST st = quartic_st(lift_p4(amps));
  return InvariantTriple::from_st(st.S, st.T);
}

InvariantTriple invariants_of(const PureState4& s, Precision precision) {
  return invariants_of_amplitudes(s.amps(), precision);
}

double hdet4_magnitude(const PureState4& s) {
  const InvariantTriple inv = invariants_of(s);
  return is_structural_zero(inv.hdet, inv.S) ? 0.0 : inv.abs_hdet;
}

cplx j_invariant(const PureState4& s) {
  const InvariantTriple inv = invariants_of(s);
  if (is_structural_zero(inv.hdet, inv.S)) {
    throw DegenerateJInvariant("J invariant undefined: HDet4 is structurally zero");
  }
  return inv.S * inv.S * inv.S / inv.hdet;
}

cplx det(const Mat2& u) { return u[0] * u[3] - u[1] * u[2]; }

bool is_unitary(const Mat2& u, double tol) {
  // (U^dagger U)_{rc} = sum_k conj(U_kr) U_kc
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const cplx v = std::conj(u[r]) * u[c] + std::conj(u[2 + r]) * u[2 + c];
      if (std::abs(v - (r == c ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

LocalUnitary4::LocalUnitary4(const std::array<Mat2, 4>& factors) : factors_(factors) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!is_unitary(factors_[k])) {
      throw NonUnitaryFactor("local factor U" + std::to_string(k + 1) + " is not unitary");
    }
  }
}

LocalUnitary4 LocalUnitary4::identity() {
  const Mat2 id{1.0, 0.0, 0.0, 1.0};
  return LocalUnitary4({id, id, id, id});
}

PureState4 apply_local_unitary(const PureState4& s, const LocalUnitary4& u) {
  Amplitudes4 cur = s.amps();
  for (int q = 0; q < 4; ++q) {
    const Mat2& m = u.factor(static_cast<std::size_t>(q));
    const std::size_t bitmask = std::size_t{1} << (3 - q);
    Amplitudes4 next{};
    for (std::size_t idx = 0; idx < 16; ++idx) {
      if (idx & bitmask) continue;
      const cplx a0 = cur[idx], a1 = cur[idx | bitmask];
      next[idx] = m[0] * a0 + m[1] * a1;
      next[idx | bitmask] = m[2] * a0 + m[3] * a1;
    }
    cur = next;
  }
  return PureState4(cur);
}

Mat2 random_su2(Rng& rng) {
  std::normal_distribution<double> g;
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : q) {
      x = g(rng);
      n2 += x * x;
    }
  } while (n2 == 0.0);
  const double n = std::sqrt(n2);
  const cplx a(q[0] / n, q[1] / n), b(q[2] / n, q[3] / n);
  return {a, -std::conj(b), b, std::conj(a)};
}

PureState4 tensor_product(const PureState2& a, const PureState2& b, Pairing pairing) {
  // qubit positions (1-based) taken by a and by b
  int pa[2] = {1, 2}, pb[2] = {3, 4};
  switch (pairing) {
    case Pairing::P12_34: break;
    case Pairing::P13_24: pa[0] = 1; pa[1] = 3; pb[0] = 2; pb[1] = 4; break;
    case Pairing::P14_23: pa[0] = 1; pa[1] = 4; pb[0] = 2; pb[1] = 3; break;
  }
  Amplitudes4 out{};
  for (std::size_t ia = 0; ia < 4; ++ia) {
    for (std::size_t ib = 0; ib < 4; ++ib) {
      std::size_t idx = 0;
      auto place = [&idx](int pos, std::size_t bit) { idx |= bit << (4 - pos); };
      place(pa[0], ia >> 1);
      place(pa[1], ia & 1);
      place(pb[0], ib >> 1);
      place(pb[1], ib & 1);
      out[idx] = a[ia] * b[ib];
    }
  }
  return PureState4(out);
}

PureState4 tensor_product(const PureState<1>& q, const PureState3& r, int lone) {
  if (lone < 1 || lone > 4) throw std::invalid_argument("lone qubit must be 1..4");
  Amplitudes4 out{};
  for (std::size_t idx = 0; idx < 16; ++idx) {
    const std::size_t qbit = (idx >> (4 - lone)) & 1;
    std::size_t rest = 0;
    for (int pos = 1; pos <= 4; ++pos) {
      if (pos == lone) continue;
      rest = (rest << 1) | ((idx >> (4 - pos)) & 1);
    }
    out[idx] = q[qbit] * r[rest];
  }
  return PureState4(out);
}

}  // namespace hdet
