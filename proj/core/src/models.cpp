#include "hdet/models.hpp"

#include <cmath>
#include <numbers>

#include "hdet/errors.hpp"
#include "hdet/invariants.hpp"

namespace hdet {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

enum class Pauli { I, X, Y, Z };

// Matrix element <out| P |in> for a single qubit bit value.
cplx pauli_element(Pauli p, std::size_t out, std::size_t in) {
  switch (p) {
    case Pauli::I: return out == in ? 1.0 : 0.0;
    case Pauli::X: return out != in ? 1.0 : 0.0;
    case Pauli::Y: return out != in ? (in == 0 ? cplx(0, 1) : cplx(0, -1)) : 0.0;
    case Pauli::Z: return out == in ? (in == 0 ? 1.0 : -1.0) : 0.0;
  }
  return 0.0;
}

// coeff * P_a (x) P_b on sites a, b (0-based, site 0 = most significant bit).
void add_two_site(Matrix16& m, Pauli pa, int a, Pauli pb, int b, double coeff) {
  for (std::size_t in = 0; in < 16; ++in) {
    for (std::size_t out = 0; out < 16; ++out) {
      cplx v = coeff;
      for (int s = 0; s < 4; ++s) {
        const std::size_t bo = (out >> (3 - s)) & 1, bi = (in >> (3 - s)) & 1;
        const Pauli p = s == a ? pa : (s == b ? pb : Pauli::I);
        v *= pauli_element(p, bo, bi);
        if (v == 0.0) break;
      }
      m[16 * out + in] += v;
    }
  }
}

void add_one_site(Matrix16& m, Pauli p, int a, double coeff) {
  add_two_site(m, p, a, Pauli::I, (a + 1) % 4, coeff);
}

Amplitudes4 kets(std::initializer_list<std::pair<const char*, cplx>> terms) {
  Amplitudes4 a{};
  for (const auto& [k, w] : terms) a[ket_index(k)] += w;
  return a;
}

PureState4 abg_state(double alpha, double beta, double gamma) {
  return PureState4(kets({{"0000", alpha}, {"0011", beta}, {"0110", beta}, {"1001", beta},
                          {"1100", beta}, {"0101", gamma}, {"1010", gamma}, {"1111", 1.0}}));
}

void check_ising_range(int level, double lambda) {
  if (level < 0 || level > 15) throw OutOfOrderingRange("Ising level must be 0..15");
  if (!(lambda >= 0.0) || lambda >= ising_ordering_limit()) {
    throw OutOfOrderingRange("analytic Ising levels require 0 <= lambda < 2/sqrt(3)");
  }
  if (lambda == 0.0 && (level == 0 || level == 2 || level == 13 || level == 15)) {
    throw SingularAtZeroField("Ising level " + std::to_string(level) +
                              " coefficients are singular at lambda = 0");
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) throw BadRange("alpha must lie in (0, 1/2]");
}

}  // namespace

Hamiltonian16 ising_hamiltonian(const IsingParams& p) {
  if (!(p.lambda >= 0.0)) throw BadRange("lambda must be >= 0");
  Matrix16 m{};
  for (int i = 0; i < 4; ++i) {
    add_two_site(m, Pauli::X, i, Pauli::X, (i + 1) % 4, -1.0);
    add_one_site(m, Pauli::Z, i, -p.lambda);
  }
  return Hamiltonian16(m, "ising lambda=" + std::to_string(p.lambda));
}

double ising_ordering_limit() { return 2.0 / std::sqrt(3.0); }

std::array<double, 16> ising_energies_analytic(double l) {
  const double lp = 1.0 + l * l, lpp = 1.0 + l * l * l * l;
  const double a = 2.0 * sqrt2 * std::sqrt(lp + std::sqrt(lpp));
  const double b = 2.0 * (std::sqrt(lp) + 1.0);
  const double c = 2.0 * sqrt2 * std::sqrt(lp - std::sqrt(lpp));
  const double d = 2.0 * l;
  const double e = 2.0 * (std::sqrt(lp) - 1.0);
  return {-a, -b, -c, -d, -d, -e, 0.0, 0.0, 0.0, 0.0, e, d, d, c, b, a};
}

IsingCoefficients ising_coefficients(int level, double l) {
  // level 0: (+ root, + sign); 2: (- root, +); 13: (- root, -); 15: (+ root, -)
  double s, pm;
  switch (level) {
    case 0: s = 1.0; pm = 1.0; break;
    case 2: s = -1.0; pm = 1.0; break;
    case 13: s = -1.0; pm = -1.0; break;
    case 15: s = 1.0; pm = -1.0; break;
    default: throw OutOfOrderingRange("coefficients exist only for levels 0, 2, 13, 15");
  }
  const double lp = 1.0 + l * l, sq = std::sqrt(1.0 + l * l * l * l);
  const double r = std::sqrt(lp + s * sq);
  const double alpha = (2.0 * l * l * l + pm * sqrt2 * l * l * r -
                        pm * sqrt2 * r * (1.0 - s * sq) - l * (1.0 - 2.0 * s * sq)) /
                       l;
  return {alpha, l + pm * r / sqrt2, 1.0 + pm * sqrt2 * l / r};
}

PureState4 ising_eigenstate_analytic(int level, double l) {
  check_ising_range(level, l);
  const double p = l + std::sqrt(1.0 + l * l), m = l - std::sqrt(1.0 + l * l);
  switch (level) {
    case 0: case 2: case 13: case 15: {
      const IsingCoefficients c = ising_coefficients(level, l);
      return abg_state(c.alpha, c.beta, c.gamma);
    }
    case 1: case 10: {
      const double w = level == 1 ? p : m;
      return PureState4(kets({{"0001", w}, {"0010", w}, {"0100", w}, {"1000", w},
                              {"0111", 1}, {"1011", 1}, {"1101", 1}, {"1110", 1}}));
    }
    case 5: case 14: {
      const double w = level == 5 ? p : m;
      return PureState4(kets({{"0010", w}, {"0001", -w}, {"0100", -w}, {"1000", w},
                              {"0111", -1}, {"1011", 1}, {"1101", -1}, {"1110", 1}}));
    }
    case 3: return PureState4(kets({{"0010", -1}, {"1000", 1}}));
    case 4: return PureState4(kets({{"0001", -1}, {"0100", 1}}));
    case 6: return PureState4(kets({{"0011", -1}, {"1100", 1}}));
    case 7: return PureState4(kets({{"0011", -1}, {"0110", 1}}));
    case 8: return PureState4(kets({{"0011", -1}, {"1001", 1}}));
    case 9: return PureState4(kets({{"0101", -1}, {"1010", 1}}));
    case 11: return PureState4(kets({{"1011", -1}, {"1110", 1}}));
    case 12: return PureState4(kets({{"0111", -1}, {"1101", 1}}));
    default: break;
  }
  throw OutOfOrderingRange("Ising level must be 0..15");
}

InvariantTriple ising_invariants_analytic(int level, double l) {
  check_ising_range(level, l);
  switch (level) {
    case 3: case 4: case 7: case 8: case 11: case 12:
      return InvariantTriple::from_st(0.0, 0.0);
    case 1: case 5: case 10: case 14: {
      const double lp = 1.0 + l * l;
      return InvariantTriple::from_st(1.0 / (192.0 * lp * lp), -1.0 / (13824.0 * lp * lp * lp));
    }
    case 6: case 9:
      return InvariantTriple::from_st(1.0 / 192.0, -1.0 / 13824.0);
    default: break;
  }
  const IsingCoefficients c = ising_coefficients(level, l);
  const double a = c.alpha, b2 = c.beta * c.beta, g2 = c.gamma * c.gamma;
  const double b4 = b2 * b2;
  const double G = a * a * (a - 4 * b2) * (a - 4 * b2) -
                   4 * a * (a * a - 2 * a * b2 - 56 * b4) * g2 +
                   2 * (3 * a * a + 4 * a * b2 + 8 * b4) * g2 * g2 -
                   4 * (a + 2 * b2) * g2 * g2 * g2 + g2 * g2 * g2 * g2;
  const double N = (1 + a * a + 4 * b2 + 2 * g2) * (1 + a * a + 4 * b2 + 2 * g2);
  const double S = G / (12 * N * N);
  const double T = (4 * b2 * (a + g2) - (a - g2) * (a - g2)) * (G - 768 * a * b4 * g2) /
                   (216 * N * N * N);
  return InvariantTriple::from_st(S, T);
}

Hamiltonian16 xxz_hamiltonian(const XXZParams& p) {
  Matrix16 m{};
  for (int i = 0; i < 4; ++i) {
    const int j = (i + 1) % 4;
    add_two_site(m, Pauli::X, i, Pauli::X, j, 1.0);
    add_two_site(m, Pauli::Y, i, Pauli::Y, j, 1.0);
    add_two_site(m, Pauli::Z, i, Pauli::Z, j, p.delta);
  }
  return Hamiltonian16(m, "xxz delta=" + std::to_string(p.delta));
}

double xxz_branch_energy(double d, XXZBranch branch) {
  const double r = std::sqrt(8.0 + d * d);
  return branch == XXZBranch::Lower ? -2.0 * (d + r) : -2.0 * (d - r);
}

PureState4 xxz_branch_state(double d, XXZBranch branch) {
  const double r = std::sqrt(8.0 + d * d);
  const double c = branch == XXZBranch::Lower ? -0.5 * (d + r) : -0.5 * (d - r);
  return PureState4(kets({{"0011", 1}, {"0110", 1}, {"1100", 1}, {"1001", 1},
                          {"0101", c}, {"1010", c}}));
}

InvariantTriple xxz_branch_invariants(double d, XXZBranch branch) {
  const double r = std::sqrt(8.0 + d * d);
  const double s = branch == XXZBranch::Lower ? -1.0 : 1.0;
  const double u = d + s * r, v = 4.0 - d * (d - s * r), w = 8.0 + d * (d + s * r);
  const double u2 = u * u, w2 = w * w;
  const double S = u2 * u2 * v * v / (768.0 * w2 * w2);
  const double T = u2 * u2 * u2 * v * v * v / (110592.0 * w2 * w2 * w2);
  return InvariantTriple::from_st(S, T);
}

std::vector<XXZRow> xxz_eigensystem_analytic(double d) {
  std::vector<XXZRow> rows;
  rows.push_back({"ground", xxz_branch_energy(d, XXZBranch::Lower),
                  xxz_branch_state(d, XXZBranch::Lower),
                  xxz_branch_invariants(d, XXZBranch::Lower)});
  rows.push_back({"upper", xxz_branch_energy(d, XXZBranch::Upper),
                  xxz_branch_state(d, XXZBranch::Upper),
                  xxz_branch_invariants(d, XXZBranch::Upper)});
  const InvariantTriple zero = InvariantTriple::from_st(0.0, 0.0);
  const InvariantTriple ghz = InvariantTriple::from_st(1.0 / 192.0, -1.0 / 13824.0);
  auto add = [&](std::string label, double e, Amplitudes4 a, const InvariantTriple& inv) {
    rows.push_back({std::move(label), e, PureState4(a), inv});
  };
  add("0111-1011+1101-1110", -4, kets({{"0111", 1}, {"1011", -1}, {"1101", 1}, {"1110", -1}}), zero);
  add("0001-0010+0100-1000", -4, kets({{"0001", 1}, {"0010", -1}, {"0100", 1}, {"1000", -1}}), zero);
  add("0111+1011+1101+1110", 4, kets({{"0111", 1}, {"1011", 1}, {"1101", 1}, {"1110", 1}}), zero);
  add("0001+0010+0100+1000", 4, kets({{"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}}), zero);
  add("0111-1101", 0, kets({{"0111", 1}, {"1101", -1}}), zero);
  add("1011-1110", 0, kets({{"1011", 1}, {"1110", -1}}), zero);
  add("1001-1100", 0, kets({{"1001", 1}, {"1100", -1}}), zero);
  add("0001-0100", 0, kets({{"0001", 1}, {"0100", -1}}), zero);
  add("0110-1100", 0, kets({{"0110", 1}, {"1100", -1}}), zero);
  add("0010-1000", 0, kets({{"0010", 1}, {"1000", -1}}), zero);
  add("0011-1100", 0, kets({{"0011", 1}, {"1100", -1}}), ghz);
  add("0101-1010", -4 * d, kets({{"0101", 1}, {"1010", -1}}), ghz);
  add("0000", 4 * d, kets({{"0000", 1}}), zero);
  add("1111", 4 * d, kets({{"1111", 1}}), zero);
  return rows;
}

double heisenberg_energy(int s13, int s24, int s) {
  auto ok = [](int x) { return x == 0 || x == 1; };
  if (!ok(s13) || !ok(s24) || s < std::abs(s13 - s24) || s > s13 + s24) {
    throw InvalidCoupling("spins (" + std::to_string(s13) + "," + std::to_string(s24) +
                          ") cannot couple to total spin " + std::to_string(s));
  }
  return 2.0 * (s * (s + 1) - s13 * (s13 + 1) - s24 * (s24 + 1));
}

PureState4 rvb_superposition(double theta, double phi) {
  const double k1 = std::cos(theta) / (2.0 * sqrt2);
  const cplx k2 = std::polar(std::sin(theta) / 2.0, phi);
  return PureState4(kets({{"0011", k1 + k2}, {"0110", k1 - k2}, {"1100", k1 + k2},
                          {"1001", k1 - k2}, {"0101", -2.0 * k1}, {"1010", -2.0 * k1}}));
}

Hamiltonian16 hs_hamiltonian() {
  Matrix16 m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) {
      const double s = std::sin(pi * (i - j) / 4.0);
      // S_i.S_j = (XX + YY + ZZ)/4
      const double c = pi * pi / 16.0 / (s * s) / 4.0;
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) add_two_site(m, p, j, p, i, c);
    }
  }
  return Hamiltonian16(m, "haldane-shastry n=4");
}

double hs_equivalent_delta(double alpha) { return -std::cos(2.0 * pi * alpha); }

PureState4 hs_state(double alpha) {
  check_alpha(alpha);
  const double x = std::pow(4.0, -alpha);
  return PureState4(kets({{"0011", x}, {"0110", x}, {"1001", x}, {"1100", x},
                          {"0101", -1}, {"1010", -1}}));
}

InvariantTriple hs_invariants_closed_form(double alpha) {
  check_alpha(alpha);
  const double e = std::pow(16.0, alpha);
  const double q = 2.0 + e, q2 = q * q;
  const double S = std::pow(4.0, 4 * alpha - 3) * (e - 4) * (e - 4) / (3.0 * q2 * q2);
  const double T = -std::pow(8.0, 4 * alpha - 3) * (e - 4) * (e - 4) * (e - 4) / (27.0 * q2 * q2 * q2);
  return InvariantTriple::from_st(S, T);
}

namespace {

// sin(pi x) with exact zeros and extrema at half-integer x
double sinpi(double x) {
  const double r = x - 2.0 * std::nearbyint(x / 2.0);
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (std::abs(r) == 0.5) return r > 0 ? 1.0 : -1.0;
  return std::sin(pi * r);
}

double cospi(double x) { return sinpi(x + 0.5); }

}  // namespace

DimerAmplitudes hs_dimer_amplitudes(double alpha, double delta) {
  check_alpha(alpha);
  const double a1 = -std::pow(2.0, -alpha) *
                    std::pow(std::abs(cospi((3.0 + 2.0 * delta) / 4.0) * std::numbers::sqrt2 *
                                      sinpi(delta / 2.0 + 0.25)),
                             2.0 * alpha);
  const double a3 = -std::pow(std::abs(sinpi(delta / 2.0 - 0.25)), 4.0 * alpha);
  return {a1, 1.0, a3};
}

PureState4 hs_dimerized_state(const HSParams& p) {
  const DimerAmplitudes a = hs_dimer_amplitudes(p.alpha, p.delta);
  return PureState4(kets({{"0011", a.a1}, {"1100", a.a1}, {"0101", a.a2}, {"1010", a.a2},
                          {"0110", a.a3}, {"1001", a.a3}}));
}

InvariantTriple hs_dimerized_invariants_closed_form(double alpha, double delta) {
  const DimerAmplitudes a = hs_dimer_amplitudes(alpha, delta);
  const double s1 = a.a1 * a.a1, s2 = a.a2 * a.a2, s3 = a.a3 * a.a3;
  const double n = s1 * s1 + (s2 - s3) * (s2 - s3) - 2.0 * s1 * (s2 + s3);
  const double N = s1 + s2 + s3, N2 = N * N;
  return InvariantTriple::from_st(n * n / (192.0 * N2 * N2), -n * n * n / (13824.0 * N2 * N2 * N2));
}

}  // namespace hdet
