#include "hdet/states.hpp"

#include <cmath>
#include <numbers>

#include "hdet/errors.hpp"

namespace hdet {

namespace {

void put(Amplitudes4& a, std::string_view ket, cplx w) { a[ket_index(ket)] += w; }

}  // namespace

const std::vector<std::string>& named_state_names() {
  static const std::vector<std::string> names{"GHZ", "C1", "C2", "C3", "YC", "W", "HD", "L"};
  return names;
}

PureState4 named_state(std::string_view name) {
  using P = PureState4;
  if (name == "GHZ") return P::from_kets({{"0000", 1}, {"1111", 1}});
  if (name == "C1") return P::from_kets({{"0000", 1}, {"0011", 1}, {"1100", 1}, {"1111", -1}});
  if (name == "C2") return P::from_kets({{"0000", 1}, {"0110", 1}, {"1001", 1}, {"1111", -1}});
  if (name == "C3") return P::from_kets({{"0000", 1}, {"0101", 1}, {"1010", 1}, {"1111", -1}});
  if (name == "YC") {
    return P::from_kets({{"0000", 1}, {"0011", -1}, {"0101", -1}, {"0110", 1},
                         {"1001", 1}, {"1010", 1}, {"1100", 1}, {"1111", 1}});
  }
  if (name == "W") return P::from_kets({{"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}});
  if (name == "HD") {
    return P::from_kets({{"1000", 1}, {"0100", 1}, {"0010", 1}, {"0001", 1},
                         {"1111", std::sqrt(2.0)}});
  }
  if (name == "L") {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    return P::from_kets({{"0000", 1.0 + w}, {"1111", 1.0 + w}, {"0011", 1.0 - w},
                         {"1100", 1.0 - w}, {"0101", w * w}, {"0110", w * w},
                         {"1001", w * w}, {"1010", w * w}});
  }
  throw UnknownState("unknown state: " + std::string(name));
}

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::Gabcd: return 4;
    case Family::Labc2: return 3;
    case Family::La2b2: return 2;
    case Family::La2_03p1: return 1;
    case Family::Lab3: return 2;
    case Family::La4: return 1;
    default: return 0;
  }
}

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::Gabcd: return "Gabcd";
    case Family::Labc2: return "Labc2";
    case Family::La2b2: return "La2b2";
    case Family::La2_03p1: return "La2_03p1";
    case Family::Lab3: return "Lab3";
    case Family::La4: return "La4";
    case Family::L05p3: return "L05p3";
    case Family::L07p1: return "L07p1";
    case Family::L03p1_03p1: return "L03p1_03p1";
  }
  return "";
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams{Family::Gabcd, Family::Labc2,  Family::La2b2,
                                        Family::La2_03p1, Family::Lab3, Family::La4,
                                        Family::L05p3, Family::L07p1, Family::L03p1_03p1};
  return fams;
}

Family family_from_tag(std::string_view tag) {
  for (Family f : all_families()) {
    if (family_tag(f) == tag) return f;
  }
  throw UnknownState("unknown family: " + std::string(tag));
}

static void check_arity(const FamilyParams& p) {
  if (p.params.size() != family_arity(p.family)) {
    throw ArityMismatch(std::string(family_tag(p.family)) + " takes " +
                        std::to_string(family_arity(p.family)) + " parameters, got " +
                        std::to_string(p.params.size()));
  }
}

Amplitudes4 verstraete_amplitudes(const FamilyParams& p) {
  check_arity(p);
  const auto& v = p.params;
  Amplitudes4 t{};
  switch (p.family) {
    case Family::Gabcd: {
      const cplx a = v[0], b = v[1], c = v[2], d = v[3];
      for (auto k : {"0000", "1111"}) put(t, k, (a + d) / 2.0);
      for (auto k : {"0011", "1100"}) put(t, k, (a - d) / 2.0);
      for (auto k : {"0101", "1010"}) put(t, k, (b + c) / 2.0);
      for (auto k : {"0110", "1001"}) put(t, k, (b - c) / 2.0);
      break;
    }
    case Family::Labc2: {
      const cplx a = v[0], b = v[1], c = v[2];
      for (auto k : {"0000", "1111"}) put(t, k, (a + b) / 2.0);
      for (auto k : {"0011", "1100"}) put(t, k, (a - b) / 2.0);
      for (auto k : {"0101", "1010"}) put(t, k, c);
      put(t, "0110", 1.0);
      break;
    }
    case Family::La2b2: {
      for (auto k : {"0000", "1111"}) put(t, k, v[0]);
      for (auto k : {"0101", "1010"}) put(t, k, v[1]);
      put(t, "0110", 1.0);
      put(t, "0011", 1.0);
      break;
    }
    case Family::La2_03p1: {
      for (auto k : {"0000", "1111"}) put(t, k, v[0]);
      for (auto k : {"0011", "0101", "0110"}) put(t, k, 1.0);
      break;
    }
    case Family::Lab3: {
      const cplx a = v[0], b = v[1];
      const cplx s(0.0, 1.0 / std::sqrt(2.0));
      for (auto k : {"0000", "1111"}) put(t, k, a);
      for (auto k : {"0101", "1010"}) put(t, k, (a + b) / 2.0);
      for (auto k : {"0110", "1001"}) put(t, k, (a - b) / 2.0);
      for (auto k : {"0001", "0010", "0111", "1011"}) put(t, k, s);
      break;
    }
    case Family::La4: {
      for (auto k : {"0000", "0101", "1010", "1111"}) put(t, k, v[0]);
      put(t, "0001", cplx(0.0, 1.0));
      put(t, "0110", 1.0);
      put(t, "1011", cplx(0.0, -1.0));
      break;
    }
    case Family::L05p3:
      for (auto k : {"0000", "0101", "1000", "1110"}) put(t, k, 1.0);
      break;
    case Family::L07p1:
      for (auto k : {"0000", "1011", "1101", "1110"}) put(t, k, 1.0);
      break;
    case Family::L03p1_03p1:
      for (auto k : {"0000", "0111"}) put(t, k, 1.0);
      break;
  }
  return t;
}

PureState4 verstraete_state(const FamilyParams& p) {
  return PureState4(verstraete_amplitudes(p));
}

InvariantTriple verstraete_invariants_closed_form(const FamilyParams& p) {
  check_arity(p);
  const auto& v = p.params;
  switch (p.family) {
    case Family::Gabcd: {
      const cplx a = v[0], b = v[1], c = v[2], d = v[3];
      const cplx A = a * a, B = b * b, C = c * c, D = d * d;
      const cplx S = ((B - C) * (B - C) * (A - D) * (A - D) +
                      (A - B) * (B - C) * (A - D) * (C - D) +
                      (A - B) * (A - B) * (C - D) * (C - D)) /
                     12.0;
      const cplx u = (a * c + b * d) * (a * c + b * d) + (a * b + c * d) * (a * b + c * d) -
                     2.0 * (b * c + a * d) * (b * c + a * d);
      const cplx w = (b - c) * (b + c) * (a - d) * (a + d);
      const cplx T = u * (u * u - 9.0 * w * w) / 1728.0;
      const cplx h = (A - B) * (A - C) * (B - C) * (A - D) * (B - D) * (C - D);
      InvariantTriple r = InvariantTriple::from_st(S, T);
      r.hdet = h * h / 256.0;
      r.abs_hdet = std::abs(r.hdet);
      return r;
    }
    case Family::Labc2: {
      const cplx a2 = v[0] * v[0], b2 = v[1] * v[1], c2 = v[2] * v[2];
      const cplx x = (a2 - c2) * (c2 - b2);
      return InvariantTriple::from_st(x * x / 12.0, x * x * x / 216.0);
    }
    case Family::La2b2: {
      const cplx x = (v[0] - v[1]) * (v[0] + v[1]);
      const cplx x2 = x * x;
      return InvariantTriple::from_st(x2 * x2 / 12.0, -(x2 * x2 * x2) / 216.0);
    }
    case Family::La2_03p1: {
      const cplx a4 = std::pow(v[0], 4);
      return InvariantTriple::from_st(a4 * a4 / 12.0, -(a4 * a4 * a4) / 216.0);
    }
    default:
      return InvariantTriple::from_st(0.0, 0.0);
  }
}

InvariantTriple normalize_invariants(const InvariantTriple& raw, double n) {
  const double n4 = n * n * n * n;
  InvariantTriple r = InvariantTriple::from_st(raw.S / (n4 * n4), raw.T / (n4 * n4 * n4));
  const double n24 = std::pow(n4, 6);
  r.hdet = raw.hdet / n24;
  r.abs_hdet = std::abs(r.hdet);
  return r;
}

}  // namespace hdet
