#include <doctest.h>

#include "approx.hpp"
#include "hdet/hdet.hpp"

using namespace hdet;
using namespace std::complex_literals;

TEST_CASE("named states") {
  const InvariantTriple ghz = invariants_of(named_state("GHZ"));
  CHECK_CNEAR(ghz.S, 1.0 / 192, 1e-15);
  CHECK_CNEAR(ghz.T, -1.0 / 13824, 1e-15);
  for (const char* n : {"C1", "C2", "C3"}) CHECK_CNEAR(invariants_of(named_state(n)).T, -1.0 / 13824, 1e-15);
  // the printed YC differs from GHZ by a local phase gate with det = i
  CHECK_CNEAR(invariants_of(named_state("YC")).T, 1.0 / 13824, 1e-15);
  const InvariantTriple l = invariants_of(named_state("L"));
  CHECK_CNEAR(l.T, -1.0 / 11664, 1e-15);
  CHECK(l.abs_hdet == doctest::Approx(1.0 / (256.0 * 19683.0)).epsilon(1e-12));
  CHECK(named_state_names().size() == 8);
  CHECK_THROWS_AS(named_state("GHZ5"), UnknownState);
}

TEST_CASE("family G_abcd against an independent oracle") {
  const FamilyParams p{Family::Gabcd, {1.0, 2.0i, 0.5, -1.0 + 1.0i}};
  const InvariantTriple t = invariants_of(verstraete_state(p));
  CHECK_CNEAR(t.S, (cplx{-0.0021999742676531665, 0.0013309184515536724}), 1e-14);
  CHECK_CNEAR(t.T, (cplx{2.9143792442878005e-05, 2.1244528071791483e-05}), 1e-15);
  CHECK_CNEAR(t.hdet, (cplx{-9.7037211642063556e-09, -1.6466920763501713e-08}), 1e-18);
  const InvariantTriple cf =
      normalize_invariants(verstraete_invariants_closed_form(p), norm(verstraete_amplitudes(p)));
  CHECK_CNEAR(cf.S, t.S, 1e-14);
  CHECK_CNEAR(cf.hdet, t.hdet, 1e-18);
}

TEST_CASE("family L_abc2 against an independent oracle") {
  const FamilyParams p{Family::Labc2, {0.3, 1.2, -0.7i}};
  const InvariantTriple t = invariants_of(verstraete_state(p));
  CHECK_CNEAR(t.S, 0.00068795636517784693, 1e-15);
  CHECK_CNEAR(t.T, -3.4726375560627756e-06, 1e-17);
  CHECK(t.abs_hdet <= 1e-20);
}

TEST_CASE("family tags and arity") {
  for (Family f : all_families()) CHECK(family_from_tag(family_tag(f)) == f);
  CHECK(family_arity(Family::L05p3) == 0);
  CHECK_THROWS_AS(family_from_tag("Gxyz"), UnknownState);
  CHECK_THROWS_AS(verstraete_state({Family::Gabcd, {1.0, 2.0}}), ArityMismatch);
  for (Family f : {Family::Lab3, Family::La4, Family::L05p3, Family::L07p1, Family::L03p1_03p1}) {
    FamilyParams p{f, {}};
    for (std::size_t i = 0; i < family_arity(f); ++i) p.params.push_back(0.7 + 0.1i * double(i));
    CHECK(invariants_of(verstraete_state(p)).abs_S <= 1e-12);
  }
}
