#include <doctest.h>

#include "approx.hpp"
#include "hdet/hdet.hpp"

using namespace hdet;
using namespace std::complex_literals;

TEST_CASE("poly arithmetic stays within degree 4") {
  const PolyX a{1.0, 2.0}, b{-1.0, 0.0, 3.0};
  const PolyX p = poly_mul(a, b);
  REQUIRE(p.size() == 4);
  CHECK_CNEAR(p.coeff(0), -1.0, 0);
  CHECK_CNEAR(p.coeff(1), -2.0, 0);
  CHECK_CNEAR(p.coeff(2), 3.0, 0);
  CHECK_CNEAR(p.coeff(3), 6.0, 0);
  CHECK(poly_add(a, b).size() == 3);
  CHECK_THROWS_AS(poly_mul(p, b), std::length_error);
}

TEST_CASE("quadratic discriminant") {
  CHECK_CNEAR(quadratic_discriminant(PolyX{2.0, -3.0, 1.0}), 1.0, 1e-15);
  CHECK_CNEAR(quadratic_discriminant(PolyX{1.0, 2.0, 1.0}), 0.0, 0);
  CHECK_THROWS_AS(quadratic_discriminant(PolyX{1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("binomial S, T, hdet of a fixed complex quartic") {
  // -5 + 4x + (1-2i)x^2 - 3x^3 + (2+i)x^4, exact rational oracle
  const PolyX p{-5.0, 4.0, 1.0 - 2.0i, -3.0, 2.0 + 1.0i};
  const QuarticBinomial q = QuarticBinomial::from_poly(p);
  for (Precision pr : {Precision::Double, Precision::Extended}) {
    const QuarticST st = quartic_st(q, pr);
    CHECK_CNEAR(st.S, (cplx{-7.25, -5.333333333333333}), 1e-13);
    CHECK_CNEAR(st.T, (cplx{-2.7199074074074074, 1.9907407407407407}), 1e-13);
    CHECK_CNEAR(quartic_hdet(q, pr), (cplx{144.84765625, -396.90625}), 1e-10);
  }
}

TEST_CASE("double root (x-1)^2 (x^2+1) is a structural zero") {
  const PolyX p = poly_mul(poly_mul(PolyX{-1.0, 1.0}, PolyX{-1.0, 1.0}), PolyX{1.0, 0.0, 1.0});
  const QuarticBinomial q = QuarticBinomial::from_poly(p);
  const cplx h = quartic_hdet(q);
  CHECK(std::abs(h) <= 1e3 * kEps * std::pow(std::abs(quartic_st(q).S), 3));
  CHECK(is_structural_zero(h, quartic_st(q).S));
}

TEST_CASE("root discriminant equals 256 hdet") {
  const cplx r[4] = {0.5, -1.0 + 1.0i, 2.0i, 3.0};
  PolyX p{2.0};
  for (cplx z : r) p = poly_mul(p, PolyX{-z, 1.0});
  cplx disc = std::pow(cplx(2.0), 6);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) disc *= (r[i] - r[j]) * (r[i] - r[j]);
  }
  const cplx h = quartic_hdet(QuarticBinomial::from_poly(p));
  CHECK(std::abs(kRootDiscriminantScale * h - disc) <= 1e-10 * std::abs(disc));
}
