#include "hdet/poly.hpp"

#include <algorithm>
#include <cmath>

#include "extended.hpp"

namespace hdet {

namespace {

template <class Scalar>
void st_impl(const Scalar& b0, const Scalar& b1, const Scalar& b2, const Scalar& b3,
             const Scalar& b4, Scalar& S, Scalar& T) {
  S = Scalar(3) * b2 * b2 - Scalar(4) * b1 * b3 + b0 * b4;
  T = -(b2 * b2 * b2) + Scalar(2) * b1 * b2 * b3 - b0 * b3 * b3 - b1 * b1 * b4 +
      b0 * b2 * b4;
}

}  // namespace

PolyX poly_add(const PolyX& a, const PolyX& b) { return a + b; }
PolyX poly_mul(const PolyX& a, const PolyX& b) { return a * b; }

cplx quadratic_discriminant(const PolyX& p) {
  if (p.size() > 3) throw std::invalid_argument("quadratic_discriminant: degree > 2");
  const cplx q0 = p.coeff(0), q1 = p.coeff(1), q2 = p.coeff(2);
  return q1 * q1 - 4.0 * q0 * q2;
}

QuarticBinomial QuarticBinomial::from_poly(const PolyX& p) {
  return {p.coeff(4), p.coeff(3) / 4.0, p.coeff(2) / 6.0, p.coeff(1) / 4.0, p.coeff(0)};
}

QuarticST quartic_st(const QuarticBinomial& q, Precision precision) {
  if (precision == Precision::Extended) {
    using detail::ExtComplex;
    ExtComplex S, T;
    st_impl(ExtComplex(q.b0), ExtComplex(q.b1), ExtComplex(q.b2), ExtComplex(q.b3),
            ExtComplex(q.b4), S, T);
    return {S.to_cplx(), T.to_cplx()};
  }
  cplx S, T;
  st_impl(q.b0, q.b1, q.b2, q.b3, q.b4, S, T);
  return {S, T};
}

cplx quartic_hdet(const QuarticBinomial& q, Precision precision) {
  if (precision == Precision::Extended) {
    using detail::ExtComplex;
    ExtComplex S, T;
    st_impl(ExtComplex(q.b0), ExtComplex(q.b1), ExtComplex(q.b2), ExtComplex(q.b3),
            ExtComplex(q.b4), S, T);
    return (S * S * S - ExtComplex(27) * T * T).to_cplx();
  }
  const QuarticST st = quartic_st(q, precision);
  return hdet_from_st(st.S, st.T);
}

bool is_structural_zero(cplx hdet, cplx S) {
  const double s3 = std::pow(std::abs(S), 3);
  return std::abs(hdet) < std::max(1e-12, 1e6 * kEps * s3);
}

}  // namespace hdet
