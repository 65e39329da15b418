#pragma once

#include "hdet/types.hpp"

namespace hdet::detail {

#if defined(__SIZEOF_FLOAT128__)
using ext_real = __float128;
#else
using ext_real = long double;
#endif

struct ExtComplex {
  ext_real re = 0;
  ext_real im = 0;

  ExtComplex() = default;
  ExtComplex(ext_real r, ext_real i = 0) : re(r), im(i) {}
  explicit ExtComplex(cplx z) : re(z.real()), im(z.imag()) {}
  ExtComplex(int k) : re(k), im(0) {}

  cplx to_cplx() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  ExtComplex& operator+=(const ExtComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend ExtComplex operator+(ExtComplex a, const ExtComplex& b) { return a += b; }
  friend ExtComplex operator-(const ExtComplex& a, const ExtComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExtComplex operator-(const ExtComplex& a) { return {-a.re, -a.im}; }
  friend ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExtComplex operator/(const ExtComplex& a, const ExtComplex& b) {
    const ext_real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

}  // namespace hdet::detail
