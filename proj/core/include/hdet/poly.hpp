#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

#include "hdet/types.hpp"

namespace hdet {

inline constexpr std::size_t kMaxPolyLength = 5;

/// Dense polynomial of formal degree <= 4: coeff(k) multiplies x^k. The formal
/// length is kept even when leading coefficients vanish.
template <class Scalar>
class BasicPoly {
 public:
  BasicPoly() = default;
  BasicPoly(std::initializer_list<Scalar> coeffs) {
    if (coeffs.size() > kMaxPolyLength) {
      throw std::length_error("polynomial degree exceeds 4");
    }
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
    size_ = coeffs.size();
  }

  std::size_t size() const { return size_; }
  int degree() const { return static_cast<int>(size_) - 1; }
  Scalar coeff(std::size_t k) const { return k < size_ ? c_[k] : Scalar{}; }
  Scalar& operator[](std::size_t k) { return c_[k]; }
  const Scalar& operator[](std::size_t k) const { return c_[k]; }

  void resize(std::size_t n) {
    if (n > kMaxPolyLength) throw std::length_error("polynomial degree exceeds 4");
    for (std::size_t k = n; k < size_; ++k) c_[k] = Scalar{};
    size_ = n;
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly r;
    r.size_ = std::max(a.size_, b.size_);
    for (std::size_t k = 0; k < r.size_; ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
    return r;
  }

  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly r;
    r.size_ = std::max(a.size_, b.size_);
    for (std::size_t k = 0; k < r.size_; ++k) r.c_[k] = a.coeff(k) - b.coeff(k);
    return r;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly r;
    if (a.size_ == 0 || b.size_ == 0) return r;
    r.resize(a.size_ + b.size_ - 1);
    for (std::size_t i = 0; i < a.size_; ++i) {
      for (std::size_t j = 0; j < b.size_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend BasicPoly operator*(const Scalar& s, const BasicPoly& p) {
    BasicPoly r = p;
    for (std::size_t k = 0; k < r.size_; ++k) r.c_[k] = s * r.c_[k];
    return r;
  }

 private:
  std::array<Scalar, kMaxPolyLength> c_{};
  std::size_t size_ = 0;
};

using PolyX = BasicPoly<cplx>;

PolyX poly_add(const PolyX& a, const PolyX& b);
PolyX poly_mul(const PolyX& a, const PolyX& b);

/// q1^2 - 4 q0 q2 for q0 + q1 x + q2 x^2. Missing coefficients count as zero;
/// throws std::invalid_argument for formal degree > 2.
cplx quadratic_discriminant(const PolyX& p);

/// P(x) = b0 x^4 + 4 b1 x^3 + 6 b2 x^2 + 4 b3 x + b4.
struct QuarticBinomial {
  cplx b0{}, b1{}, b2{}, b3{}, b4{};

  /// From raw coefficients (coeff(k) of x^k); formal degree <= 4.
  static QuarticBinomial from_poly(const PolyX& p);
};

/// Double evaluates in complex<double>; Extended in 113-bit-mantissa binary
/// floating point (long double where __float128 is unavailable).
enum class Precision { Double, Extended };

struct QuarticST {
  cplx S{};
  cplx T{};
};

QuarticST quartic_st(const QuarticBinomial& q, Precision precision = Precision::Double);
cplx quartic_hdet(const QuarticBinomial& q, Precision precision = Precision::Double);

/// |h| < max(1e-12, 1e6 eps |S|^3).
bool is_structural_zero(cplx hdet, cplx S);

/// Resultant-convention discriminant prod_{i<j} (r_i - r_j)^2 times b0^6 equals
/// kRootDiscriminantScale * quartic_hdet for the binomial form above.
inline constexpr double kRootDiscriminantScale = 256.0;

}  // namespace hdet
