#pragma once

#include <complex>

#include <doctest.h>

#define CHECK_CNEAR(got, want, tol)                                        \
  do {                                                                     \
    const std::complex<double> got_ = (got), want_ = (want);               \
    INFO("got " << got_ << " want " << want_);                             \
    CHECK(std::abs(got_ - want_) <= (tol));                                \
  } while (0)
