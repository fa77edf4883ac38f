#pragma once

// Complex-double coefficient ring for the flagged floating diagnostics mode.
//
// Runs the identical symbolic pipeline with numeric coefficients so that
// parameters outside the exact field (e.g. non-Pythagorean Rossi values) can
// still be examined.  Zero tests use a small absolute tolerance; results are
// diagnostics only and never feed back into exact state.

#include <cmath>
#include <complex>
#include <utility>

#include "websterlab/ring.hpp"

namespace websterlab {

struct DblScalar {
  std::complex<double> v{0.0, 0.0};

  DblScalar() = default;
  DblScalar(long x) : v(static_cast<double>(x), 0.0) {}  // NOLINT: implicit by design
  DblScalar(double x) : v(x, 0.0) {}                     // NOLINT: implicit by design
  DblScalar(std::complex<double> x) : v(x) {}            // NOLINT: implicit by design

  static constexpr double kZeroTol = 1e-12;

  friend DblScalar operator+(DblScalar a, DblScalar b) { return {a.v + b.v}; }
  friend DblScalar operator-(DblScalar a, DblScalar b) { return {a.v - b.v}; }
  friend DblScalar operator-(DblScalar a) { return {-a.v}; }
  friend DblScalar operator*(DblScalar a, DblScalar b) { return {a.v * b.v}; }
  friend bool operator==(DblScalar a, DblScalar b) { return std::abs(a.v - b.v) <= kZeroTol; }
};

template <>
struct RingTraits<DblScalar> {
  static constexpr bool exact = false;
  [[nodiscard]] static DblScalar zero() { return {0L}; }
  [[nodiscard]] static DblScalar one() { return {1L}; }
  [[nodiscard]] static DblScalar i() { return {std::complex<double>(0.0, 1.0)}; }
  [[nodiscard]] static DblScalar sqrt2() { return {std::sqrt(2.0)}; }
  [[nodiscard]] static DblScalar from_rational(const Rational& r) { return {r.get_d()}; }
  [[nodiscard]] static DblScalar conj(DblScalar x) { return {std::conj(x.v)}; }
  [[nodiscard]] static bool is_zero(DblScalar x) { return std::abs(x.v) <= DblScalar::kZeroTol; }
  [[nodiscard]] static DblScalar inverse(DblScalar x) {
    if (is_zero(x)) throw std::domain_error("division by zero");
    return {1.0 / x.v};
  }
  [[nodiscard]] static std::pair<DblScalar, DblScalar> nilpotent_split(DblScalar x) {
    return {x, DblScalar{}};
  }
  [[nodiscard]] static bool positive_real(DblScalar x) {
    return std::abs(x.v.imag()) <= DblScalar::kZeroTol && x.v.real() > DblScalar::kZeroTol;
  }
  [[nodiscard]] static std::complex<double> to_complex(DblScalar x) { return x.v; }
};

}  // namespace websterlab
