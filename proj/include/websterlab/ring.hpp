#pragma once

// Coefficient-ring interface for the geometry engine.
//
// All geometric code is templated on the coefficient ring K so the same
// pipeline runs over the exact field Q(i, sqrt2), over two-parameter
// truncated jets of it (for deformation calculus), and over complex doubles
// (for the flagged floating diagnostics mode).  RingTraits<K> supplies the
// handful of hooks the generic code needs beyond ordinary +, -, *.

#include <complex>
#include <utility>

#include "websterlab/scalar.hpp"

namespace websterlab {

template <class K>
struct RingTraits;  // specialised per coefficient ring

template <>
struct RingTraits<Scalar> {
  static constexpr bool exact = true;
  [[nodiscard]] static Scalar zero() { return Scalar(0); }
  [[nodiscard]] static Scalar one() { return Scalar(1); }
  [[nodiscard]] static Scalar i() { return Scalar::i(); }
  [[nodiscard]] static Scalar sqrt2() { return Scalar::sqrt2(); }
  [[nodiscard]] static Scalar from_rational(const Rational& r) { return Scalar(r); }
  [[nodiscard]] static Scalar conj(const Scalar& x) { return x.conj(); }
  [[nodiscard]] static bool is_zero(const Scalar& x) { return x.is_zero(); }
  [[nodiscard]] static Scalar inverse(const Scalar& x) { return x.inverse(); }
  /// Split x = base + nil with nil nilpotent; trivial for a field.
  [[nodiscard]] static std::pair<Scalar, Scalar> nilpotent_split(const Scalar& x) {
    return {x, Scalar(0)};
  }
  /// True when the (jet-)constant part of x is a strictly positive real.
  [[nodiscard]] static bool positive_real(const Scalar& x) {
    return x.is_real() && x.real_sign() > 0;
  }
  [[nodiscard]] static std::complex<double> to_complex(const Scalar& x) { return x.value(); }
};

}  // namespace websterlab
