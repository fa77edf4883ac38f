#pragma once

// Differential forms on S^3 in the fixed background coframe.
//
// The background coframe is (theta0, theta1, theta1b) where theta0 is the
// round contact form, theta1 = sqrt(2) (z2 dz1 - z1 dz2) its unit-normalised
// holomorphic partner, and theta1b the conjugate.  Its dual frame is
// (T, e1, e1b) with e1 = Z1/sqrt(2).  The structure constants are rigid:
//
//   d theta0  =  i theta1 ^ theta1b
//   d theta1  =  i theta0 ^ theta1
//   d theta1b = -i theta0 ^ theta1b
//
// so the exterior derivative of any polynomial-coefficient form is again
// polynomial-coefficient, componentwise.  Everything below is plain
// multilinear bookkeeping over those constants.

#include <array>

#include "websterlab/sphere_poly.hpp"

namespace websterlab {

template <class K>
struct OneForm {
  SpherePoly<K> c_theta, c_1, c_1b;  // components on (theta0, theta1, theta1b)

  friend OneForm operator+(const OneForm& x, const OneForm& y) {
    return {x.c_theta + y.c_theta, x.c_1 + y.c_1, x.c_1b + y.c_1b};
  }
  friend OneForm operator-(const OneForm& x, const OneForm& y) {
    return {x.c_theta - y.c_theta, x.c_1 - y.c_1, x.c_1b - y.c_1b};
  }
  friend OneForm operator-(const OneForm& x) { return {-x.c_theta, -x.c_1, -x.c_1b}; }
  friend OneForm operator*(const SpherePoly<K>& f, const OneForm& y) {
    return {f * y.c_theta, f * y.c_1, f * y.c_1b};
  }
  friend bool operator==(const OneForm& x, const OneForm& y) {
    return x.c_theta == y.c_theta && x.c_1 == y.c_1 && x.c_1b == y.c_1b;
  }

  [[nodiscard]] OneForm conj() const {
    return {c_theta.conj(), c_1b.conj(), c_1.conj()};  // conj swaps theta1 <-> theta1b
  }
  [[nodiscard]] bool is_real() const { return *this == conj(); }
  [[nodiscard]] bool is_zero() const {
    return c_theta.is_zero() && c_1.is_zero() && c_1b.is_zero();
  }

  /// Pair with a vector given by background-frame components (v0, v1, v1b).
  [[nodiscard]] SpherePoly<K> pair(const std::array<SpherePoly<K>, 3>& v) const {
    return c_theta * v[0] + c_1 * v[1] + c_1b * v[2];
  }
};

template <class K>
struct TwoForm {
  // components on theta0^theta1, theta0^theta1b, theta1^theta1b
  SpherePoly<K> c_t1, c_t1b, c_11b;

  friend TwoForm operator+(const TwoForm& x, const TwoForm& y) {
    return {x.c_t1 + y.c_t1, x.c_t1b + y.c_t1b, x.c_11b + y.c_11b};
  }
  friend TwoForm operator-(const TwoForm& x, const TwoForm& y) {
    return {x.c_t1 - y.c_t1, x.c_t1b - y.c_t1b, x.c_11b - y.c_11b};
  }
  friend bool operator==(const TwoForm& x, const TwoForm& y) {
    return x.c_t1 == y.c_t1 && x.c_t1b == y.c_t1b && x.c_11b == y.c_11b;
  }
  [[nodiscard]] bool is_zero() const {
    return c_t1.is_zero() && c_t1b.is_zero() && c_11b.is_zero();
  }

  /// Evaluate on a pair of vectors in background-frame components.
  [[nodiscard]] SpherePoly<K> pair(const std::array<SpherePoly<K>, 3>& u,
                                   const std::array<SpherePoly<K>, 3>& v) const {
    return c_t1 * (u[0] * v[1] - u[1] * v[0]) + c_t1b * (u[0] * v[2] - u[2] * v[0]) +
           c_11b * (u[1] * v[2] - u[2] * v[1]);
  }
};

/// Background contact form and its partners.
template <class K>
[[nodiscard]] OneForm<K> background_theta() {
  return {SpherePoly<K>::one(), SpherePoly<K>(), SpherePoly<K>()};
}
template <class K>
[[nodiscard]] OneForm<K> background_theta1() {
  return {SpherePoly<K>(), SpherePoly<K>::one(), SpherePoly<K>()};
}

/// Exterior derivative of a scalar: df = (T f) theta0 + (d1 f) theta1
/// + (d1bar f) theta1b.
template <class K>
[[nodiscard]] OneForm<K> d_scalar(const SpherePoly<K>& f) {
  return {reeb(f), d1(f), d1bar(f)};
}

/// Exterior derivative of a one-form, via the frozen structure constants.
template <class K>
[[nodiscard]] TwoForm<K> d(const OneForm<K>& w) {
  K i = RingTraits<K>::i();
  const SpherePoly<K>&a = w.c_theta, &b = w.c_1, &c = w.c_1b;
  TwoForm<K> r;
  r.c_t1 = reeb(b) - d1(a) + i * b;
  r.c_t1b = reeb(c) - d1bar(a) - (i * c);
  r.c_11b = i * a + d1(c) - d1bar(b);
  return r;
}

template <class K>
[[nodiscard]] TwoForm<K> wedge(const OneForm<K>& x, const OneForm<K>& y) {
  TwoForm<K> r;
  r.c_t1 = x.c_theta * y.c_1 - x.c_1 * y.c_theta;
  r.c_t1b = x.c_theta * y.c_1b - x.c_1b * y.c_theta;
  r.c_11b = x.c_1 * y.c_1b - x.c_1b * y.c_1;
  return r;
}

/// Coefficient of theta0 ^ theta1 ^ theta1b in x ^ Y.
template <class K>
[[nodiscard]] SpherePoly<K> wedge_top(const OneForm<K>& x, const TwoForm<K>& Y) {
  return x.c_theta * Y.c_11b - x.c_1 * Y.c_t1b + x.c_1b * Y.c_t1;
}

/// Exterior derivative of a two-form (top-degree coefficient).  The basis
/// two-forms are all closed under the frozen constants, so only coefficient
/// derivatives appear.
template <class K>
[[nodiscard]] SpherePoly<K> d_top(const TwoForm<K>& w) {
  return d1bar(w.c_t1) - d1(w.c_t1b) + reeb(w.c_11b);
}

}  // namespace websterlab
