#pragma once

// Pseudohermitian structures: solving the adapted coframe equations.
//
// Given a real contact form theta and a holomorphic coframe partner theta1
// (both as background-component one-forms), solve_structure derives the full
// invariant package: Levi coefficient h11, connection one-form omega, torsion
// A11, and scalar curvature R, by matching the structure equations
//
//   d theta  = i h11 theta1 ^ theta1b
//   d theta1 = theta1 ^ omega + A^1_{1b} theta ^ theta1b
//   d log h11 = omega + conj(omega)
//
// componentwise in the coframe's own basis.  The theta-wedge parts of
// d omega are reported, never asserted, so torsion-derivative effects stay
// visible.  Everything is templated on the coefficient ring: exact scalars,
// two-parameter jets (deformations), or complex doubles (diagnostics).

#include <array>
#include <cmath>
#include <initializer_list>
#include <optional>

#include "websterlab/float_ring.hpp"
#include "websterlab/jet.hpp"
#include "websterlab/one_form.hpp"

namespace websterlab {

/// Component of a tensor of weight (k, l): k lower holomorphic indices and
/// l lower antiholomorphic ones.
template <class K>
struct TensorComponent {
  SpherePoly<K> value;
  int k = 0, l = 0;
};

namespace dir {
inline constexpr int reeb = 0;  // transverse direction e0
inline constexpr int hol = 1;   // e1
inline constexpr int anti = 2;  // e1b
}  // namespace dir

template <class K>
using Mat3 = std::array<std::array<SpherePoly<K>, 3>, 3>;

template <class K>
[[nodiscard]] SpherePoly<K> det3(const Mat3<K>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Inverse of a 3x3 polynomial matrix via the adjugate; requires an
/// invertible determinant.
template <class K>
[[nodiscard]] Mat3<K> inv3(const Mat3<K>& m) {
  SpherePoly<K> dinv = det3(m).inverse();
  Mat3<K> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // adjugate: transposed cofactors
      int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) * dinv;
    }
  }
  return r;
}

template <class K>
struct PhStructure {
  // coframe, background components
  OneForm<K> theta, theta1, theta1b;
  // derived invariants
  SpherePoly<K> h11, h11_inv;
  OneForm<K> omega;  // connection one-form, background components
  SpherePoly<K> A11, A11b;
  SpherePoly<K> Rcurv;
  SpherePoly<K> resid_t1, resid_t1b;  // theta-wedge parts of d omega (report only)
  Mat3<K> frame;                      // columns: e0, e1, e1b in the background frame

  [[nodiscard]] std::array<SpherePoly<K>, 3> frame_vec(int direction) const {
    return {frame[0][direction], frame[1][direction], frame[2][direction]};
  }
};

template <class K>
[[nodiscard]] PhStructure<K> solve_structure(const OneForm<K>& theta, const OneForm<K>& theta1) {
  if (!theta.is_real()) throw std::domain_error("coframe not adapted");

  PhStructure<K> S;
  S.theta = theta;
  S.theta1 = theta1;
  S.theta1b = theta1.conj();

  Mat3<K> M{std::array<SpherePoly<K>, 3>{theta.c_theta, theta.c_1, theta.c_1b},
            {theta1.c_theta, theta1.c_1, theta1.c_1b},
            {S.theta1b.c_theta, S.theta1b.c_1, S.theta1b.c_1b}};
  try {
    S.frame = inv3(M);
  } catch (const std::domain_error&) {
    throw std::domain_error("not strictly pseudoconvex");
  }
  auto e0 = S.frame_vec(dir::reeb), e1 = S.frame_vec(dir::hol), e1b = S.frame_vec(dir::anti);

  K i = RingTraits<K>::i();

  // Levi form from d theta = i h11 theta1 ^ theta1b
  TwoForm<K> dth = d(theta);
  if (!dth.pair(e0, e1).is_zero() || !dth.pair(e0, e1b).is_zero())
    throw std::domain_error("coframe not adapted");
  S.h11 = (-i) * dth.pair(e1, e1b);
  if (!S.h11.is_real()) throw std::domain_error("not strictly pseudoconvex");
  try {
    S.h11_inv = S.h11.inverse();
  } catch (const std::domain_error&) {
    throw std::domain_error("not strictly pseudoconvex");
  }
  if (!RingTraits<K>::positive_real(S.h11.constant_part()))
    throw std::domain_error("not strictly pseudoconvex");

  // connection and torsion from d theta1 = theta1 ^ omega + A^1_{1b} theta ^ theta1b
  TwoForm<K> dth1 = d(theta1);
  SpherePoly<K> w0 = -dth1.pair(e0, e1);
  SpherePoly<K> torsion_raised = dth1.pair(e0, e1b);  // A^1_{1b}
  SpherePoly<K> w1b = dth1.pair(e1, e1b);

  OneForm<K> dh = d_scalar(S.h11);
  SpherePoly<K> w1 = dh.pair(e1) * S.h11_inv - w1b.conj();
  if (!(w0 + w0.conj() == dh.pair(e0) * S.h11_inv))
    throw std::domain_error("coframe not adapted");

  S.omega = w0 * theta + w1 * theta1 + w1b * S.theta1b;
  S.A11b = S.h11 * torsion_raised;
  S.A11 = S.A11b.conj();

  // curvature from the theta1^theta1b part of d omega; theta-wedge parts are
  // torsion-derivative terms and are carried as a report
  TwoForm<K> dw = d(S.omega);
  S.Rcurv = dw.pair(e1, e1b) * S.h11_inv;
  S.resid_t1 = dw.pair(e0, e1);
  S.resid_t1b = dw.pair(e0, e1b);
  return S;
}

/// The round sphere with its standard contact form and unitary coframe.
template <class K>
[[nodiscard]] PhStructure<K> standard_structure() {
  return solve_structure(background_theta<K>(), background_theta1<K>());
}

/// Member s of the family of left-invariant deformed structures on S^3:
/// theta unchanged, theta1 = (1+s^2) theta1_0 - s sqrt(1+s^2) theta1b_0.
/// Exact mode needs sqrt(1+s^2) rational, i.e. Pythagorean s.
[[nodiscard]] inline PhStructure<Scalar> rossi_structure(const Rational& s) {
  Rational one_s2 = 1 + s * s;
  auto c = Scalar::sqrt_of_rational(one_s2);
  if (!c || !c->is_rational()) throw std::domain_error("irrational Levi normalization");
  using Poly = SpherePoly<Scalar>;
  OneForm<Scalar> theta1 = Poly::constant(Scalar(one_s2)) * background_theta1<Scalar>() -
                           Poly::constant(Scalar(s) * (*c)) * background_theta1<Scalar>().conj();
  return solve_structure(background_theta<Scalar>(), theta1);
}

/// Floating variant for arbitrary real s (diagnostics mode).
[[nodiscard]] inline PhStructure<DblScalar> rossi_structure_float(double s) {
  double c = std::sqrt(1.0 + s * s);
  using Poly = SpherePoly<DblScalar>;
  OneForm<DblScalar> theta1 =
      Poly::constant(DblScalar(1.0 + s * s)) * background_theta1<DblScalar>() -
      Poly::constant(DblScalar(s * c)) * background_theta1<DblScalar>().conj();
  return solve_structure(background_theta<DblScalar>(), theta1);
}

/// Rescale theta1 so the Levi coefficient becomes 1.  Works when h11 is a
/// constant with an exact square root in Q(sqrt2); everything else is
/// refused, since the engine will not leave the exact field.
[[nodiscard]] inline PhStructure<Scalar> unitarize(const PhStructure<Scalar>& S) {
  if (S.h11 == SpherePoly<Scalar>::one()) return S;
  Scalar h = S.h11.constant_part();  // solver guarantees h11 constant over Scalar
  std::optional<Scalar> root;
  if (h.is_rational()) root = Scalar::sqrt_of_rational(h.rational_part().re);
  if (!root) throw std::domain_error("irrational Levi normalization");
  // theta1 -> sqrt(h) theta1 divides the Levi coefficient by h
  return solve_structure(S.theta, SpherePoly<Scalar>::constant(*root) * S.theta1);
}

// ---- covariant derivative -------------------------------------------------

/// Covariant derivative of a weight-(k, l) tensor component along frame
/// direction 0, 1, or 1b.  The connection acts with weight k through omega
/// and weight l through conj(omega).
template <class K>
[[nodiscard]] TensorComponent<K> covd(const PhStructure<K>& S, const TensorComponent<K>& t,
                                      int direction) {
  auto X = S.frame_vec(direction);
  SpherePoly<K> v =
      X[0] * reeb(t.value) + X[1] * d1(t.value) + X[2] * d1bar(t.value);
  if (t.k != 0) {
    K kf = RingTraits<K>::from_rational(Rational(t.k));
    v = v - kf * (S.omega.pair(X) * t.value);
  }
  if (t.l != 0) {
    K lf = RingTraits<K>::from_rational(Rational(t.l));
    v = v - lf * (S.omega.conj().pair(X) * t.value);
  }
  int k = t.k + (direction == dir::hol ? 1 : 0);
  int l = t.l + (direction == dir::anti ? 1 : 0);
  return {v, k, l};
}

/// Convenience: iterated covariant derivative along a slot string, e.g.
/// covd_path(S, t, {dir::hol, dir::anti}) is t_{,1 1b}.
template <class K>
[[nodiscard]] TensorComponent<K> covd_path(const PhStructure<K>& S, TensorComponent<K> t,
                                           std::initializer_list<int> directions) {
  for (int d : directions) t = covd(S, t, d);
  return t;
}

/// Sublaplacian h^{1 1b} (t_{,1 1b} + t_{,1b 1}); preserves the weight.
template <class K>
[[nodiscard]] TensorComponent<K> sublaplacian(const PhStructure<K>& S,
                                              const TensorComponent<K>& t) {
  SpherePoly<K> v = covd_path(S, t, {dir::hol, dir::anti}).value +
                    covd_path(S, t, {dir::anti, dir::hol}).value;
  return {S.h11_inv * v, t.k, t.l};
}

// ---- deformations ----------------------------------------------------------

namespace detail {
template <class K>
[[nodiscard]] OneForm<Jet2<K>> promote_form(const OneForm<K>& w) {
  using J = Jet2<K>;
  return {promote_poly<J>(w.c_theta), promote_poly<J>(w.c_1), promote_poly<J>(w.c_1b)};
}
}  // namespace detail

/// Deform a structure along a contact direction (parameter eps1, real
/// perturbation h) and/or a CR direction (parameter eps2, deformation tensor
/// E11), to second jet order.  The contact path rescales theta by
/// phi = 1 + 2 eps1 h + 2 eps1^2 h^2; the CR path tilts the holomorphic
/// coframe by -i eps2 conj(E11) theta1b.  The holomorphic coframe is then
/// re-adapted to the new Reeb field (solved directly in the jet ring as the
/// kernel direction of d theta) and the structure equations are re-solved.
[[nodiscard]] inline PhStructure<Jet2<Scalar>> deform_structure(
    const PhStructure<Scalar>& base, const SpherePoly<Scalar>* contact_h,
    const SpherePoly<Scalar>* cr_E) {
  using J = Jet2<Scalar>;
  using JPoly = SpherePoly<J>;

  PhStructure<Scalar> ubase = unitarize(base);
  OneForm<J> theta = detail::promote_form(ubase.theta);
  OneForm<J> theta1 = detail::promote_form(ubase.theta1);

  if (cr_E != nullptr && !cr_E->is_zero()) {
    JPoly E = promote_poly<J>(*cr_E);
    JPoly Eb = E.conj();
    JPoly eps = JPoly::constant(J::eps2());
    JPoly i = JPoly::constant(J::promote(Scalar::i()));
    OneForm<J> theta1b = theta1.conj();
    theta1 = (JPoly::one() + eps * eps * E * Eb) * theta1 - (i * eps * Eb) * theta1b;
  }
  if (contact_h != nullptr && !contact_h->is_zero()) {
    if (!contact_h->is_real()) throw std::domain_error("contact perturbation must be real");
    JPoly h = promote_poly<J>(*contact_h);
    JPoly eps = JPoly::constant(J::eps1());
    JPoly two = JPoly::constant(J(2));
    JPoly phi = JPoly::one() + two * eps * h + two * eps * eps * h * h;
    theta = phi * theta;
  }

  // re-adapt: subtract the Reeb component of theta1
  TwoForm<J> dth = d(theta);
  std::array<JPoly, 3> tdir{dth.c_11b, -dth.c_t1b, dth.c_t1};
  JPoly norm_inv = theta.pair(tdir).inverse();
  std::array<JPoly, 3> tvec{tdir[0] * norm_inv, tdir[1] * norm_inv, tdir[2] * norm_inv};
  theta1 = theta1 - theta1.pair(tvec) * theta;

  return solve_structure(theta, theta1);
}

[[nodiscard]] inline PhStructure<Jet2<Scalar>> deform_contact(const PhStructure<Scalar>& base,
                                                              const SpherePoly<Scalar>& h) {
  return deform_structure(base, &h, nullptr);
}

[[nodiscard]] inline PhStructure<Jet2<Scalar>> deform_cr(const PhStructure<Scalar>& base,
                                                         const SpherePoly<Scalar>& E11) {
  return deform_structure(base, nullptr, &E11);
}

}  // namespace websterlab
