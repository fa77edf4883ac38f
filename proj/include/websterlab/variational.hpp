#pragma once

// Total-curvature energy and its first variation.
//
// The functional is E = integral of (R^2 - |A|^2) over theta ^ d theta.
// Critical structures are detected through two Euler-Lagrange densities:
// el_J for deformations of the CR structure at fixed contact form, and
// el_theta for deformations of the contact form at fixed CR structure.
// First variations come in closed form; the same quantities can be read off
// the eps-jets of the energy, which is what the cross-check tests do.

#include "websterlab/ph_structure.hpp"

namespace websterlab {

/// Density of theta ^ d theta against the background volume form.
template <class K>
[[nodiscard]] SpherePoly<K> vol_factor(const PhStructure<K>& S) {
  K i_inv = RingTraits<K>::inverse(RingTraits<K>::i());
  return i_inv * wedge_top(S.theta, d(S.theta));
}

/// Integral of f against theta ^ d theta.
template <class K>
[[nodiscard]] IntegralValue<K> integrate_density(const PhStructure<K>& S,
                                                 const SpherePoly<K>& f) {
  return (f * vol_factor(S)).integrate(Measure::contact);
}

/// |A|^2 = A_{11} A_{1b1b} h^{1 1b} h^{1 1b}.
template <class K>
[[nodiscard]] SpherePoly<K> torsion_norm_sq(const PhStructure<K>& S) {
  return S.A11 * S.A11b * S.h11_inv * S.h11_inv;
}

template <class K>
[[nodiscard]] IntegralValue<K> energy(const PhStructure<K>& S) {
  return integrate_density(S, S.Rcurv * S.Rcurv - torsion_norm_sq(S));
}

/// Euler-Lagrange and compatibility densities of the energy at a structure.
template <class K>
struct ResidualReport {
  SpherePoly<K> pe;        // R_{,1} - i h^{1 1b} A_{11,1b}
  SpherePoly<K> el_J;      // CR-direction Euler-Lagrange density, weight (2,0)
  SpherePoly<K> el_theta;  // contact-direction Euler-Lagrange density, real scalar
  SpherePoly<K> dw_t1, dw_t1b;  // theta-wedge parts of d omega

  [[nodiscard]] bool is_critical() const { return el_J.is_zero() && el_theta.is_zero(); }
};

template <class K>
[[nodiscard]] ResidualReport<K> residuals(const PhStructure<K>& S) {
  K i = RingTraits<K>::i();
  K half = RingTraits<K>::from_rational(frac(1, 2));

  TensorComponent<K> R{S.Rcurv, 0, 0};
  TensorComponent<K> A{S.A11, 2, 0};
  TensorComponent<K> Ab{S.A11b, 0, 2};

  ResidualReport<K> out;
  out.pe = covd(S, R, dir::hol).value -
           i * (S.h11_inv * covd(S, A, dir::anti).value);
  out.el_J = covd_path(S, R, {dir::hol, dir::hol}).value -
             (i * half) * (S.h11_inv * (covd_path(S, A, {dir::hol, dir::anti}).value -
                                        covd_path(S, A, {dir::anti, dir::hol}).value));
  SpherePoly<K> lapR = sublaplacian(S, R).value;
  out.el_theta =
      SpherePoly<K>::constant(RingTraits<K>::from_rational(Rational(-4))) * lapR -
      i * (S.h11_inv * S.h11_inv *
           (covd_path(S, Ab, {dir::hol, dir::hol}).value -
            covd_path(S, A, {dir::anti, dir::anti}).value));
  out.dw_t1 = S.resid_t1;
  out.dw_t1b = S.resid_t1b;
  return out;
}

/// First variation along a contact perturbation theta -> (1 + 2 eps h) theta.
template <class K>
[[nodiscard]] IntegralValue<K> first_variation_theta(const PhStructure<K>& S,
                                                     const SpherePoly<K>& h) {
  if (!h.is_real()) throw std::domain_error("contact perturbation must be real");
  K two = RingTraits<K>::from_rational(Rational(2));
  return integrate_density(S, two * (residuals(S).el_theta * h));
}

/// First variation along a CR deformation with tensor E11 (weight (2,0)).
template <class K>
[[nodiscard]] IntegralValue<K> first_variation_J(const PhStructure<K>& S,
                                                 const SpherePoly<K>& E11) {
  K i = RingTraits<K>::i();
  K two = RingTraits<K>::from_rational(Rational(2));
  TensorComponent<K> R{S.Rcurv, 0, 0};
  TensorComponent<K> Ab{S.A11b, 0, 2};
  SpherePoly<K> density = two * i * covd_path(S, R, {dir::anti, dir::anti}).value -
                          two * (S.Rcurv * S.A11b) +
                          i * covd(S, Ab, dir::reeb).value;
  IntegralValue<K> half_pairing =
      integrate_density(S, density * E11 * S.h11_inv * S.h11_inv);
  return half_pairing + half_pairing.conj();
}

/// Energy of a deformed structure as a two-parameter jet: eps1 is the
/// contact direction, eps2 the CR direction.
[[nodiscard]] inline IntegralValue<Jet2<Scalar>> jet_energy(const PhStructure<Scalar>& base,
                                                            const SpherePoly<Scalar>* contact_h,
                                                            const SpherePoly<Scalar>* cr_E) {
  return energy(deform_structure(base, contact_h, cr_E));
}

}  // namespace websterlab
