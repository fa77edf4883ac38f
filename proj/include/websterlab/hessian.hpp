#pragma once

// Second variation of the energy at a critical structure, by two routes.
//
// The closed-form route evaluates explicit quadratic densities in the
// perturbation: hess_theta for contact directions, hess_J / hess_J_raw for
// CR directions, hess_mixed for the cross term.  The jet route re-derives
// the same numbers by differentiating the energy of the deformed structure;
// spectrum rows carry both and record whether they agree.
//
// All second-variation entry points renormalise the Levi coefficient first
// and refuse non-critical base structures.

#include <string>
#include <thread>
#include <vector>

#include "websterlab/harmonics.hpp"
#include "websterlab/variational.hpp"

namespace websterlab {

/// Unit-normalise and insist on criticality; every quadratic form below
/// starts here.
[[nodiscard]] inline PhStructure<Scalar> hessian_base(const PhStructure<Scalar>& S) {
  PhStructure<Scalar> U = unitarize(S);
  if (!residuals(U).is_critical())
    throw std::domain_error("second variation undefined at non-critical point");
  return U;
}

/// Contact-direction quadratic form: theta -> (1 + 2 eps h) theta.
[[nodiscard]] inline IntegralValue<Scalar> hess_theta(const PhStructure<Scalar>& S0,
                                                      const SpherePoly<Scalar>& h) {
  if (!h.is_real()) throw std::domain_error("contact perturbation must be real");
  PhStructure<Scalar> S = hessian_base(S0);
  using Poly = SpherePoly<Scalar>;
  Scalar i = Scalar::i();

  TensorComponent<Scalar> th{h, 0, 0};
  Poly h1 = covd(S, th, dir::hol).value;
  Poly h1b = covd(S, th, dir::anti).value;
  Poly lap = sublaplacian(S, th).value;
  Poly h11 = covd_path(S, th, {dir::hol, dir::hol}).value;
  Poly h1b1b = covd_path(S, th, {dir::anti, dir::anti}).value;

  // -16 R |grad_b h|^2: the horizontal gradient square carries both index
  // contractions, h_{,1} h_{,1bar} + h_{,1bar} h_{,1}
  Poly density = Scalar(-32) * (S.Rcurv * h1 * h1b) +
                 (Scalar(8) * i) * (S.A11b * h1 * h1) -
                 (Scalar(8) * i) * (S.A11 * h1b * h1b) + Scalar(32) * (lap * lap) -
                 Scalar(8) * (h11 * h1b1b);
  return integrate_density(S, density);
}

/// CR-direction quadratic form, slice-reduced density.
[[nodiscard]] inline IntegralValue<Scalar> hess_J(const PhStructure<Scalar>& S0,
                                                  const SpherePoly<Scalar>& E) {
  PhStructure<Scalar> S = hessian_base(S0);
  using Poly = SpherePoly<Scalar>;
  Scalar i = Scalar::i();

  TensorComponent<Scalar> tE{E, 2, 0};
  TensorComponent<Scalar> tEb{E.conj(), 0, 2};
  Poly E0 = covd(S, tE, dir::reeb).value;
  Poly E1 = covd(S, tE, dir::hol).value;
  Poly E1b = covd(S, tE, dir::anti).value;
  Poly Eb1 = covd(S, tEb, dir::hol).value;
  Poly Eb = tEb.value;

  Poly main = Scalar(-2) * (E0 * E0.conj()) - Scalar(4) * (S.Rcurv * Eb1 * Eb1.conj()) +
              Scalar(4) * (S.Rcurv * E1 * E1.conj()) +
              (Scalar(8) * (S.Rcurv * S.Rcurv) - Scalar(4) * (S.A11 * S.A11b)) * (E * Eb);
  Poly bracket = (Scalar(2) * i + Scalar(2)) * (E1b * E1b) -
                 (Scalar(2) * i) * (E1 * Eb1) +
                 (Scalar(2) * i - Scalar(2)) * (E * E * S.A11b);
  Poly cross = bracket * S.A11b;
  return integrate_density(S, main + cross + cross.conj());
}

/// CR-direction quadratic form assembled from the linearised curvature,
/// without the slice reduction; matches the energy jet on every direction.
[[nodiscard]] inline IntegralValue<Scalar> hess_J_raw(const PhStructure<Scalar>& S0,
                                                      const SpherePoly<Scalar>& E) {
  PhStructure<Scalar> S = hessian_base(S0);
  using Poly = SpherePoly<Scalar>;
  Scalar i = Scalar::i();

  TensorComponent<Scalar> tE{E, 2, 0};
  TensorComponent<Scalar> tEb{E.conj(), 0, 2};
  Poly Eb = tEb.value;

  // linearised curvature of the deformation
  Poly dR = i * covd_path(S, tE, {dir::anti, dir::anti}).value - S.A11b * E -
            i * covd_path(S, tEb, {dir::hol, dir::hol}).value - S.A11 * Eb;

  Poly t1 = (Scalar(2) * i) * covd_path(S, {dR, 0, 0}, {dir::anti, dir::anti}).value;
  Poly t2 = Scalar(-2) * (dR * S.A11b);
  Poly t3 = (Scalar(2) * i) * (S.Rcurv * covd(S, tEb, dir::reeb).value);
  Poly t4 = covd_path(S, tEb, {dir::reeb, dir::reeb}).value -
            Scalar(2) * ((S.A11b * E + S.A11 * Eb) * S.A11b);

  IntegralValue<Scalar> half = integrate_density(S, (t1 + t2 + t3 + t4) * E);
  return half + half.conj();
}

/// Defect of a CR direction against the slice on which hess_J is valid.
[[nodiscard]] inline SpherePoly<Scalar> slice_residual(const PhStructure<Scalar>& S0,
                                                       const SpherePoly<Scalar>& E) {
  PhStructure<Scalar> S = hessian_base(S0);
  Scalar i = Scalar::i();
  TensorComponent<Scalar> tE{E, 2, 0};
  TensorComponent<Scalar> tEb{E.conj(), 0, 2};
  return i * covd_path(S, tE, {dir::anti, dir::anti}).value +
         i * covd_path(S, tEb, {dir::hol, dir::hol}).value - S.A11 * tEb.value +
         S.A11b * E;
}

/// Mixed contact/CR second variation.
[[nodiscard]] inline IntegralValue<Scalar> hess_mixed(const PhStructure<Scalar>& S0,
                                                      const SpherePoly<Scalar>& h,
                                                      const SpherePoly<Scalar>& E) {
  if (!h.is_real()) throw std::domain_error("contact perturbation must be real");
  PhStructure<Scalar> S = hessian_base(S0);
  using Poly = SpherePoly<Scalar>;
  Scalar i = Scalar::i();

  TensorComponent<Scalar> th{h, 0, 0};
  Poly lap = sublaplacian(S, th).value;
  Poly h0 = covd(S, th, dir::reeb).value;
  Poly lap_bb = covd_path(S, {lap, 0, 0}, {dir::anti, dir::anti}).value;
  Poly h_bb0 = covd_path(S, th, {dir::anti, dir::anti, dir::reeb}).value;

  Poly density = (Scalar(6) * lap - (Scalar(2) * i) * h0) * S.A11b -
                 (Scalar(8) * i) * lap_bb + Scalar(2) * h_bb0;
  IntegralValue<Scalar> half = integrate_density(S, density * E);
  return half + half.conj();
}

// ---- reference eigenvalues and the spectrum scan ---------------------------

/// Reference diagonal polynomial for contact directions on the round sphere,
/// in the mode bookkeeping of ModeSpec.
[[nodiscard]] inline Rational closed_form_theta(int p, int q) {
  Rational L = Rational(p * q) + frac(p + q, 2);
  Rational m(p - q);
  return 15 * L * L - 3 * m * m - 12 * L;
}

/// Reference diagonal value for CR directions: -m(m+4)/2.
[[nodiscard]] inline Rational closed_form_J(int p, int q) {
  Rational m(p - q);
  return -m * (m + 4) / 2;
}

enum class Direction { contact, cr };

struct SpectrumEntry {
  int p = 0, q = 0;
  Direction direction = Direction::contact;
  Rational closed_form;
  int sign = 0;                  // sign of the reference value
  IntegralValue<Scalar> quad;    // measured quadratic form on the mode
  bool jet_match = false;        // quad == 2 * (second eps-derivative of the energy)
};

namespace detail {
[[nodiscard]] inline IntegralValue<Scalar> scale_jet_slot(const IntegralValue<Jet2<Scalar>>& v,
                                                          int d1, int d2, long factor) {
  Scalar c = Scalar(factor) * v.coeff.coefficient(d1, d2);
  if (c.is_zero()) return {Scalar(0), 0};
  return {c, v.pi2_power};
}
}  // namespace detail

[[nodiscard]] inline SpectrumEntry spectrum_entry(const PhStructure<Scalar>& S, int p, int q,
                                                  Direction direction) {
  SpectrumEntry e;
  e.p = p;
  e.q = q;
  e.direction = direction;
  if (direction == Direction::contact) {
    e.closed_form = closed_form_theta(p, q);
    SpherePoly<Scalar> h = rep(p, q) + rep(p, q).conj();
    e.quad = hess_theta(S, h);
    auto jet = jet_energy(S, &h, nullptr);
    e.jet_match = e.quad == detail::scale_jet_slot(jet, 2, 0, 2);
  } else {
    e.closed_form = closed_form_J(p, q);
    SpherePoly<Scalar> E = rep(p, q);
    e.quad = hess_J_raw(S, E);
    auto jet = jet_energy(S, nullptr, &E);
    e.jet_match = e.quad == detail::scale_jet_slot(jet, 0, 2, 2);
  }
  e.sign = sign_of(e.closed_form);
  return e;
}

/// All spectrum rows with p + q <= kmax, ordered by (p + q, p), the contact
/// row before the CR row of the same mode.  Rows are computed in parallel
/// when threads > 1 but assembled by index, so the output is deterministic.
[[nodiscard]] inline std::vector<SpectrumEntry> spectrum_scan(const PhStructure<Scalar>& S,
                                                              int kmax, int threads) {
  std::vector<std::pair<int, int>> modes;
  for (int k = 0; k <= kmax; ++k)
    for (int p = 0; p <= k; ++p) modes.emplace_back(p, k - p);

  std::vector<SpectrumEntry> rows(2 * modes.size());
  auto compute = [&](std::size_t begin, std::size_t step) {
    for (std::size_t m = begin; m < modes.size(); m += step) {
      auto [p, q] = modes[m];
      rows[2 * m] = spectrum_entry(S, p, q, Direction::contact);
      rows[2 * m + 1] = spectrum_entry(S, p, q, Direction::cr);
    }
  };
  if (threads <= 1) {
    compute(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(compute, static_cast<std::size_t>(t),
                        static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace websterlab
