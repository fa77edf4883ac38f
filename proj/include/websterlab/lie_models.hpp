#pragma once

// Homogeneous models with constant invariants.
//
// Each model is a name plus exact constants: Levi coefficient, Webster
// curvature, torsion.  On such a structure the connection form is
// proportional to theta, so the covariant derivative of a constant tensor of
// weight (k, l) reduces to the Reeb rule  nabla_0 t = i (k - l) R t  and the
// horizontal derivatives vanish.  model_checks replays the transport and
// criticality identities in that small calculus rather than trusting the
// catalog numbers.

#include <stdexcept>
#include <string>
#include <vector>

#include "websterlab/scalar.hpp"

namespace websterlab {

struct HomogeneousModel {
  std::string name;
  std::vector<Rational> params;
  Scalar R;
  Scalar A11;
  Rational h11bar = 1;

  /// theta-component of the connection form, omega = -i R theta.
  [[nodiscard]] Scalar omega_T() const { return -(Scalar::i() * R); }
};

[[nodiscard]] inline HomogeneousModel standard_model() {
  return {"standard", {}, Scalar(1), Scalar(0)};
}

[[nodiscard]] inline HomogeneousModel e2_model() {
  return {"e2", {}, Scalar(frac(1, 2)), Scalar(frac(1, 2)) * Scalar::i()};
}

[[nodiscard]] inline HomogeneousModel sl2r_model(const Rational& t) {
  if (t == 0 || t == -1) throw std::domain_error("parameter excluded");
  Rational denom = 4 * abs(t) * (1 + t);
  Rational R = -(1 + 6 * t + t * t) / denom;
  Rational a = (1 - t) * (1 - t) / denom;
  return {"sl2r", {t}, Scalar(R), Scalar(a) * Scalar::i()};
}

/// Constants of the s-family member renormalised to Levi coefficient one.
[[nodiscard]] inline HomogeneousModel rossi_model(const Rational& s) {
  auto root = Scalar::sqrt_of_rational(1 + s * s);
  if (!root) throw std::domain_error("irrational Levi normalization");
  Scalar A = Scalar(-2 * s) * Scalar::i() * *root;
  return {"rossi", {s}, Scalar(1 + 2 * s * s), A};
}

[[nodiscard]] inline std::vector<HomogeneousModel> catalog() {
  return {standard_model(),       rossi_model(frac(3, 4)), e2_model(),
          sl2r_model(frac(1, 4)), sl2r_model(1),           sl2r_model(4)};
}

struct ModelChecks {
  bool torsion_parallel = false;   // A_{11,1} = A_{11,1bar} = 0
  bool reeb_transport = false;     // A_{11,0} = 2 i R A_11
  bool connection_forced = false;  // i A_{11,0} + 2 R A_11 = 0, pinning omega(T) = -iR
  bool euler_lagrange = false;     // both EL residuals vanish
  bool divergence_free = false;    // R_{,1} - i A_{11,1bar} = 0
  Scalar density;                  // R^2 - |A|^2

  [[nodiscard]] bool all() const {
    return torsion_parallel && reeb_transport && connection_forced && euler_lagrange &&
           divergence_free;
  }
};

[[nodiscard]] inline ModelChecks model_checks(const HomogeneousModel& m) {
  Scalar i = Scalar::i();
  Scalar R = m.R, A = m.A11;
  Rational h_inv = 1 / m.h11bar;

  // constant-field calculus on a homogeneous structure
  auto hol = [](const Scalar&) { return Scalar(0); };
  auto anti = [](const Scalar&) { return Scalar(0); };
  auto reeb = [&](const Scalar& c, int k, int l) { return i * Scalar(k - l) * R * c; };

  ModelChecks out;
  out.torsion_parallel = hol(A).is_zero() && anti(A).is_zero();
  out.reeb_transport = reeb(A, 2, 0) == Scalar(2) * i * R * A;
  out.connection_forced = (i * reeb(A, 2, 0) + Scalar(2) * R * A).is_zero();

  // EL residuals: every horizontal derivative of a constant vanishes, and the
  // commutator terms cancel pairwise
  Scalar el_J = hol(hol(R)) - (i * Scalar(frac(1, 2))) * (anti(hol(A)) - hol(anti(A)));
  Scalar el_theta = Scalar(-4) * Scalar(h_inv) * (anti(hol(R)) + hol(anti(R))) -
                    i * Scalar(h_inv * h_inv) * (hol(hol(A.conj())) - anti(anti(A)));
  out.euler_lagrange = el_J.is_zero() && el_theta.is_zero();
  out.divergence_free = (hol(R) - i * Scalar(h_inv) * anti(A)).is_zero();

  out.density = R * R - Scalar(h_inv * h_inv) * A * A.conj();
  return out;
}

/// Parameter map from the s-family onto the one-parameter catalog branch:
/// t = (sqrt(1 + s^2) - s)^2, exact whenever sqrt(1 + s^2) lives in Q(sqrt2).
[[nodiscard]] inline Scalar rossi_to_bj_param(const Rational& s) {
  auto root = Scalar::sqrt_of_rational(1 + s * s);
  if (!root) throw std::domain_error("irrational Levi normalization");
  Scalar u = *root - Scalar(s);
  return u * u;
}

}  // namespace websterlab
