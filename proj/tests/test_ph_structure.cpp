#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "websterlab/harmonics.hpp"
#include "websterlab/ph_structure.hpp"

using namespace websterlab;

using Poly = SpherePoly<Scalar>;
using Form = OneForm<Scalar>;
using J = Jet2<Scalar>;
using JPoly = SpherePoly<J>;

namespace {

Poly pc(const Scalar& c) { return Poly::constant(c); }
Poly pc(long n, long d = 1) { return Poly::constant(Scalar(frac(n, d))); }

// coefficient of eps1^d1 eps2^d2 in a jet-valued polynomial, as a scalar polynomial
Poly jet_part(const JPoly& f, int d1, int d2) {
  Poly out;
  for (const auto& [key, coeff] : f.terms()) {
    Poly term = Scalar(coeff.coefficient(d1, d2)) *
                Poly::monomial(key.a1, key.a2, key.b1, key.b2);
    out = out + term;
  }
  return out;
}

OneForm<Scalar> jet_part(const OneForm<J>& w, int d1, int d2) {
  return {jet_part(w.c_theta, d1, d2), jet_part(w.c_1, d1, d2), jet_part(w.c_1b, d1, d2)};
}

Poly sphere_laplacian_scalar(const PhStructure<Scalar>& S, const Poly& f) {
  return sublaplacian(S, {f, 0, 0}).value;
}

}  // namespace

TEST_CASE("round sphere solves to the unit model") {
  auto S = standard_structure<Scalar>();
  CHECK(S.h11 == Poly::one());
  CHECK(S.h11_inv == Poly::one());
  CHECK(S.omega == Form{pc(-Scalar::i()), Poly{}, Poly{}});
  CHECK(S.A11.is_zero());
  CHECK(S.A11b.is_zero());
  CHECK(S.Rcurv == Poly::one());
  CHECK(S.resid_t1.is_zero());
  CHECK(S.resid_t1b.is_zero());
  // dual frame is the background frame
  CHECK(S.frame_vec(dir::reeb) == std::array<Poly, 3>{Poly::one(), Poly{}, Poly{}});
  CHECK(S.frame_vec(dir::hol) == std::array<Poly, 3>{Poly{}, Poly::one(), Poly{}});
}

TEST_CASE("deformed-family structures match the closed-form invariants") {
  struct Row {
    Rational s;
    Rational h, R;        // Levi coefficient, curvature
    Rational torsion_im;  // A^1_{1b} = i * torsion_im (index raised)
  };
  // frozen values: h = 1/(1+s^2), R = 1+2s^2, A^1_{1b} = 2 i s sqrt(1+s^2)
  const Row rows[] = {
      {Rational(0), Rational(1), Rational(1), Rational(0)},
      {frac(3, 4), frac(16, 25), frac(17, 8), frac(15, 8)},
      {frac(5, 12), frac(144, 169), frac(97, 72), frac(65, 72)},
  };
  for (const auto& row : rows) {
    CAPTURE(row.s.get_str());
    auto S = rossi_structure(row.s);
    CHECK(S.h11 == pc(Scalar(row.h)));
    CHECK(S.Rcurv == pc(Scalar(row.R)));
    CHECK(S.omega ==
          Form{pc(-Scalar::i() * Scalar(1 + 2 * row.s * row.s)), Poly{}, Poly{}});
    // stored torsion has both indices down; raise one with h^{-1}
    Poly raised = S.A11b * S.h11_inv;
    CHECK(raised == pc(Scalar::i() * Scalar(row.torsion_im)));
    CHECK(S.A11 == S.A11b.conj());
    CHECK(S.resid_t1.is_zero());
    CHECK(S.resid_t1b.is_zero());
    // R^2 - |A|^2 == 1 across the family
    Poly asq = S.A11 * S.A11b * S.h11_inv * S.h11_inv;
    CHECK(S.Rcurv * S.Rcurv - asq == Poly::one());
  }
}

TEST_CASE("constant rescaling of the coframe") {
  // (2 theta, sqrt2 theta1): Levi coefficient renormalises to 1, R halves
  Form theta = pc(2) * background_theta<Scalar>();
  Form theta1 = pc(Scalar::sqrt2()) * background_theta1<Scalar>();
  auto S = solve_structure(theta, theta1);
  CHECK(S.h11 == Poly::one());
  CHECK(S.Rcurv == pc(1, 2));
  CHECK(S.A11.is_zero());
  CHECK(S.omega == Form{pc(-Scalar::i()), Poly{}, Poly{}});  // background components
}

TEST_CASE("unitarize rescales the Levi coefficient away") {
  auto S = rossi_structure(frac(3, 4));
  auto U = unitarize(S);
  CHECK(U.h11 == Poly::one());
  CHECK(U.Rcurv == pc(17, 8));
  CHECK(U.A11b == pc(Scalar::i() * Scalar(frac(15, 8))));
  CHECK(U.A11 == pc(-Scalar::i() * Scalar(frac(15, 8))));
  Poly asq = U.A11 * U.A11b;
  CHECK(U.Rcurv * U.Rcurv - asq == Poly::one());
  // idempotent
  auto U2 = unitarize(U);
  CHECK(U2.Rcurv == U.Rcurv);
  CHECK(U2.A11 == U.A11);
}

TEST_CASE("solve is idempotent on its own output") {
  auto S = rossi_structure(frac(3, 4));
  auto S2 = solve_structure(S.theta, S.theta1);
  CHECK(S2.h11 == S.h11);
  CHECK(S2.omega == S.omega);
  CHECK(S2.A11 == S.A11);
  CHECK(S2.Rcurv == S.Rcurv);
}

TEST_CASE("structure equations reconstruct the coframe differentials") {
  for (const Rational& s : {Rational(0), frac(3, 4)}) {
    auto S = rossi_structure(s);
    // d theta = i h11 theta1 ^ theta1b
    TwoForm<Scalar> lhs = d(S.theta);
    TwoForm<Scalar> rhs = wedge((Scalar::i() * S.h11) * S.theta1, S.theta1b);
    CHECK(lhs == rhs);
    // d theta1 = theta1 ^ omega + A^1_{1b} theta ^ theta1b
    TwoForm<Scalar> lhs1 = d(S.theta1);
    Poly raised = S.A11b * S.h11_inv;
    TwoForm<Scalar> rhs1 = wedge(S.theta1, S.omega) + wedge(raised * S.theta, S.theta1b);
    CHECK(lhs1 == rhs1);
  }
}

TEST_CASE("rejections: degenerate and non-adapted coframes") {
  Form theta = background_theta<Scalar>();
  Form theta1 = background_theta1<Scalar>();

  // theta1 proportional to its own conjugate: frame matrix is singular
  CHECK_THROWS_WITH_AS(solve_structure(theta, theta1 + theta1.conj()),
                       "not strictly pseudoconvex", std::domain_error);

  // non-real contact form
  CHECK_THROWS_WITH_AS(solve_structure(theta + theta1, theta1), "coframe not adapted",
                       std::domain_error);

  // theta1 fails to annihilate the Reeb field
  CHECK_THROWS_WITH_AS(solve_structure(theta, theta1 + theta), "coframe not adapted",
                       std::domain_error);

  // reversed orientation: Levi coefficient comes out negative
  CHECK_THROWS_WITH_AS(solve_structure(-theta, theta1), "not strictly pseudoconvex",
                       std::domain_error);
}

TEST_CASE("exact field limits") {
  // sqrt(1+s^2) irrational: outside the exact coefficient field
  CHECK_THROWS_WITH_AS(rossi_structure(frac(1, 3)), "irrational Levi normalization",
                       std::domain_error);
  // Levi coefficient sqrt2 has no exact square root of the supported shape
  Form theta = pc(Scalar::sqrt2()) * background_theta<Scalar>();
  auto S = solve_structure(theta, background_theta1<Scalar>());
  CHECK(S.h11 == pc(Scalar::sqrt2()));
  CHECK_THROWS_WITH_AS(unitarize(S), "irrational Levi normalization", std::domain_error);
}

TEST_CASE("floating solve agrees with exact values off the exact grid") {
  auto S = rossi_structure_float(1.0 / 3.0);
  double expect_R = 1.0 + 2.0 / 9.0;
  CHECK(S.Rcurv.constant_part() == DblScalar(expect_R));
  CHECK(S.h11.constant_part() == DblScalar(9.0 / 10.0));
  auto asq = S.A11 * S.A11b * S.h11_inv * S.h11_inv;
  CHECK(S.Rcurv * S.Rcurv - asq == SpherePoly<DblScalar>::one());
}

TEST_CASE("covariant derivative basics") {
  auto S = standard_structure<Scalar>();

  // constants are parallel in the frame directions
  TensorComponent<Scalar> c{pc(5), 0, 0};
  for (int direction : {dir::reeb, dir::hol, dir::anti})
    CHECK(covd(S, c, direction).value.is_zero());

  // scalar derivatives reduce to the frame fields
  Poly f = testing::random_poly();
  CHECK(covd(S, {f, 0, 0}, dir::hol).value == d1(f));
  CHECK(covd(S, {f, 0, 0}, dir::anti).value == d1bar(f));
  CHECK(covd(S, {f, 0, 0}, dir::reeb).value == reeb(f));

  // weight bookkeeping
  auto t = covd(S, {f, 1, 0}, dir::anti);
  CHECK(t.k == 1);
  CHECK(t.l == 1);

  // transverse derivative of a weight-(2,0) mode: E_{,0} = i (m/2 + 2) E here
  for (auto [p, q] : {std::pair{2, 0}, {3, 1}, {2, 2}}) {
    Poly E = rep(p, q);
    int m = p - q;
    TensorComponent<Scalar> tE{E, 2, 0};
    Scalar expect = Scalar::i() * (Scalar(frac(m, 2)) + Scalar(2));
    CHECK(covd(S, tE, dir::reeb).value == expect * E);
  }
}

TEST_CASE("sublaplacian eigenvalues on spherical harmonics") {
  auto S = standard_structure<Scalar>();
  for (auto [p, q] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 1}}) {
    Scalar lambda = Scalar(frac(p * q, 1)) + Scalar(frac(p + q, 2));
    for (const Poly& f : harmonic_basis(p, q)) {
      CHECK(sphere_laplacian_scalar(S, f) == (-lambda) * f);
    }
  }
}

TEST_CASE("torsion transport on the deformed family") {
  // constant-invariant structures: A_{11,1} = 0, A_{11,0} = 2 i R A_{11}
  auto S = unitarize(rossi_structure(frac(3, 4)));
  TensorComponent<Scalar> A{S.A11, 2, 0};
  CHECK(covd(S, A, dir::hol).value.is_zero());
  CHECK(covd(S, A, dir::anti).value.is_zero());
  Poly expect = Scalar(2) * Scalar::i() * (S.Rcurv * S.A11);
  CHECK(covd(S, A, dir::reeb).value == expect);
}

TEST_CASE("trivial deformation reproduces the base structure in every slot") {
  auto base = standard_structure<Scalar>();
  auto job = deform_structure(base, nullptr, nullptr);
  CHECK(jet_part(job.Rcurv, 0, 0) == base.Rcurv);
  CHECK(jet_part(job.h11, 0, 0) == base.h11);
  CHECK(jet_part(job.A11, 0, 0) == base.A11);
  for (int d1 : {0, 1, 2}) {
    for (int d2 : {0, 1, 2}) {
      if (d1 + d2 == 0 || d1 + d2 > 2) continue;
      CAPTURE(d1);
      CAPTURE(d2);
      CHECK(jet_part(job.Rcurv, d1, d2).is_zero());
      CHECK(jet_part(job.h11, d1, d2).is_zero());
      CHECK(jet_part(job.A11, d1, d2).is_zero());
      CHECK(jet_part(job.omega, d1, d2) == OneForm<Scalar>{});
    }
  }
}

TEST_CASE("constant contact rescaling through the jet machinery") {
  // theta -> (1 + 2 eps c + 2 eps^2 c^2) theta is a constant rescale, so
  // R(eps) = (1 + 2 eps c + 2 eps^2 c^2)^{-1} = 1 - 2 c eps + 2 c^2 eps^2
  auto base = standard_structure<Scalar>();
  Scalar c = Scalar(frac(3, 2));
  auto job = deform_contact(base, pc(c));
  CHECK(jet_part(job.Rcurv, 0, 0) == Poly::one());
  CHECK(jet_part(job.Rcurv, 1, 0) == pc(Scalar(-2) * c));
  CHECK(jet_part(job.Rcurv, 2, 0) == pc(Scalar(2) * c * c));
  CHECK(jet_part(job.A11, 1, 0).is_zero());
  // the Levi coefficient carries the rescaling in this gauge
  CHECK(jet_part(job.h11, 1, 0) == pc(Scalar(2) * c));
}

TEST_CASE("contact perturbation must be real") {
  auto base = standard_structure<Scalar>();
  Poly h = rep(2, 0);  // not real
  CHECK_THROWS_WITH_AS(deform_contact(base, h), "contact perturbation must be real",
                       std::domain_error);
}

TEST_CASE("linearised connection under a contact perturbation") {
  // In this solver's gauge theta1 is kept unscaled and the Levi coefficient
  // carries the conformal weight, so the eps-linear connection change is
  //   (i Lap_b h + h_{,0}) theta + 4 h_{,1} theta1 - 2 h_{,1b} theta1b.
  // Dividing the weight back out (omega - d log sqrt(h11)) recovers the
  // classical unit-gauge variation i (Lap_b h) theta + 3 h_{,1} theta1
  // - 3 h_{,1b} theta1b.
  auto base = standard_structure<Scalar>();
  for (const Poly& h : {rep(1, 1) + rep(1, 1).conj(), rep(2, 2) + rep(2, 2).conj(),
                        rep(2, 1) + rep(2, 1).conj()}) {
    CAPTURE(h.to_string());
    auto job = deform_contact(base, h);
    Poly lap = sphere_laplacian_scalar(base, h);

    OneForm<Scalar> dw = jet_part(job.omega, 1, 0);
    OneForm<Scalar> expect{Scalar::i() * lap + reeb(h), Scalar(4) * d1(h),
                           Scalar(-2) * d1bar(h)};
    CHECK(dw == expect);

    JPoly half_dlog = JPoly::constant(J::promote(Scalar(frac(1, 2)))) * job.h11_inv;
    OneForm<J> unit_gauge = job.omega - half_dlog * d_scalar(job.h11);
    OneForm<Scalar> du = jet_part(unit_gauge, 1, 0);
    OneForm<Scalar> unit_expect{Scalar::i() * lap, Scalar(3) * d1(h), Scalar(-3) * d1bar(h)};
    CHECK(du == unit_expect);
  }
}

TEST_CASE("CR deformation by a constant matches the deformed family") {
  // E11 = i integrates (to second order) along the family with parameter s:
  // h = 1 - s^2, R = 1 + 2 s^2, A11 = -2 i s + O(s^3)
  auto base = standard_structure<Scalar>();
  auto job = deform_cr(base, pc(Scalar::i()));
  CHECK(jet_part(job.h11, 0, 0) == Poly::one());
  CHECK(jet_part(job.h11, 0, 1).is_zero());
  CHECK(jet_part(job.h11, 0, 2) == pc(-1));
  CHECK(jet_part(job.Rcurv, 0, 0) == Poly::one());
  CHECK(jet_part(job.Rcurv, 0, 1).is_zero());
  CHECK(jet_part(job.Rcurv, 0, 2) == pc(2));
  CHECK(jet_part(job.A11, 0, 0).is_zero());
  CHECK(jet_part(job.A11, 0, 1) == pc(Scalar(-2) * Scalar::i()));
  CHECK(jet_part(job.A11, 0, 2).is_zero());
}

TEST_CASE("linearised torsion under a CR deformation") {
  // hand expansion of the structure equations: delta A11 = i T(E) - 2 E
  // = i E_{11,0} on the round sphere, i.e. -(m/2 + 2) E on a weight-m mode
  auto base = standard_structure<Scalar>();
  for (auto [p, q] : {std::pair{2, 0}, {0, 2}, {3, 1}}) {
    Poly E = rep(p, q);
    CAPTURE(p);
    CAPTURE(q);
    auto job = deform_cr(base, E);
    Poly dA = jet_part(job.A11, 0, 1);
    CHECK(dA == Scalar::i() * reeb(E) - Scalar(2) * E);
    CHECK(dA == Scalar::i() * covd(base, {E, 2, 0}, dir::reeb).value);
    int m = p - q;
    CHECK(dA == -Scalar(frac(m, 2) + 2) * E);
  }
}

TEST_CASE("deformation of a non-unit base re-normalises first") {
  auto base = rossi_structure(frac(3, 4));
  auto job = deform_structure(base, nullptr, nullptr);
  CHECK(jet_part(job.h11, 0, 0) == Poly::one());
  CHECK(jet_part(job.Rcurv, 0, 0) == pc(17, 8));
  CHECK(jet_part(job.A11, 0, 0) == pc(-Scalar::i() * Scalar(frac(15, 8))));
}

TEST_CASE("combined contact and CR deformation carries both parameters") {
  auto base = standard_structure<Scalar>();
  Poly h = rep(1, 1) + rep(1, 1).conj();
  Poly E = rep(2, 0);
  auto job = deform_structure(base, &h, &E);
  // pure slots match the single-parameter runs
  auto contact_only = deform_contact(base, h);
  auto cr_only = deform_cr(base, E);
  CHECK(jet_part(job.Rcurv, 1, 0) == jet_part(contact_only.Rcurv, 1, 0));
  CHECK(jet_part(job.Rcurv, 2, 0) == jet_part(contact_only.Rcurv, 2, 0));
  CHECK(jet_part(job.A11, 0, 1) == jet_part(cr_only.A11, 0, 1));
  CHECK(jet_part(job.Rcurv, 0, 2) == jet_part(cr_only.Rcurv, 0, 2));
}
