#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "websterlab/one_form.hpp"

#include "test_support.hpp"

using namespace websterlab;
using testing::random_poly;

using Poly = SpherePoly<Scalar>;
using Form = OneForm<Scalar>;

namespace {
Form random_form() { return {random_poly(3), random_poly(3), random_poly(3)}; }
}  // namespace

TEST_CASE("structure constants of the background coframe") {
  Form theta = background_theta<Scalar>();
  Form theta1 = background_theta1<Scalar>();
  Form theta1b = theta1.conj();
  Scalar i = Scalar::i();

  TwoForm<Scalar> dtheta = d(theta);
  CHECK(dtheta.c_t1.is_zero());
  CHECK(dtheta.c_t1b.is_zero());
  CHECK(dtheta.c_11b == Poly::constant(i));

  TwoForm<Scalar> dtheta1 = d(theta1);
  CHECK(dtheta1.c_t1 == Poly::constant(i));
  CHECK(dtheta1.c_t1b.is_zero());
  CHECK(dtheta1.c_11b.is_zero());

  TwoForm<Scalar> dtheta1b = d(theta1b);
  CHECK(dtheta1b.c_t1.is_zero());
  CHECK(dtheta1b.c_t1b == Poly::constant(-i));
  CHECK(dtheta1b.c_11b.is_zero());

  CHECK(theta.is_real());
  CHECK(wedge_top(theta, dtheta) == Poly::constant(i));
}

TEST_CASE("exterior derivative is a derivation") {
  for (int trial = 0; trial < 6; ++trial) {
    Poly f = random_poly(3);
    Form w = random_form();
    TwoForm<Scalar> lhs = d(f * w);
    TwoForm<Scalar> rhs = wedge(d_scalar(f), w) + d(w);
    // d(f w) = df ^ w + f dw, with f multiplying componentwise
    rhs.c_t1 = wedge(d_scalar(f), w).c_t1 + f * d(w).c_t1;
    rhs.c_t1b = wedge(d_scalar(f), w).c_t1b + f * d(w).c_t1b;
    rhs.c_11b = wedge(d_scalar(f), w).c_11b + f * d(w).c_11b;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("d squared vanishes") {
  for (int trial = 0; trial < 6; ++trial) {
    Poly f = random_poly(3);
    CHECK(d(d_scalar(f)).is_zero());
    CHECK(d_top(d(random_form())).is_zero());
  }
}

TEST_CASE("wedge algebra") {
  Form x = random_form(), y = random_form();
  TwoForm<Scalar> s = wedge(x, y) + wedge(y, x);
  CHECK(s.is_zero());
  CHECK(wedge(x, x).is_zero());
}

TEST_CASE("frame pairing") {
  Form theta = background_theta<Scalar>();
  std::array<Poly, 3> T{Poly::one(), Poly(), Poly()};
  std::array<Poly, 3> e1{Poly(), Poly::one(), Poly()};
  std::array<Poly, 3> e1b{Poly(), Poly(), Poly::one()};
  CHECK(theta.pair(T) == Poly::one());
  CHECK(theta.pair(e1).is_zero());

  TwoForm<Scalar> dtheta = d(theta);
  CHECK(dtheta.pair(T, e1).is_zero());
  CHECK(dtheta.pair(e1, e1b) == Poly::constant(Scalar::i()));
  CHECK(dtheta.pair(e1b, e1) == Poly::constant(-Scalar::i()));
}

TEST_CASE("conjugation of forms") {
  Form w = random_form();
  Form rw = w + w.conj();
  CHECK(rw.is_real());
  CHECK(w.conj().conj() == w);
}
