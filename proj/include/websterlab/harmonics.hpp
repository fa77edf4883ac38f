#pragma once

// Bigraded spherical harmonics on S^3.
//
// H(p, q) is the space of restrictions to the sphere of harmonic ambient
// polynomials of bidegree (p, q) in (z, zbar); it has dimension p + q + 1 and
// carries the torus action with isotypic weight (a1 - b1, a2 - b2) on each
// monomial.  The kernel of the ambient Laplacian splits along those weights
// into one-dimensional pieces, each solved exactly by a two-term recurrence,
// which yields a canonical integer-coefficient basis.  The canonical
// representative of the mode is rep(p, q) = z1^p zb2^q.

#include <vector>

#include "websterlab/scalar.hpp"
#include "websterlab/sphere_poly.hpp"

namespace websterlab {

struct ModeSpec {
  int p = 0, q = 0;

  [[nodiscard]] int m() const { return p - q; }
  /// Reference eigenvalue parameter attached to the mode, lambda = (pq + (p+q)/2)/2.
  [[nodiscard]] Rational lambda() const {
    return frac(p * q, 2) + frac(p + q, 4);
  }
  [[nodiscard]] int dimension() const { return p + q + 1; }
};

/// z1^p zb2^q, the canonical highest-weight representative of H(p, q).
[[nodiscard]] inline SpherePoly<Scalar> rep(int p, int q) {
  return SpherePoly<Scalar>::monomial(p, 0, 0, q);
}

/// Exact basis of H(p, q), one vector per torus weight, primitive integer
/// coefficients, ordered by decreasing weight w1 = a1 - b1 (so rep(p, q)
/// comes first).
[[nodiscard]] inline std::vector<SpherePoly<Scalar>> harmonic_basis(int p, int q) {
  std::vector<SpherePoly<Scalar>> basis;
  for (int w1 = p; w1 >= -q; --w1) {
    // chain of monomials z1^k z2^(p-k) zb1^(k-w1) zb2^(q-k+w1) with fixed
    // torus weight; the ambient Laplacian is bidiagonal along the chain
    int k_min = std::max(0, w1), k_max = std::min(p, q + w1);
    std::vector<Rational> c(static_cast<size_t>(k_max - k_min + 1));
    c[0] = 1;
    for (int k = k_min; k < k_max; ++k) {
      // kernel recurrence: c_{k+1} (k+1)(k+1-w1) + c_k (p-k)(q-k+w1) = 0
      Rational num(-(p - k) * (q - k + w1));
      Rational den((k + 1) * (k + 1 - w1));
      c[static_cast<size_t>(k - k_min + 1)] = c[static_cast<size_t>(k - k_min)] * num / den;
    }
    // clear denominators to primitive integer coefficients
    mpz_class lcm = 1;
    for (const Rational& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    SpherePoly<Scalar> f;
    for (int k = k_min; k <= k_max; ++k) {
      Rational coeff = c[static_cast<size_t>(k - k_min)] * lcm;
      f = f + SpherePoly<Scalar>::monomial(k, p - k, k - w1, q - k + w1, Scalar(coeff));
    }
    basis.push_back(f);
  }
  return basis;
}

}  // namespace websterlab
