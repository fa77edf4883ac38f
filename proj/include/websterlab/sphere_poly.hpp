#pragma once

// Polynomial functions on the unit sphere S^3 in C^2.
//
// A function is a finite sum of monomials z1^a1 z2^a2 zb1^b1 zb2^b2 (zbk is
// the conjugate coordinate).  On the sphere z1 zb1 + z2 zb2 = 1, so the
// monomial basis is made canonical by eliminating every z2 zb2 pair:
// normal form means min(a2, b2) = 0.  All operations return normal forms,
// which makes equality of functions a plain map comparison.
//
// The tangential frame operators implemented here are the coordinate fields
//   T  = (i/2)(z1 d1 + z2 d2) - (i/2)(zb1 db1 + zb2 db2)   (Reeb direction)
//   Z1 = zb2 d1 - zb1 d2                                   (holomorphic frame)
// together with the unit-normalised d1 = Z1/sqrt(2) used by the geometry.
// Exact integration over the sphere closes the algebra: monomial moments are
// rational multiples of pi^2.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "websterlab/ring.hpp"

namespace websterlab {

struct MonomialKey {
  int a1 = 0, a2 = 0, b1 = 0, b2 = 0;  // exponents of z1, z2, zb1, zb2
  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

enum class Measure { euclidean, contact };  // contact = 8 * euclidean volume

/// Exact integral: coeff * (pi^2)^pi2_power.
template <class K>
struct IntegralValue {
  K coeff{};
  int pi2_power = 0;

  [[nodiscard]] bool is_zero() const { return RingTraits<K>::is_zero(coeff); }
  [[nodiscard]] IntegralValue conj() const { return {RingTraits<K>::conj(coeff), pi2_power}; }

  friend IntegralValue operator+(const IntegralValue& x, const IntegralValue& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.pi2_power != y.pi2_power)
      throw std::logic_error("adding integrals of different pi^2 powers");
    IntegralValue r{x.coeff + y.coeff, x.pi2_power};
    if (r.is_zero()) r.pi2_power = 0;
    return r;
  }
  friend IntegralValue operator-(const IntegralValue& x, const IntegralValue& y) {
    return x + IntegralValue{-y.coeff, y.pi2_power};
  }
  friend IntegralValue operator*(const K& s, const IntegralValue& y) {
    IntegralValue r{s * y.coeff, y.pi2_power};
    if (r.is_zero()) r.pi2_power = 0;
    return r;
  }
  friend bool operator==(const IntegralValue& x, const IntegralValue& y) {
    return (x - y).is_zero();
  }
  [[nodiscard]] std::complex<double> value() const {
    std::complex<double> v = RingTraits<K>::to_complex(coeff);
    const double pi2 = 9.8696044010893586188;  // pi^2
    for (int k = 0; k < pi2_power; ++k) v *= pi2;
    return v;
  }
};

template <class K>
class SpherePoly {
 public:
  SpherePoly() = default;

  [[nodiscard]] static SpherePoly constant(K c) {
    SpherePoly p;
    p.add_term({0, 0, 0, 0}, std::move(c));
    return p;
  }
  [[nodiscard]] static SpherePoly one() { return constant(RingTraits<K>::one()); }
  [[nodiscard]] static SpherePoly monomial(int a1, int a2, int b1, int b2,
                                           K c = RingTraits<K>::one()) {
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0) throw std::domain_error("negative exponent");
    SpherePoly p;
    p.add_term({a1, a2, b1, b2}, std::move(c));
    return p;
  }

  [[nodiscard]] const std::map<MonomialKey, K>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] K coefficient(const MonomialKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RingTraits<K>::zero() : it->second;
  }
  /// Constant term (coefficient of the empty monomial).
  [[nodiscard]] K constant_part() const { return coefficient({0, 0, 0, 0}); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == MonomialKey{});
  }

  friend SpherePoly operator+(const SpherePoly& x, const SpherePoly& y) {
    SpherePoly r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k, c);
    return r;
  }
  friend SpherePoly operator-(const SpherePoly& x, const SpherePoly& y) {
    SpherePoly r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k, -c);
    return r;
  }
  friend SpherePoly operator-(const SpherePoly& x) {
    SpherePoly r;
    for (const auto& [k, c] : x.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend SpherePoly operator*(const SpherePoly& x, const SpherePoly& y) {
    SpherePoly r;
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_)
        r.add_term({kx.a1 + ky.a1, kx.a2 + ky.a2, kx.b1 + ky.b1, kx.b2 + ky.b2}, cx * cy);
    return r;
  }
  friend SpherePoly operator*(const K& s, const SpherePoly& y) {
    SpherePoly r;
    if (RingTraits<K>::is_zero(s)) return r;
    for (const auto& [k, c] : y.terms_) r.add_term(k, s * c);
    return r;
  }
  friend bool operator==(const SpherePoly& x, const SpherePoly& y) { return (x - y).is_zero(); }

  [[nodiscard]] SpherePoly conj() const {
    SpherePoly r;
    for (const auto& [k, c] : terms_)
      r.terms_.emplace(MonomialKey{k.b1, k.b2, k.a1, k.a2}, RingTraits<K>::conj(c));
    return r;
  }
  [[nodiscard]] bool is_real() const { return *this == conj(); }

  /// Reciprocal when one exists in the polynomial ring: invertible constant
  /// plus a nilpotent (jet-positive) remainder.
  [[nodiscard]] SpherePoly inverse() const {
    K c0{};
    for (const auto& [k, c] : terms_) {
      auto [base, nil] = RingTraits<K>::nilpotent_split(c);
      if (k == MonomialKey{})
        c0 = c0 + base;
      else if (!RingTraits<K>::is_zero(base))
        throw std::domain_error("polynomial not invertible");
    }
    if (RingTraits<K>::is_zero(c0)) throw std::domain_error("polynomial not invertible");
    K u = RingTraits<K>::inverse(c0);
    SpherePoly q = u * (*this - constant(c0));  // nilpotent: q^3 = 0
    SpherePoly r = u * (one() - q + q * q);
    return r;
  }

  // ---- frame operators (background, coordinate) --------------------------

  /// Reeb rotation T: multiplies each monomial by (i/2)(a1+a2-b1-b2).
  [[nodiscard]] SpherePoly apply_T() const {
    SpherePoly r;
    K ihalf = RingTraits<K>::i() * RingTraits<K>::from_rational(Rational(1, 2));
    for (const auto& [k, c] : terms_) {
      long w = k.a1 + k.a2 - k.b1 - k.b2;
      if (w == 0) continue;
      r.add_term(k, ihalf * RingTraits<K>::from_rational(Rational(w)) * c);
    }
    return r;
  }

  /// Z1 = zb2 d/dz1 - zb1 d/dz2.
  [[nodiscard]] SpherePoly apply_Z1() const {
    SpherePoly r;
    for (const auto& [k, c] : terms_) {
      if (k.a1 > 0)
        r.add_term({k.a1 - 1, k.a2, k.b1, k.b2 + 1},
                   RingTraits<K>::from_rational(Rational(k.a1)) * c);
      if (k.a2 > 0)
        r.add_term({k.a1, k.a2 - 1, k.b1 + 1, k.b2},
                   RingTraits<K>::from_rational(Rational(-k.a2)) * c);
    }
    return r;
  }

  /// Z1bar = z2 d/dzb1 - z1 d/dzb2 (the conjugate field).
  [[nodiscard]] SpherePoly apply_Z1bar() const {
    SpherePoly r;
    for (const auto& [k, c] : terms_) {
      if (k.b1 > 0)
        r.add_term({k.a1, k.a2 + 1, k.b1 - 1, k.b2},
                   RingTraits<K>::from_rational(Rational(k.b1)) * c);
      if (k.b2 > 0)
        r.add_term({k.a1 + 1, k.a2, k.b1, k.b2 - 1},
                   RingTraits<K>::from_rational(Rational(-k.b2)) * c);
    }
    return r;
  }

  /// Numeric evaluation at a point (c1, c2) of C^2.
  [[nodiscard]] std::complex<double> eval(std::complex<double> c1,
                                          std::complex<double> c2) const {
    std::complex<double> total = 0.0;
    for (const auto& [k, c] : terms_) {
      std::complex<double> v = RingTraits<K>::to_complex(c);
      for (int j = 0; j < k.a1; ++j) v *= c1;
      for (int j = 0; j < k.a2; ++j) v *= c2;
      for (int j = 0; j < k.b1; ++j) v *= std::conj(c1);
      for (int j = 0; j < k.b2; ++j) v *= std::conj(c2);
      total += v;
    }
    return total;
  }

  /// Exact integral over S^3.  In normal form only the diagonal powers
  /// (z1 zb1)^k survive, each contributing 2 pi^2 / (k+1); the contact
  /// measure theta ^ dtheta is 8x the Euclidean volume.
  [[nodiscard]] IntegralValue<K> integrate(Measure measure) const {
    K total{};
    for (const auto& [k, c] : terms_) {
      if (k.a1 != k.b1 || k.a2 != k.b2) continue;
      // normal form: a2 == b2 forces a2 = b2 = 0
      total = total + RingTraits<K>::from_rational(frac(2, k.a1 + 1)) * c;
    }
    if (measure == Measure::contact) total = RingTraits<K>::from_rational(Rational(8)) * total;
    if (RingTraits<K>::is_zero(total)) return {RingTraits<K>::zero(), 0};
    return {total, 1};
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    auto append_pow = [&out](const char* sym, int e) {
      if (e == 0) return;
      out += " ";
      out += sym;
      if (e > 1) out += "^" + std::to_string(e);
    };
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + coeff_string(c) + ")";
      append_pow("z1", k.a1);
      append_pow("z2", k.a2);
      append_pow("zb1", k.b1);
      append_pow("zb2", k.b2);
    }
    return out;
  }

 private:
  static std::string coeff_string(const Scalar& c) { return c.to_string(); }
  template <class K2>
  static std::string coeff_string(const K2&) {
    return "...";
  }

  // Accumulate c on key k, rewriting z2 zb2 -> 1 - z1 zb1 until normal.
  void add_term(MonomialKey k, K c) {
    if (RingTraits<K>::is_zero(c)) return;
    if (k.a2 > 0 && k.b2 > 0) {
      MonomialKey drop{k.a1, k.a2 - 1, k.b1, k.b2 - 1};
      add_term(drop, c);
      add_term({drop.a1 + 1, drop.a2, drop.b1 + 1, drop.b2}, -c);
      return;
    }
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second = it->second + c;
      if (RingTraits<K>::is_zero(it->second)) terms_.erase(it);
    }
  }

  std::map<MonomialKey, K> terms_;
};

// ---- unit-normalised frame derivatives -----------------------------------
// d1 = Z1 / sqrt(2) and its conjugate; reeb is the T field itself.  These are
// the background orthonormal directions every covariant formula contracts
// against.

template <class K>
[[nodiscard]] SpherePoly<K> d1(const SpherePoly<K>& f) {
  K half_sqrt2 = RingTraits<K>::sqrt2() * RingTraits<K>::from_rational(Rational(1, 2));
  return half_sqrt2 * f.apply_Z1();
}

template <class K>
[[nodiscard]] SpherePoly<K> d1bar(const SpherePoly<K>& f) {
  K half_sqrt2 = RingTraits<K>::sqrt2() * RingTraits<K>::from_rational(Rational(1, 2));
  return half_sqrt2 * f.apply_Z1bar();
}

template <class K>
[[nodiscard]] SpherePoly<K> reeb(const SpherePoly<K>& f) {
  return f.apply_T();
}

template <class K>
[[nodiscard]] SpherePoly<K> conj(const SpherePoly<K>& f) {
  return f.conj();
}

/// Promote a poly over K to a poly over Jet2<K> (or any ring with promote).
template <class J, class K>
[[nodiscard]] SpherePoly<J> promote_poly(const SpherePoly<K>& f) {
  SpherePoly<J> r;
  for (const auto& [k, c] : f.terms())
    r = r + SpherePoly<J>::monomial(k.a1, k.a2, k.b1, k.b2, J::promote(c));
  return r;
}

}  // namespace websterlab
