#pragma once

// Two-parameter truncated jets.
//
// Jet2<K> is K[eps1, eps2] truncated past total degree 2: six coefficient
// slots (1, eps1, eps2, eps1^2, eps1*eps2, eps2^2).  Products drop anything
// of higher total degree, which is exactly the bookkeeping a second-variation
// computation needs: run the whole geometric pipeline once over Jet2 and the
// first and second derivatives in both deformation parameters fall out of the
// slots.  The deformation parameters are treated as real, so conjugation acts
// slotwise.

#include <array>
#include <stdexcept>
#include <utility>

#include "websterlab/ring.hpp"

namespace websterlab {

template <class K>
class Jet2 {
 public:
  static constexpr int slot_count = 6;

  Jet2() : c_{} {}
  Jet2(long v) : c_{} { c_[0] = K(v); }  // NOLINT: implicit by design

  [[nodiscard]] static Jet2 promote(K base) {
    Jet2 j;
    j.c_[0] = std::move(base);
    return j;
  }
  /// The deformation parameters themselves.
  [[nodiscard]] static Jet2 eps1() {
    Jet2 j;
    j.c_[1] = RingTraits<K>::one();
    return j;
  }
  [[nodiscard]] static Jet2 eps2() {
    Jet2 j;
    j.c_[2] = RingTraits<K>::one();
    return j;
  }

  /// Coefficient of eps1^d1 * eps2^d2; total degree above 2 does not exist.
  [[nodiscard]] const K& coefficient(int d1, int d2) const { return c_[slot(d1, d2)]; }
  [[nodiscard]] K& coefficient(int d1, int d2) { return c_[slot(d1, d2)]; }

  [[nodiscard]] bool is_zero() const {
    for (const K& v : c_)
      if (!RingTraits<K>::is_zero(v)) return false;
    return true;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (int s = 0; s < slot_count; ++s) r.c_[s] = a.c_[s] + b.c_[s];
    return r;
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (int s = 0; s < slot_count; ++s) r.c_[s] = a.c_[s] - b.c_[s];
    return r;
  }
  friend Jet2 operator-(const Jet2& a) {
    Jet2 r;
    for (int s = 0; s < slot_count; ++s) r.c_[s] = -a.c_[s];
    return r;
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (int s = 0; s < slot_count; ++s) {
      auto [d1a, d2a] = degrees(s);
      for (int t = 0; t < slot_count; ++t) {
        auto [d1b, d2b] = degrees(t);
        if (d1a + d2a + d1b + d2b > 2) continue;
        r.c_[slot(d1a + d1b, d2a + d2b)] = r.c_[slot(d1a + d1b, d2a + d2b)] + a.c_[s] * b.c_[t];
      }
    }
    return r;
  }
  friend bool operator==(const Jet2& a, const Jet2& b) { return (a - b).is_zero(); }

  [[nodiscard]] Jet2 conj() const {
    Jet2 r;
    for (int s = 0; s < slot_count; ++s) r.c_[s] = RingTraits<K>::conj(c_[s]);
    return r;
  }

  /// Reciprocal via the nilpotent geometric series; needs an invertible
  /// constant slot.
  [[nodiscard]] Jet2 inverse() const {
    K base = c_[0];
    if (RingTraits<K>::is_zero(base)) throw std::domain_error("jet has no inverse");
    K u = RingTraits<K>::inverse(base);
    Jet2 n = *this - promote(base);  // nilpotent part, n^3 = 0
    Jet2 nu = n * promote(u);
    Jet2 r = promote(u) * (Jet2(1) - nu + nu * nu);
    return r;
  }

  /// Evaluate at concrete parameter values.
  [[nodiscard]] K substitute(const K& t1, const K& t2) const {
    K r = c_[0];
    r = r + c_[1] * t1 + c_[2] * t2;
    r = r + c_[3] * (t1 * t1) + c_[4] * (t1 * t2) + c_[5] * (t2 * t2);
    return r;
  }

 private:
  static int slot(int d1, int d2) {
    if (d1 < 0 || d2 < 0 || d1 + d2 > 2) throw std::domain_error("jet order exceeded");
    static constexpr int table[3][3] = {{0, 2, 5}, {1, 4, -1}, {3, -1, -1}};
    return table[d1][d2];
  }
  static std::pair<int, int> degrees(int s) {
    static constexpr std::pair<int, int> table[slot_count] = {{0, 0}, {1, 0}, {0, 1},
                                                              {2, 0}, {1, 1}, {0, 2}};
    return table[s];
  }

  std::array<K, slot_count> c_;
};

template <class K>
struct RingTraits<Jet2<K>> {
  static constexpr bool exact = RingTraits<K>::exact;
  [[nodiscard]] static Jet2<K> zero() { return Jet2<K>(0); }
  [[nodiscard]] static Jet2<K> one() { return Jet2<K>(1); }
  [[nodiscard]] static Jet2<K> i() { return Jet2<K>::promote(RingTraits<K>::i()); }
  [[nodiscard]] static Jet2<K> sqrt2() { return Jet2<K>::promote(RingTraits<K>::sqrt2()); }
  [[nodiscard]] static Jet2<K> from_rational(const Rational& r) {
    return Jet2<K>::promote(RingTraits<K>::from_rational(r));
  }
  [[nodiscard]] static Jet2<K> conj(const Jet2<K>& x) { return x.conj(); }
  [[nodiscard]] static bool is_zero(const Jet2<K>& x) { return x.is_zero(); }
  [[nodiscard]] static Jet2<K> inverse(const Jet2<K>& x) { return x.inverse(); }
  [[nodiscard]] static std::pair<Jet2<K>, Jet2<K>> nilpotent_split(const Jet2<K>& x) {
    Jet2<K> base = Jet2<K>::promote(x.coefficient(0, 0));
    return {base, x - base};
  }
  [[nodiscard]] static bool positive_real(const Jet2<K>& x) {
    return RingTraits<K>::positive_real(x.coefficient(0, 0));
  }
  [[nodiscard]] static std::complex<double> to_complex(const Jet2<K>& x) {
    return RingTraits<K>::to_complex(x.coefficient(0, 0));
  }
};

}  // namespace websterlab
