#pragma once

// Exact coefficient field Q(i, sqrt2).
//
// Every number the engine touches in exact mode is
//
//     (a + b*i) + (c + d*i) * sqrt(2),        a, b, c, d rational,
//
// stored as two Gaussian rationals over GMP.  This is closed under all the
// arithmetic the geometry needs: Gaussian coefficients come from the sphere
// polynomials themselves, and the single radical sqrt(2) covers the Levi
// normalisations and parameter maps of the model families we evaluate.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace websterlab {

using Rational = mpq_class;

/// Parse "n", "-n", or "n/d" into an exact rational.
[[nodiscard]] inline Rational rational_from_string(const std::string& text) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  return r;
}

[[nodiscard]] inline int sign_of(const Rational& r) { return sgn(r); }

/// Canonical fraction n/d (GMP's two-argument constructor does not reduce).
[[nodiscard]] inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Gaussian rational re + im*i.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(long v) : re(v) {}  // NOLINT: implicit by design
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_real() const { return im == 0; }
  [[nodiscard]] GaussRational conj() const { return {re, Rational(-im)}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend GaussRational operator-(const GaussRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Reciprocal; throws on zero.
  [[nodiscard]] GaussRational inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return {Rational(re / n), Rational(-im / n)};
  }
};

/// Element of the field Q(i, sqrt2): `rat + irr*sqrt(2)`.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT: implicit by design
  Scalar(Rational r) : rat_(std::move(r)) {}
  Scalar(GaussRational g) : rat_(std::move(g)) {}
  Scalar(GaussRational rational_part, GaussRational sqrt2_part)
      : rat_(std::move(rational_part)), irr_(std::move(sqrt2_part)) {}

  [[nodiscard]] static Scalar i() { return Scalar(GaussRational(Rational(0), Rational(1))); }
  [[nodiscard]] static Scalar sqrt2() { return Scalar(GaussRational(0), GaussRational(1)); }
  /// Exact rational literal, e.g. Scalar::of("-17/8").
  [[nodiscard]] static Scalar of(const std::string& text) {
    return Scalar(rational_from_string(text));
  }

  [[nodiscard]] const GaussRational& rational_part() const { return rat_; }
  [[nodiscard]] const GaussRational& sqrt2_part() const { return irr_; }

  [[nodiscard]] bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
  [[nodiscard]] bool is_real() const { return rat_.is_real() && irr_.is_real(); }
  [[nodiscard]] bool is_rational() const { return irr_.is_zero() && rat_.is_real(); }
  [[nodiscard]] Scalar conj() const { return {rat_.conj(), irr_.conj()}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.rat_ + b.rat_, a.irr_ + b.irr_};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.rat_ - b.rat_, a.irr_ - b.irr_};
  }
  friend Scalar operator-(const Scalar& a) { return {-a.rat_, -a.irr_}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    GaussRational two(2);
    return {a.rat_ * b.rat_ + two * (a.irr_ * b.irr_), a.rat_ * b.irr_ + a.irr_ * b.rat_};
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }

  /// Field inverse via (a + b√2)^-1 = (a - b√2) / (a² - 2b²); the Gaussian
  /// denominator a² - 2b² vanishes only at zero because √2 is irrational.
  [[nodiscard]] Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i, sqrt2)");
    GaussRational den = rat_ * rat_ - GaussRational(2) * (irr_ * irr_);
    if (den.is_zero()) throw std::domain_error("division by zero in Q(i, sqrt2)");
    GaussRational inv = den.inverse();
    return {rat_ * inv, (-irr_) * inv};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  /// Sign of a real element (exact); throws if the element is not real.
  [[nodiscard]] int real_sign() const {
    if (!is_real()) throw std::domain_error("sign of a non-real scalar");
    const Rational& x = rat_.re;
    const Rational& y = irr_.re;
    if (y == 0) return sign_of(x);
    if (x == 0) return sign_of(y);
    int sx = sign_of(x), sy = sign_of(y);
    if (sx == sy) return sx;
    Rational d = x * x - 2 * y * y;  // nonzero: x² = 2y² forces x = y = 0
    return sign_of(d) > 0 ? sx : sy;
  }
  /// Exact order on real elements.
  [[nodiscard]] bool less_than(const Scalar& other) const {
    return (*this - other).real_sign() < 0;
  }

  /// Numeric value for float-mode cross-checks.
  [[nodiscard]] std::complex<double> value() const {
    const double s2 = std::sqrt(2.0);
    return {rat_.re.get_d() + s2 * irr_.re.get_d(), rat_.im.get_d() + s2 * irr_.im.get_d()};
  }

  /// Exact square root of a nonnegative rational when it exists in Q(sqrt2):
  /// r = u² gives u, r = 2u² gives u·√2; anything else is absent.
  [[nodiscard]] static std::optional<Scalar> sqrt_of_rational(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Scalar(0);
    auto exact_sqrt = [](const Rational& v) -> std::optional<Rational> {
      mpz_class num = v.get_num(), den = v.get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
      if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
      mpz_class sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      return Rational(sn, sd);
    };
    if (auto u = exact_sqrt(r)) return Scalar(*u);
    if (auto u = exact_sqrt(Rational(r / 2))) return Scalar(GaussRational(0), GaussRational(*u));
    return std::nullopt;
  }

  /// Render as a human-readable exact string, e.g. "17/8", "15/8 i",
  /// "3 - 2 sqrt2", "1/2 + 1/2 i".  Zero renders as "0".
  [[nodiscard]] std::string to_string() const {
    struct Term {
      Rational coeff;
      const char* unit;
    };
    const Term terms[] = {{rat_.re, ""}, {rat_.im, " i"}, {irr_.re, " sqrt2"}, {irr_.im, " i sqrt2"}};
    std::string out;
    for (const Term& t : terms) {
      if (t.coeff == 0) continue;
      Rational a = abs(t.coeff);
      if (out.empty())
        out += (sign_of(t.coeff) < 0 ? "-" : "");
      else
        out += (sign_of(t.coeff) < 0 ? " - " : " + ");
      out += a.get_str() + t.unit;
    }
    return out.empty() ? "0" : out;
  }

 private:
  GaussRational rat_;  // part free of sqrt2
  GaussRational irr_;  // coefficient of sqrt2
};

[[nodiscard]] inline Scalar conj(const Scalar& s) { return s.conj(); }

}  // namespace websterlab
