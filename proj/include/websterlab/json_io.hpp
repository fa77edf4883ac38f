#pragma once

// JSON serialization for the exact types.
//
// Exact scalars are emitted as rational strings ("17/8"), never as floats;
// sqrt2 components appear only when nonzero, so round sphere output stays
// readable.  Polynomials list their monomials in the canonical term order,
// which makes the output byte-stable across runs.  from_json inverts the
// scalar and polynomial encodings so reports round-trip.

#include <algorithm>
#include <json.hpp>
#include <string>

#include "websterlab/lie_models.hpp"
#include "websterlab/ph_structure.hpp"
#include "websterlab/variational.hpp"

namespace websterlab {

using Json = nlohmann::ordered_json;

[[nodiscard]] inline std::string rational_string(const Rational& r) { return r.get_str(); }

[[nodiscard]] inline Json scalar_to_json(const Scalar& c) {
  Json j;
  j["re"] = rational_string(c.rational_part().re);
  j["im"] = rational_string(c.rational_part().im);
  if (c.sqrt2_part().re != 0) j["re_sqrt2"] = rational_string(c.sqrt2_part().re);
  if (c.sqrt2_part().im != 0) j["im_sqrt2"] = rational_string(c.sqrt2_part().im);
  return j;
}

[[nodiscard]] inline Scalar scalar_from_json(const Json& j) {
  GaussRational rat{rational_from_string(j.at("re").get<std::string>()),
                    rational_from_string(j.at("im").get<std::string>())};
  GaussRational irr{
      j.contains("re_sqrt2") ? rational_from_string(j["re_sqrt2"].get<std::string>())
                             : Rational(0),
      j.contains("im_sqrt2") ? rational_from_string(j["im_sqrt2"].get<std::string>())
                             : Rational(0)};
  return {rat, irr};
}

/// Inverse of Scalar::to_string: fixed term order, " + " / " - " separators,
/// units "", "i", "sqrt2", "i sqrt2".
[[nodiscard]] inline Scalar scalar_from_string(const std::string& s) {
  if (s == "0") return Scalar(0);
  GaussRational rat, irr;
  std::size_t pos = 0;
  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::size_t next_minus = s.find(" - ", pos);
    std::size_t end = std::min(next, next_minus);
    std::string term = s.substr(pos, end == std::string::npos ? end : end - pos);

    bool has_i = false, has_sqrt2 = false;
    auto strip_suffix = [&term](const std::string& suffix) {
      if (term.size() >= suffix.size() &&
          term.compare(term.size() - suffix.size(), suffix.size(), suffix) == 0) {
        term.erase(term.size() - suffix.size());
        return true;
      }
      return false;
    };
    has_sqrt2 = strip_suffix(" sqrt2");
    has_i = strip_suffix(" i");
    Rational coeff = rational_from_string(term);
    if (negative) coeff = -coeff;
    Rational& slot = has_sqrt2 ? (has_i ? irr.im : irr.re) : (has_i ? rat.im : rat.re);
    slot += coeff;

    if (end == std::string::npos) break;
    negative = end == next_minus;
    pos = end + 3;
  }
  return {rat, irr};
}

[[nodiscard]] inline Json poly_to_json(const SpherePoly<Scalar>& p) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : p.terms()) {
    Json t = scalar_to_json(coeff);
    t["exponents"] = {key.a1, key.a2, key.b1, key.b2};
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

[[nodiscard]] inline SpherePoly<Scalar> poly_from_json(const Json& j) {
  SpherePoly<Scalar> p;
  for (const Json& t : j.at("terms")) {
    const Json& e = t.at("exponents");
    p = p + SpherePoly<Scalar>::monomial(e.at(0).get<int>(), e.at(1).get<int>(),
                                         e.at(2).get<int>(), e.at(3).get<int>(),
                                         scalar_from_json(t));
  }
  return p;
}

[[nodiscard]] inline Json integral_to_json(const IntegralValue<Scalar>& v) {
  Json j = scalar_to_json(v.coeff);
  j["pi2_power"] = v.pi2_power;
  return j;
}

[[nodiscard]] inline IntegralValue<Scalar> integral_from_json(const Json& j) {
  return {scalar_from_json(j), j.at("pi2_power").get<int>()};
}

/// Render "coeff * (pi^2)^power" compactly: "16 * pi^2", "-21/4", "0".
[[nodiscard]] inline std::string integral_to_string(const IntegralValue<Scalar>& v) {
  if (v.is_zero()) return "0";
  std::string coeff = v.coeff.to_string();
  if (v.pi2_power == 0) return coeff;
  std::string pi = v.pi2_power == 1 ? "pi^2" : "pi^" + std::to_string(2 * v.pi2_power);
  if (coeff == "1") return pi;
  if (coeff == "-1") return "-" + pi;
  return coeff + " * " + pi;
}

/// Structure fields are scalars in every reachable geometry, so constant
/// polynomials serialize as exact strings ("17/8"); anything non-constant
/// falls back to the full term list.
[[nodiscard]] inline Json poly_field_to_json(const SpherePoly<Scalar>& p) {
  if (p.is_constant()) return p.constant_part().to_string();
  return poly_to_json(p);
}

[[nodiscard]] inline SpherePoly<Scalar> poly_field_from_json(const Json& j) {
  if (j.is_string()) return SpherePoly<Scalar>::constant(scalar_from_string(j.get<std::string>()));
  return poly_from_json(j);
}

[[nodiscard]] inline Json one_form_to_json(const OneForm<Scalar>& w) {
  return Json{{"c_theta", poly_field_to_json(w.c_theta)},
              {"c_1", poly_field_to_json(w.c_1)},
              {"c_1bar", poly_field_to_json(w.c_1b)}};
}

[[nodiscard]] inline Json residuals_to_json(const ResidualReport<Scalar>& r) {
  return Json{{"pe", poly_field_to_json(r.pe)},
              {"el_J", poly_field_to_json(r.el_J)},
              {"el_theta", poly_field_to_json(r.el_theta)},
              {"dw_t1", poly_field_to_json(r.dw_t1)},
              {"dw_t1b", poly_field_to_json(r.dw_t1b)},
              {"is_critical", r.is_critical()}};
}

[[nodiscard]] inline Json structure_to_json(const PhStructure<Scalar>& S) {
  return Json{{"h11bar", poly_field_to_json(S.h11)},
              {"omega11", one_form_to_json(S.omega)},
              {"A11", poly_field_to_json(S.A11)},
              {"R", poly_field_to_json(S.Rcurv)},
              {"residual_report", residuals_to_json(residuals(S))}};
}

[[nodiscard]] inline Json model_to_json(const HomogeneousModel& m) {
  Json params = Json::array();
  for (const Rational& p : m.params) params.push_back(rational_string(p));
  auto checks = model_checks(m);
  return Json{{"name", m.name},
              {"params", std::move(params)},
              {"R", m.R.to_string()},
              {"A11", m.A11.to_string()},
              {"density", checks.density.to_string()},
              {"checks_passed", checks.all()}};
}

// ---- float diagnostics -----------------------------------------------------

[[nodiscard]] inline Json dbl_to_json(const DblScalar& c) {
  return Json{{"re", c.v.real()}, {"im", c.v.imag()}};
}

[[nodiscard]] inline Json poly_to_json(const SpherePoly<DblScalar>& p) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : p.terms()) {
    Json t = dbl_to_json(coeff);
    t["exponents"] = {key.a1, key.a2, key.b1, key.b2};
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

[[nodiscard]] inline Json integral_to_json(const IntegralValue<DblScalar>& v) {
  Json j = dbl_to_json(v.coeff);
  j["pi2_power"] = v.pi2_power;
  return j;
}

[[nodiscard]] inline Json one_form_to_json(const OneForm<DblScalar>& w) {
  return Json{{"c_theta", poly_to_json(w.c_theta)},
              {"c_1", poly_to_json(w.c_1)},
              {"c_1bar", poly_to_json(w.c_1b)}};
}

[[nodiscard]] inline Json residuals_to_json(const ResidualReport<DblScalar>& r) {
  return Json{{"pe", poly_to_json(r.pe)},
              {"el_J", poly_to_json(r.el_J)},
              {"el_theta", poly_to_json(r.el_theta)},
              {"dw_t1", poly_to_json(r.dw_t1)},
              {"dw_t1b", poly_to_json(r.dw_t1b)},
              {"is_critical", r.is_critical()}};
}

[[nodiscard]] inline Json structure_to_json(const PhStructure<DblScalar>& S) {
  return Json{{"h11bar", poly_to_json(S.h11)},
              {"omega11", one_form_to_json(S.omega)},
              {"A11", poly_to_json(S.A11)},
              {"R", poly_to_json(S.Rcurv)},
              {"residual_report", residuals_to_json(residuals(S))}};
}

}  // namespace websterlab
