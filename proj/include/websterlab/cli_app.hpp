#pragma once

// Command-line front end.  run_cli is the whole program: the binary's main
// just forwards argv, and the tests drive it in-process against a string
// stream.  Reports go to the supplied stream, diagnostics to stderr; exit
// code 0 means every requested check passed, 1 names a failed identity,
// 2 is a usage or parameter error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "websterlab/hessian.hpp"
#include "websterlab/json_io.hpp"
#include "websterlab/lie_models.hpp"

namespace websterlab {

namespace cli_detail {

[[nodiscard]] inline int thread_count() {
  if (const char* env = std::getenv("WEBSTERLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1 && n <= 64) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

[[nodiscard]] inline Rational parse_rational(const std::string& s) {
  try {
    return rational_from_string(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an exact rational like 3/4, got '" + s + "'");
  }
}

struct ModeArg {
  int p = 0, q = 0;
};

[[nodiscard]] inline ModeArg parse_mode(const std::string& s) {
  std::size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("expected a mode like 1,1, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a mode like 1,1, got '" + s + "'");
  }
}

enum class Format { pretty, json, csv };

struct Options {
  std::string model = "standard";
  std::optional<std::string> s;
  Format format = Format::pretty;
  bool float_mode = false;
  std::string kind = "both";
  ModeArg mode;
  int max_degree = 4;
};

inline void add_format_flags(CLI::App* cmd, Options& opt) {
  cmd->add_flag_callback("--json", [&opt] { opt.format = Format::json; },
                         "machine-readable JSON report");
  cmd->add_flag_callback("--csv", [&opt] { opt.format = Format::csv; },
                         "comma-separated table");
}

inline void add_model_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--model", opt.model, "structure to derive: standard | rossi")
      ->default_str("standard");
  cmd->add_option("--s", opt.s, "family parameter for --model rossi (exact rational)");
}

/// Resolve the exact structure for a verb; throws domain_error for bad
/// parameters, logic_error("unknown model") for unknown names.
[[nodiscard]] inline PhStructure<Scalar> exact_structure(const Options& opt) {
  if (opt.model == "standard") return standard_structure<Scalar>();
  if (opt.model == "rossi") {
    if (!opt.s) throw std::domain_error("--model rossi requires --s");
    return rossi_structure(parse_rational(*opt.s));
  }
  throw std::logic_error("unknown model");
}

[[nodiscard]] inline PhStructure<DblScalar> float_structure(const Options& opt) {
  if (opt.model == "standard") return standard_structure<DblScalar>();
  if (opt.model == "rossi") {
    if (!opt.s) throw std::domain_error("--model rossi requires --s");
    return rossi_structure_float(parse_rational(*opt.s).get_d());
  }
  throw std::logic_error("unknown model");
}

[[nodiscard]] inline std::string dbl_string(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

[[nodiscard]] inline std::string dbl_scalar_string(const DblScalar& c) {
  if (std::abs(c.v.imag()) <= DblScalar::kZeroTol) return dbl_string(c.v.real());
  return dbl_string(c.v.real()) + " + " + dbl_string(c.v.imag()) + " i";
}

// ---- verbs ------------------------------------------------------------------

inline int run_derive(const Options& opt, std::ostream& out) {
  if (opt.float_mode) {
    auto S = float_structure(opt);
    if (opt.format == Format::json) {
      out << structure_to_json(S).dump(2) << "\n";
    } else {
      out << "h11bar = " << dbl_scalar_string(S.h11.constant_part()) << "\n"
          << "omega11(T) = " << dbl_scalar_string(S.omega.c_theta.constant_part()) << "\n"
          << "A11 = " << dbl_scalar_string(S.A11.constant_part()) << "\n"
          << "R = " << dbl_scalar_string(S.Rcurv.constant_part()) << "\n"
          << "critical = " << (residuals(S).is_critical() ? "yes" : "no") << "\n";
    }
    return 0;
  }
  auto S = exact_structure(opt);
  if (opt.format == Format::json) {
    out << structure_to_json(S).dump(2) << "\n";
  } else {
    auto field = [](const SpherePoly<Scalar>& p) {
      return p.is_constant() ? p.constant_part().to_string() : p.to_string();
    };
    out << "h11bar = " << field(S.h11) << "\n"
        << "omega11(T) = " << field(S.omega.c_theta) << "\n"
        << "A11 = " << field(S.A11) << "\n"
        << "R = " << field(S.Rcurv) << "\n"
        << "critical = " << (residuals(S).is_critical() ? "yes" : "no") << "\n";
  }
  return 0;
}

inline int run_energy(const Options& opt, std::ostream& out) {
  if (opt.float_mode) {
    auto v = energy(float_structure(opt));
    if (opt.format == Format::json) {
      out << integral_to_json(v).dump(2) << "\n";
    } else {
      out << dbl_scalar_string(v.coeff) << " * pi^" << 2 * v.pi2_power << "\n";
    }
    return 0;
  }
  auto v = energy(exact_structure(opt));
  if (opt.format == Format::json)
    out << integral_to_json(v).dump(2) << "\n";
  else
    out << integral_to_string(v) << "\n";
  return 0;
}

inline int run_residuals(const Options& opt, std::ostream& out) {
  bool critical = false;
  if (opt.float_mode) {
    auto r = residuals(float_structure(opt));
    critical = r.is_critical();
    if (opt.format == Format::json)
      out << residuals_to_json(r).dump(2) << "\n";
    else
      out << "pe = " << (r.pe.is_zero() ? "0" : "nonzero") << "\n"
          << "el_J = " << (r.el_J.is_zero() ? "0" : "nonzero") << "\n"
          << "el_theta = " << (r.el_theta.is_zero() ? "0" : "nonzero") << "\n"
          << "critical = " << (critical ? "yes" : "no") << "\n";
  } else {
    auto r = residuals(exact_structure(opt));
    critical = r.is_critical();
    if (opt.format == Format::json)
      out << residuals_to_json(r).dump(2) << "\n";
    else
      out << "pe = " << r.pe.to_string() << "\n"
          << "el_J = " << r.el_J.to_string() << "\n"
          << "el_theta = " << r.el_theta.to_string() << "\n"
          << "critical = " << (critical ? "yes" : "no") << "\n";
  }
  return critical ? 0 : 1;
}

inline int run_first_variation(const Options& opt, std::ostream& out) {
  if (opt.kind != "theta" && opt.kind != "J")
    throw CLI::ValidationError("--kind must be theta or J");
  int p = opt.mode.p, q = opt.mode.q;
  if (opt.float_mode) {
    auto S = float_structure(opt);
    SpherePoly<DblScalar> mode = SpherePoly<DblScalar>::monomial(p, 0, 0, q, DblScalar(1L));
    IntegralValue<DblScalar> v = opt.kind == "theta"
                                     ? first_variation_theta(S, mode + mode.conj())
                                     : first_variation_J(S, mode);
    if (opt.format == Format::json)
      out << integral_to_json(v).dump(2) << "\n";
    else
      out << dbl_scalar_string(v.coeff) << " * pi^" << 2 * v.pi2_power << "\n";
    return 0;
  }
  auto S = exact_structure(opt);
  IntegralValue<Scalar> v = opt.kind == "theta"
                                ? first_variation_theta(S, rep(p, q) + rep(p, q).conj())
                                : first_variation_J(S, rep(p, q));
  if (opt.format == Format::json) {
    Json j = integral_to_json(v);
    j["kind"] = opt.kind;
    j["p"] = p;
    j["q"] = q;
    out << j.dump(2) << "\n";
  } else {
    out << integral_to_string(v) << "\n";
  }
  return 0;
}

inline int run_hessian(const Options& opt, std::ostream& out) {
  auto S = exact_structure(opt);
  int p = opt.mode.p, q = opt.mode.q;
  SpherePoly<Scalar> E = rep(p, q);
  SpherePoly<Scalar> h = E + E.conj();

  Json j;
  j["p"] = p;
  j["q"] = q;
  if (opt.kind == "theta" || opt.kind == "both") {
    auto quad = hess_theta(S, h);
    auto jet = jet_energy(S, &h, nullptr);
    Json block;
    block["quad"] = integral_to_string(quad);
    block["closed_form"] = rational_string(closed_form_theta(p, q));
    block["jet_twice"] = integral_to_string(detail::scale_jet_slot(jet, 2, 0, 2));
    block["jet_match"] = quad == detail::scale_jet_slot(jet, 2, 0, 2);
    j["theta"] = std::move(block);
  }
  if (opt.kind == "J" || opt.kind == "both") {
    auto raw = hess_J_raw(S, E);
    auto reduced = hess_J(S, E);
    auto jet = jet_energy(S, nullptr, &E);
    Json block;
    block["raw"] = integral_to_string(raw);
    block["reduced"] = integral_to_string(reduced);
    block["closed_form"] = rational_string(closed_form_J(p, q));
    block["slice_residual_zero"] = slice_residual(S, E).is_zero();
    block["jet_twice"] = integral_to_string(detail::scale_jet_slot(jet, 0, 2, 2));
    block["jet_match"] = raw == detail::scale_jet_slot(jet, 0, 2, 2);
    j["J"] = std::move(block);
  }

  if (opt.format == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    out << "mode (" << p << "," << q << ")\n";
    if (j.contains("theta"))
      out << "theta: quad = " << j["theta"]["quad"].get<std::string>()
          << ", closed_form = " << j["theta"]["closed_form"].get<std::string>()
          << ", jet x2 = " << j["theta"]["jet_twice"].get<std::string>()
          << ", jet_match = " << (j["theta"]["jet_match"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("J"))
      out << "J: raw = " << j["J"]["raw"].get<std::string>()
          << ", reduced = " << j["J"]["reduced"].get<std::string>()
          << ", closed_form = " << j["J"]["closed_form"].get<std::string>()
          << ", slice_residual_zero = "
          << (j["J"]["slice_residual_zero"].get<bool>() ? "yes" : "no")
          << ", jet x2 = " << j["J"]["jet_twice"].get<std::string>()
          << ", jet_match = " << (j["J"]["jet_match"].get<bool>() ? "yes" : "no") << "\n";
  }

  bool ok = (!j.contains("theta") || j["theta"]["jet_match"].get<bool>()) &&
            (!j.contains("J") || j["J"]["jet_match"].get<bool>());
  if (!ok) std::cerr << "hessian: quadratic form disagrees with the energy jet\n";
  return ok ? 0 : 1;
}

inline int run_scan(const Options& opt, std::ostream& out) {
  auto S = exact_structure(opt);
  auto rows = spectrum_scan(S, opt.max_degree, thread_count());

  auto keep = [&](const SpectrumEntry& r) {
    if (opt.kind == "both") return true;
    return opt.kind == "theta" ? r.direction == Direction::contact
                               : r.direction == Direction::cr;
  };
  auto kind_name = [](Direction d) { return d == Direction::contact ? "theta" : "J"; };

  bool all_match = true;
  if (opt.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      if (!keep(r)) continue;
      all_match = all_match && r.jet_match;
      arr.push_back(Json{{"p", r.p},
                         {"q", r.q},
                         {"kind", kind_name(r.direction)},
                         {"closed_form", rational_string(r.closed_form)},
                         {"sign", r.sign},
                         {"quad_form", integral_to_string(r.quad)},
                         {"jet_match", r.jet_match}});
    }
    out << arr.dump(2) << "\n";
  } else {
    out << "p,q,kind,closed_form,sign,quad_form,jet_match\n";
    for (const auto& r : rows) {
      if (!keep(r)) continue;
      all_match = all_match && r.jet_match;
      out << r.p << ',' << r.q << ',' << kind_name(r.direction) << ','
          << rational_string(r.closed_form) << ',' << r.sign << ','
          << integral_to_string(r.quad) << ',' << (r.jet_match ? "true" : "false") << "\n";
    }
  }
  if (!all_match) std::cerr << "scan: a quadratic form disagrees with the energy jet\n";
  return all_match ? 0 : 1;
}

inline int run_jet_check(const Options& opt, std::ostream& out) {
  auto S = exact_structure(opt);
  int p = opt.mode.p, q = opt.mode.q;
  SpherePoly<Scalar> E = rep(p, q);
  SpherePoly<Scalar> h = E + E.conj();

  struct Line {
    std::string name;
    bool ok;
  };
  std::vector<Line> lines;

  if (opt.kind == "theta" || opt.kind == "both") {
    auto jet = jet_energy(S, &h, nullptr);
    lines.push_back({"first_variation_theta == jet eps^1",
                     first_variation_theta(S, h) == detail::scale_jet_slot(jet, 1, 0, 1)});
    lines.push_back({"hess_theta == 2 x jet eps^2",
                     hess_theta(S, h) == detail::scale_jet_slot(jet, 2, 0, 2)});
  }
  if (opt.kind == "J" || opt.kind == "both") {
    auto jet = jet_energy(S, nullptr, &E);
    lines.push_back({"first_variation_J == jet eps^1",
                     first_variation_J(S, E) == detail::scale_jet_slot(jet, 1, 0, 1)});
    lines.push_back({"hess_J_raw == 2 x jet eps^2",
                     hess_J_raw(S, E) == detail::scale_jet_slot(jet, 0, 2, 2)});
  }
  if (opt.kind == "both") {
    auto jet = jet_energy(S, &h, &E);
    lines.push_back({"hess_mixed == jet eps1 eps2",
                     hess_mixed(S, h, E) == detail::scale_jet_slot(jet, 1, 1, 1)});
  }

  bool all_ok = true;
  for (const auto& l : lines) {
    all_ok = all_ok && l.ok;
    out << l.name << ": " << (l.ok ? "ok" : "MISMATCH") << "\n";
    if (!l.ok) std::cerr << "jet-check failed: " << l.name << "\n";
  }
  return all_ok ? 0 : 1;
}

inline int run_catalog(const Options& opt, std::ostream& out) {
  auto models = catalog();
  if (opt.format == Format::json) {
    Json arr = Json::array();
    for (const auto& m : models) arr.push_back(model_to_json(m));
    out << arr.dump(2) << "\n";
  } else if (opt.format == Format::csv) {
    out << "name,params,R,A11,density,checks_passed\n";
    for (const auto& m : models) {
      auto checks = model_checks(m);
      std::string params;
      for (std::size_t k = 0; k < m.params.size(); ++k)
        params += (k ? ";" : "") + rational_string(m.params[k]);
      out << m.name << ',' << params << ',' << m.R.to_string() << ',' << m.A11.to_string()
          << ',' << checks.density.to_string() << ',' << (checks.all() ? "true" : "false")
          << "\n";
    }
  } else {
    for (const auto& m : models) {
      auto checks = model_checks(m);
      out << m.name;
      for (const auto& prm : m.params) out << " " << rational_string(prm);
      out << ": R = " << m.R.to_string() << ", A11 = " << m.A11.to_string()
          << ", density = " << checks.density.to_string()
          << ", checks = " << (checks.all() ? "pass" : "FAIL") << "\n";
    }
  }
  bool all = true;
  for (const auto& m : models) all = all && model_checks(m).all();
  return all ? 0 : 1;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the in-process tests.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  using namespace cli_detail;

  CLI::App app{"exact pseudohermitian invariants and energy variations on S^3"};
  app.require_subcommand(1);
  Options opt;

  std::string mode_str = "1,1";
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_str, "harmonic mode p,q")->default_str("1,1");
  };
  auto add_kind = [&](CLI::App* cmd, const std::string& dflt) {
    opt.kind = dflt;
    cmd->add_option("--kind", opt.kind, "direction: theta | J | both")->default_str(dflt);
  };
  auto add_float = [&](CLI::App* cmd) {
    cmd->add_flag("--float", opt.float_mode,
                  "floating diagnostics (1e-10 checks, non-Pythagorean parameters allowed)");
  };

  CLI::App* derive = app.add_subcommand("derive", "solve a coframe for its invariants");
  add_model_options(derive, opt);
  add_format_flags(derive, opt);
  add_float(derive);

  CLI::App* energy_cmd = app.add_subcommand("energy", "total energy of the structure");
  add_model_options(energy_cmd, opt);
  add_format_flags(energy_cmd, opt);
  add_float(energy_cmd);

  CLI::App* resid = app.add_subcommand("residuals", "criticality residuals");
  add_model_options(resid, opt);
  add_format_flags(resid, opt);
  add_float(resid);

  CLI::App* fv = app.add_subcommand("first-variation", "first variation along a mode");
  add_model_options(fv, opt);
  add_format_flags(fv, opt);
  add_float(fv);
  add_mode(fv);
  add_kind(fv, "theta");

  CLI::App* hess = app.add_subcommand("hessian", "second variation report for a mode");
  add_model_options(hess, opt);
  add_format_flags(hess, opt);
  add_mode(hess);
  add_kind(hess, "both");

  CLI::App* scan = app.add_subcommand("scan", "spectrum scan over low modes");
  add_model_options(scan, opt);
  add_format_flags(scan, opt);
  add_kind(scan, "both");
  scan->add_option("--max-degree", opt.max_degree, "largest p+q")->default_val(4);

  CLI::App* jc = app.add_subcommand("jet-check", "variational formulas against the energy jet");
  add_model_options(jc, opt);
  add_mode(jc);
  add_kind(jc, "both");

  CLI::App* cat = app.add_subcommand("catalog", "homogeneous models and their checks");
  add_format_flags(cat, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    opt.mode = parse_mode(mode_str);
    if (derive->parsed()) return run_derive(opt, out);
    if (energy_cmd->parsed()) return run_energy(opt, out);
    if (resid->parsed()) return run_residuals(opt, out);
    if (fv->parsed()) return run_first_variation(opt, out);
    if (hess->parsed()) return run_hessian(opt, out);
    if (scan->parsed()) return run_scan(opt, out);
    if (jc->parsed()) return run_jet_check(opt, out);
    if (cat->parsed()) return run_catalog(opt, out);
    std::cerr << "no verb given\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {  // domain_error included: parameter errors
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace websterlab
