// Copyright 2026 The moduli-sep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "moduli/errors.hpp"
#include "moduli/forms.hpp"
#include "moduli/jseries.hpp"
#include "moduli/modular.hpp"
#include "moduli/parallel.hpp"
#include "moduli/primel.hpp"
#include "moduli/separation.hpp"
#include "moduli/singular.hpp"

namespace moduli::cli {

namespace {

long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count());
}

// Parses a decimal literal such as "-259.31" exactly.
mpq_class decimal_q(const std::string& s) {
  std::string digits;
  long scale = 0;
  bool after_point = false;
  for (char c : s) {
    if (c == '.') {
      after_point = true;
    } else {
      digits.push_back(c);
      if (after_point) ++scale;
    }
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  return make_q(mpz_class(digits, 10), den);
}

struct ConstantCheck {
  std::string group;
  std::string name;
  std::string printed;
  std::string rule;
  CertifiedReal value;
  bool passed = false;
};

// The printed digits are a prefix of |v|: p <= |v| < p + 10^-d, same sign.
ConstantCheck truncated(std::string group, std::string name,
                        const std::string& printed, const CertifiedReal& v) {
  mpq_class p = decimal_q(printed);
  const auto dot = printed.find('.');
  const long d = dot == std::string::npos
                     ? 0
                     : static_cast<long>(printed.size() - dot - 1);
  mpz_class ulp_den;
  mpz_ui_pow_ui(ulp_den.get_mpz_t(), 10, static_cast<unsigned long>(d));
  const long w = v.prec();
  const bool negative = sgn(p) < 0;
  CertifiedReal mag = abs(v);
  mpq_class lo = abs(p);
  mpq_class hi = lo + make_q(1, ulp_den);
  bool sign_ok = negative ? v.certainly_negative() : v.certainly_positive();
  bool ok = sign_ok &&
            certainly_less_equal(CertifiedReal::exact(lo, w), mag) &&
            certainly_less(mag, CertifiedReal::exact(hi, w));
  return {std::move(group), std::move(name), printed, "truncated", v, ok};
}

// The printed value is a ceiling within one percent: 0.99 c <= v <= c.
ConstantCheck ceiling(std::string group, std::string name,
                      const std::string& printed, const CertifiedReal& v) {
  mpq_class c = decimal_q(printed);
  const long w = v.prec();
  bool ok = certainly_less_equal(v, CertifiedReal::exact(c, w)) &&
            certainly_less_equal(CertifiedReal::exact(mpq_class(c * make_q(99, 100)), w), v);
  return {std::move(group), std::move(name), printed, "ceiling_within_1pct", v,
          ok};
}

ConstantCheck exact_integer(std::string group, std::string name,
                            const std::string& printed, const mpz_class& v,
                            long w) {
  return {std::move(group), std::move(name), printed, "exact",
          CertifiedReal::exact(v, w), v == mpz_class(printed, 10)};
}

ConstantCheck interval_inside(std::string group, std::string name,
                              const mpq_class& lo, const mpq_class& hi,
                              const std::string& printed,
                              const CertifiedReal& v) {
  const long w = v.prec();
  bool ok = certainly_less_equal(CertifiedReal::exact(lo, w), v) &&
            certainly_less_equal(v, CertifiedReal::exact(hi, w));
  return {std::move(group), std::move(name), printed, "inside", v, ok};
}

Json check_json(const ConstantCheck& c) {
  DecimalBall d = to_decimal(c.value, 20);
  return Json{{"group", c.group}, {"name", c.name},   {"printed", c.printed},
              {"rule", c.rule},   {"mid", d.mid},     {"rad", d.rad},
              {"passed", c.passed}};
}

// ---------------------------------------------------------------------------
// Reports built here from library summaries.

CheckReport grid_report(int n, long prec, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  GridFloorSummary s = verify_global_floors_grid(n, prec, workers);
  CheckReport r;
  r.check_id = "modular.grid_floors";
  r.params = Json{{"n", n}};
  r.passed = s.passed();
  r.margin = {std::to_string(s.failures), "0"};
  Json failed = Json::array();
  for (const auto& p : s.failed) failed.push_back({p.re, p.im});
  r.witness = Json{{"points", s.points},   {"failures", s.failures},
                   {"near_zeta", s.near_zeta}, {"near_i", s.near_i},
                   {"far", s.far},         {"failed", failed}};
  r.prec_bits = prec;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport orbits_report(long X, int workers, const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  const auto discs = discriminants_up_to(X);
  std::vector<IntPolynomial> polys(discs.size());
  std::vector<std::string> errors(discs.size());
  parallel_for(discs.size(), workers, [&](size_t i) {
    try {
      polys[i] = hilbert_class_polynomial(discs[i], policy);
    } catch (const ReconstructionFailed& e) {
      errors[i] = e.what();
    }
  });
  CheckReport r;
  r.check_id = "singular.orbit_integrality";
  r.params = Json{{"X", X}};
  r.passed = !discs.empty();
  long max_h = 0;
  for (size_t i = 0; i < discs.size(); ++i) {
    const bool ok = errors[i].empty();
    r.passed = r.passed && ok;
    max_h = std::max(max_h, polys[i].degree());
    if (!ok && !r.witness.contains("first_failure")) {
      r.witness["first_failure"] =
          Json{{"disc", discs[i].value}, {"error", errors[i]}};
    }
    r.items.push_back(Json{{"disc", discs[i].value},
                           {"class_number", polys[i].degree()},
                           {"passed", ok}});
  }
  r.witness["discriminants"] = discs.size();
  r.witness["max_class_number"] = max_h;
  r.margin = {std::to_string(discs.size()), "0"};
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport classify_report(long dx_value, long dy_value,
                            const std::string& alpha_text, long prec,
                            const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  mpq_class alpha;
  try {
    alpha = mpq_class(alpha_text, 10);
    alpha.canonicalize();
  } catch (const std::invalid_argument&) {
    throw InvalidAlpha("alpha must be a rational p/q, got '" + alpha_text + "'");
  }
  const auto dx = validate_discriminant(dx_value);
  const auto dy = validate_discriminant(dy_value);
  PrimitiveVerdict v = classify_primitive(dx, dy, alpha);
  using Tag = PrimitiveVerdict::Tag;
  CheckReport r;
  r.check_id = "primel.classify";
  r.params = Json{{"dx", dx.value}, {"dy", dy.value}, {"alpha", alpha.get_str()}};
  r.witness = Json{{"verdict", to_string(v.tag)}, {"reason", v.reason}};
  if (v.tag == Tag::kSumDiffCase) r.witness["subfield_index"] = v.subfield_index;
  if (auto a0 = example_quad_alpha(dx, dy); a0 && dx != dy) {
    r.witness["exceptional_alpha"] = {a0->get_str(), mpq_class(-*a0).get_str()};
  }
  switch (v.tag) {
    case Tag::kGenerates:
      r.passed = certify_generates(dx, dy, alpha, prec, policy);
      r.witness["certified_distinct"] = r.passed;
      break;
    case Tag::kExceptionExampleQuad:
      r.passed = exception_collides(dx, dy, alpha, prec);
      r.witness["conjugate_agrees"] = r.passed;
      break;
    default:
      r.passed = true;
      break;
  }
  r.margin = {"0", "0"};
  r.prec_bits = prec;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport orbit_report(long d_value, long prec, const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  const auto d = validate_discriminant(d_value);
  auto xs = orbit(d, prec, Accuracy::kRelative, policy);
  CheckReport r;
  r.check_id = "singular.orbit";
  r.params = Json{{"disc", d.value}};
  r.passed = true;
  for (const auto& x : xs) {
    r.items.push_back(Json{{"a", x.form.a},
                           {"b", x.form.b},
                           {"c", x.form.c},
                           {"dominance", to_string(x.dominance)},
                           {"re", to_json(to_decimal(x.value.real(), 30))},
                           {"im", to_json(to_decimal(x.value.imag(), 30))}});
  }
  r.witness = Json{{"class_number", xs.size()}};
  r.margin = {std::to_string(xs.size()), "0"};
  r.prec_bits = prec;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

CheckReport hilbert_report(long d_value, const PrecisionPolicy& policy) {
  auto t0 = std::chrono::steady_clock::now();
  const auto d = validate_discriminant(d_value);
  IntPolynomial h = hilbert_class_polynomial(d, policy);
  CheckReport r;
  r.check_id = "singular.hilbert";
  r.params = Json{{"disc", d.value}};
  r.passed = true;
  r.witness = Json{{"degree", h.degree()}, {"polynomial", h.to_string()}};
  r.margin = {std::to_string(h.degree()), "0"};
  r.wall_ms = elapsed_ms(t0);
  return r;
}

class Emitter {
 public:
  Emitter(std::ostream& os, std::string format) : os_(os), format_(std::move(format)) {}
  void operator()(const CheckReport& r) {
    if (format_ == "json") {
      os_ << to_ndjson_line(r) << '\n';
    } else if (format_ == "csv") {
      os_ << to_csv(r, true);
    } else {
      os_ << to_human(r);
    }
    os_.flush();
    all_passed_ = all_passed_ && r.passed;
  }
  bool all_passed() const { return all_passed_; }

 private:
  std::ostream& os_;
  std::string format_;
  bool all_passed_ = true;
};

int resolve_workers(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("MODULI_SEP_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return default_workers();
}

}  // namespace

CheckReport verify_constants(long prec_bits, const std::string& group) {
  if (!group.empty() && group != "series" && group != "elliptic" &&
      group != "y0" && group != "kappa_lambda") {
    throw DomainError("unknown constants group '" + group + "'");
  }
  auto t0 = std::chrono::steady_clock::now();
  const long w = prec_bits;
  auto want = [&](const char* g) { return group.empty() || group == g; };
  std::vector<ConstantCheck> checks;
  Json bracket;

  if (want("series")) {
    const auto c = j_coefficients(3);
    const char* printed_c[] = {"1", "744", "196884", "21493760", "864299970"};
    for (size_t n = 0; n < 5; ++n) {
      const std::string idx = std::to_string(static_cast<long>(n) - 1);
      checks.push_back(exact_integer("series", "c_" + idx, printed_c[n],
                                     n < c.size() ? c[n] : mpz_class(0), w));
    }
  }

  if (want("elliptic")) {
    const auto gam = elliptic_constants_gamma(w);
    const auto cau = elliptic_constants_cauchy(w);
    checks.push_back(truncated("elliptic", "abs_A0_gamma", "45745.0806", gam.abs_A0()));
    checks.push_back(truncated("elliptic", "abs_A0_cauchy", "45745.0806", cau.abs_A0()));
    checks.push_back(truncated("elliptic", "abs_A1_gamma", "24827.5650", gam.abs_A1()));
    checks.push_back(truncated("elliptic", "abs_A1_cauchy", "24827.5650", cau.abs_A1()));
    checks.push_back({"elliptic", "A0_routes_agree", "", "overlap",
                      gam.abs_A0() - cau.abs_A0(), gam.A0.overlaps(cau.A0)});
    checks.push_back({"elliptic", "A1_routes_agree", "", "overlap",
                      gam.abs_A1() - cau.abs_A1(), gam.A1.overlaps(cau.A1)});
  }

  if (want("y0")) {
    const mpq_class y_lo = make_q(1018, 1000), y_hi = make_q(1019, 1000);
    const auto br = locate_y0(w);
    checks.push_back(interval_inside("y0", "y0_bracket", y_lo, y_hi,
                                     "[1.018, 1.019]", br.interval()));
    checks.push_back(truncated("y0", "g_prime_1.018", "-259.31",
                               envelope_g_prime(exact_real(y_lo), w)));
    checks.push_back(truncated("y0", "g_prime_1.019", "118.15",
                               envelope_g_prime(exact_real(y_hi), w)));
    bracket = Json{br.lo.get_str(), br.hi.get_str()};
  }

  if (want("kappa_lambda")) {
    const auto k0 = kappa_lambda(EllipticPoint::kZeta6, make_q(1, 4), w);
    const auto l0 = kappa_lambda(EllipticPoint::kZeta6, make_q(19, 100), w);
    const auto k1 = kappa_lambda(EllipticPoint::kI, make_q(29, 100), w);
    const auto l1 = kappa_lambda(EllipticPoint::kI, make_q(2, 10), w);
    checks.push_back(ceiling("kappa_lambda", "kappa0_R0.25", "7260000", k0.kappa));
    checks.push_back(ceiling("kappa_lambda", "lambda0_R0.19", "22700000", l0.lambda));
    checks.push_back(ceiling("kappa_lambda", "kappa1_R0.29", "404000", k1.kappa));
    checks.push_back(ceiling("kappa_lambda", "lambda1_R0.2", "910000", l1.lambda));
  }

  CheckReport r;
  r.check_id = "modular.constants";
  r.params = Json{{"group", group.empty() ? "all" : group},
                  {"constants", checks.size()}};
  r.passed = !checks.empty();
  long failures = 0;
  for (const auto& ch : checks) {
    r.passed = r.passed && ch.passed;
    if (!ch.passed) {
      ++failures;
      if (!r.witness.contains("first_failure")) r.witness["first_failure"] = ch.name;
    }
    r.items.push_back(check_json(ch));
  }
  r.witness["failures"] = failures;
  if (!bracket.is_null()) r.witness["y0_bracket"] = bracket;
  r.margin = {std::to_string(failures), "0"};
  r.prec_bits = w;
  r.wall_ms = elapsed_ms(t0);
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Certified checks on singular moduli", "msep"};
  app.require_subcommand(1);
  app.fallthrough();

  long prec = 128;
  long prec_cap = 8192;
  int workers_flag = 0;
  std::string emit = "human";
  bool long_run = false;
  std::string out_path;
  app.add_option("--prec", prec, "starting working precision in bits")
      ->check(CLI::Range(32L, 1L << 20));
  app.add_option("--prec-cap", prec_cap, "precision escalation cap in bits")
      ->check(CLI::Range(32L, 1L << 22));
  app.add_option("--workers", workers_flag, "worker threads (default: cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--emit", emit, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_flag("--long-run", long_run, "allow the long sweeps");
  app.add_option("--out", out_path, "write reports to FILE");

  std::function<int(Emitter&, const PrecisionPolicy&, int)> action;

  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->require_subcommand(1);
  verify->fallthrough();

  long X = 0;
  int k = 0;
  auto* table1_cmd = verify->add_subcommand("table1", "small-discriminant minima");
  table1_cmd->add_option("--k", k, "row 1..4 (default: rows 1..3)")
      ->check(CLI::Range(1, 4));
  table1_cmd->add_option("--X", X, "explicit discriminant bound")
      ->check(CLI::Range(3L, 1L << 30));
  table1_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      if (X > 0) {
        emit_fn(min_pairwise_distance(X, PairMode::kAll, prec, workers, pol));
        emit_fn(min_pairwise_distance(X, PairMode::kEqualDiscriminant, prec,
                                      workers, pol));
        return 0;
      }
      if (k == 4 && !long_run) {
        err << "table1 --k 4 requires --long-run\n";
        return static_cast<int>(kUsage);
      }
      for (const auto& e : table1()) {
        if ((k == 0 && e.k <= 3) || e.k == k) {
          emit_fn(verify_table1_row(e, prec, workers, pol));
        }
      }
      return 0;
    };
  });

  std::string scale_text = "1";
  auto* sep_cmd = verify->add_subcommand("separation", "separation bound sweep");
  sep_cmd->add_option("--X", X, "discriminant bound (default 400)")
      ->check(CLI::Range(3L, 1L << 30));
  sep_cmd->add_option("--scale", scale_text, "multiply the bounds (control)");
  sep_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      mpq_class scale;
      try {
        scale = mpq_class(scale_text, 10);
        scale.canonicalize();
      } catch (const std::invalid_argument&) {
        throw DomainError("--scale must be a positive rational");
      }
      if (sgn(scale) <= 0) throw DomainError("--scale must be positive");
      emit_fn(verify_separation_theorem(X > 0 ? X : 400, prec, workers, scale, pol));
      return 0;
    };
  });

  long jprime_X = 0;
  auto* cderiv_cmd = verify->add_subcommand("cderiv", "bounds at CM points");
  cderiv_cmd->add_option("--X", X, "discriminant bound (default 3000)")
      ->check(CLI::Range(3L, 1L << 30));
  cderiv_cmd->add_option("--jprime-X", jprime_X,
                         "extend the j' floor to this bound (needs --long-run "
                         "above 3000; default 20000 with --long-run)");
  cderiv_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      const long top = X > 0 ? X : 3000;
      long jx = jprime_X > 0 ? jprime_X : (long_run ? 20000 : 0);
      if (std::max(top, jx) > 3000 && !long_run) {
        err << "cderiv beyond |D| = 3000 requires --long-run\n";
        return static_cast<int>(kUsage);
      }
      emit_fn(verify_cderiv(top, prec, workers, jx, pol));
      return 0;
    };
  });

  auto* bad_cmd = verify->add_subcommand("bad-list", "discriminant list sweep");
  bad_cmd->add_option("--X", X, "sweep horizon")->check(CLI::Range(3L, 1L << 24));
  bad_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy&, int) {
      emit_fn(verify_bad_list(X > 0 ? X : kBadSweepHorizon));
      return 0;
    };
  });

  auto* alpha_cmd = verify->add_subcommand("alpha-sets", "ratio-set imaginary parts");
  alpha_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      emit_fn(verify_alpha_sets(prec, workers, pol));
      return 0;
    };
  });

  auto* two_cmd = verify->add_subcommand("two-elementary",
                                         "non-proportionality, 2-elementary case");
  two_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      emit_fn(verify_two_elementary_polynomials(workers, pol));
      return 0;
    };
  });

  long dx = 0, dy = 0;
  auto* cross_cmd = verify->add_subcommand("cross-pairs",
                                           "non-proportionality, cross pairs");
  auto* cross_dx = cross_cmd->add_option("--dx", dx, "first discriminant");
  cross_cmd->add_option("--dy", dy, "second discriminant")->needs(cross_dx);
  cross_dx->needs(cross_cmd->get_option("--dy"));
  cross_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      std::vector<std::pair<long, long>> subset;
      if (dx != 0) {
        validate_discriminant(dx);
        validate_discriminant(dy);
        subset.emplace_back(dx, dy);
      }
      emit_fn(verify_cross_pairs(workers, subset, pol));
      return 0;
    };
  });

  std::string const_group;
  auto* const_cmd = verify->add_subcommand("constants", "printed constants");
  const_cmd->add_option("--group", const_group, "restrict to one group")
      ->check(CLI::IsMember({"series", "elliptic", "y0", "kappa_lambda"}));
  const_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy&, int) {
      emit_fn(verify_constants(prec, const_group));
      return 0;
    };
  });

  int grid_n = 100;
  auto* grid_cmd = verify->add_subcommand("grid", "floors on a fundamental-domain grid");
  grid_cmd->add_option("--n", grid_n, "grid side")->check(CLI::Range(1, 2000));
  grid_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy&, int workers) {
      emit_fn(grid_report(grid_n, prec, workers));
      return 0;
    };
  });

  auto* orbits_cmd = verify->add_subcommand("orbits", "integral symmetric functions");
  orbits_cmd->add_option("--X", X, "discriminant bound (default 1000)")
      ->check(CLI::Range(3L, 1L << 20));
  orbits_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int workers) {
      emit_fn(orbits_report(X > 0 ? X : 1000, workers, pol));
      return 0;
    };
  });

  std::string alpha_text;
  auto* classify_cmd = app.add_subcommand("classify", "primitive element verdict");
  classify_cmd->add_option("--dx", dx, "discriminant of x")->required();
  classify_cmd->add_option("--dy", dy, "discriminant of y")->required();
  classify_cmd->add_option("--alpha", alpha_text, "rational alpha p/q")->required();
  classify_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int) {
      emit_fn(classify_report(dx, dy, alpha_text, prec, pol));
      return 0;
    };
  });

  long disc = 0;
  auto* orbit_cmd = app.add_subcommand("orbit", "singular moduli of a discriminant");
  orbit_cmd->add_option("--dx,--disc", disc, "discriminant")->required();
  orbit_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int) {
      emit_fn(orbit_report(disc, prec, pol));
      return 0;
    };
  });

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert class polynomial");
  hilbert_cmd->add_option("--dx,--disc", disc, "discriminant")->required();
  hilbert_cmd->callback([&] {
    action = [&](Emitter& emit_fn, const PrecisionPolicy& pol, int) {
      emit_fn(hilbert_report(disc, pol));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (prec > prec_cap) {
    err << "--prec must not exceed --prec-cap\n";
    return kUsage;
  }
  if (!action) return kUsage;

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << "\n";
      return kUsage;
    }
  }
  Emitter emitter(out_path.empty() ? out : file, emit);
  const PrecisionPolicy policy{prec, prec_cap};
  try {
    int code = action(emitter, policy, resolve_workers(workers_flag));
    if (code != 0) return code;
  } catch (const NotInClassifiedList& e) {
    err << "msep: " << e.what() << "\n";
    return kUnclassified;
  } catch (const PrecisionExhausted& e) {
    err << "msep: precision exhausted: " << e.what() << "\n";
    return kPrecision;
  } catch (const NotADiscriminant& e) {
    err << "msep: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidAlpha& e) {
    err << "msep: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "msep: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "msep: " << e.what() << "\n";
    return kFail;
  }
  return emitter.all_passed() ? kPass : kFail;
}

}  // namespace moduli::cli
