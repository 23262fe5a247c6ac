#include "cli.hpp"

#include "hadprod/analysis.hpp"
#include "hadprod/decomp.hpp"
#include "hadprod/generators.hpp"
#include "hadprod/harness.hpp"
#include "hadprod/operators.hpp"
#include "hadprod/polyspec.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace hadprod {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool pretty = false;
  TrialConfig cfg;
  std::size_t kmax = 8;
  std::string in;
};

struct Printer {
  const Globals& g;
  std::ostream& out;

  void poly(const Poly& p, std::optional<std::size_t> tag = std::nullopt) const {
    if (g.json) out << polyspec_json(p, tag) << '\n';
    else if (g.pretty) out << to_pretty(p) << '\n';
    else out << to_csv(p) << '\n';
  }

  void tagged(const TaggedPoly& t) const { poly(t.poly, t.ref_degree); }
};

// --poly text or the --in file, never both.
PolySpec input_spec(const std::string& text, const Globals& g, const char* flag = "--poly") {
  if (!text.empty() && !g.in.empty()) throw PreconditionError(std::string("give either ") + flag + " or --in, not both");
  if (!g.in.empty()) return read_polyspec_file(g.in);
  if (text.empty()) throw PreconditionError(std::string("missing ") + flag + " (or --in FILE)");
  return {parse_coeffs(text), std::nullopt};
}

Poly required_poly(const std::string& text, const char* flag) {
  if (text.empty()) throw PreconditionError(std::string("missing ") + flag);
  return parse_coeffs(text);
}

// Explicit tag, else the file's tag, else the degree. Never below the degree.
std::size_t resolve_tag(const Poly& p, std::optional<std::size_t> explicit_tag, std::optional<std::size_t> spec_tag,
                        const char* flag) {
  const std::size_t deg = p.degree().value_or(0);
  const std::size_t d = explicit_tag.value_or(spec_tag.value_or(deg));
  if (d < deg)
    throw PreconditionError(std::string(flag) + " = " + std::to_string(d) + " is below the degree " +
                            std::to_string(deg));
  return d;
}

int report_property(const PropertyReport& r, const Printer& pr) {
  if (pr.g.json) {
    pr.out << json{{"property", r.property}, {"holds", r.holds}, {"witness", r.witness}, {"detail", r.detail}}.dump()
           << '\n';
  } else if (r.holds) {
    pr.out << "holds: " << r.property << '\n';
  } else {
    pr.out << "fails: " << r.property << '\n';
    if (!r.witness.empty()) {
      pr.out << "witness:";
      for (auto w : r.witness) pr.out << ' ' << w;
      pr.out << '\n';
    }
    if (!r.detail.empty()) pr.out << "detail: " << r.detail << '\n';
  }
  return r.holds ? exit_pass : exit_fail;
}

int report_suite(const SuiteReport& r, const Globals& g, std::ostream& out) {
  std::string verdict;
  if (r.passed() && r.expect_violation)
    verdict = "PASS: counterexample confirmed for k = 1.." + std::to_string(r.trials);
  else if (r.passed())
    verdict = "PASS: conclusion held on every trial";
  else if (r.expect_violation)
    verdict = "FAIL: counterexample not reproduced; the computation is proved, so this is an implementation bug";
  else
    verdict = "FAIL: theorem violated on " + std::to_string(r.failures) +
              " trial(s); the statement is proved, so this is an implementation bug";
  if (g.json) {
    out << json{{"suite", r.name},
                {"seed", g.cfg.seed},
                {"trials", r.trials},
                {"failures", r.failures},
                {"expect_violation", r.expect_violation},
                {"passed", r.passed()},
                {"messages", r.messages}}
               .dump()
        << '\n';
  } else {
    out << "suite: " << r.name << '\n';
    if (!r.expect_violation) out << "seed: " << g.cfg.seed << '\n';
    out << (r.expect_violation ? "cases: " : "trials: ") << r.trials << '\n';
    out << "failures: " << r.failures << '\n';
    for (const auto& m : r.messages) out << "  " << m << '\n';
    out << "result: " << verdict << '\n';
  }
  return r.passed() ? exit_pass : exit_fail;
}

std::string suite_list() {
  std::string s;
  for (Suite su : all_suites()) s += (s.empty() ? "" : ", ") + suite_name(su);
  return s;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Exact operator calculus for polynomial-interpolated power series.\n"
               "Coefficients are comma-separated, ascending, integers or num/den.",
               "hadprod"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Print results as JSON (PolySpec objects for polynomials)");
  app.add_flag("--pretty", g.pretty, "Print polynomials in human-readable form");
  app.add_option("--seed", g.cfg.seed, "Master seed of the trial stream");
  app.add_option("--trials", g.cfg.trials, "Number of random trials")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", g.cfg.max_degree, "Degree cap for random instances")->check(CLI::PositiveNumber);
  app.add_option("--max-coefficient", g.cfg.max_coefficient, "Bound for random numerators and denominators")
      ->check(CLI::PositiveNumber);
  app.add_option("--kmax", g.kmax, "Largest power checked by the reeve suite")->check(CLI::PositiveNumber);
  app.add_option("--in", g.in, "Read the input polynomial from a PolySpec JSON file");

  Printer pr{g, out};
  std::map<CLI::App*, std::function<int()>> handlers;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string poly_text, a_text, b_text, route_text = "direct", property, theorem, scan_target;
  std::optional<std::size_t> d, da, db, center, order;
  bool contract = false, reflect_mode = false;

  CLI::App* w = sub("w", "Numerator of sum p(j) x^j over (1-x)^{deg p + 1}");
  w->add_option("--poly", poly_text, "Interpolating polynomial p");
  w->add_option("--d", d, "Reference degree d >= deg p (default deg p)");
  handlers[w] = [&] {
    const PolySpec p = input_spec(poly_text, g);
    if (d) pr.tagged({w_numerator(p.poly, resolve_tag(p.poly, d, std::nullopt, "--d")), *d});
    else pr.tagged(w_transform(p.poly));
    return exit_pass;
  };

  CLI::App* invw = sub("invw", "Interpolating polynomial sum h_i C(x+d-i, d) of a numerator");
  invw->add_option("--poly", poly_text, "Numerator h");
  invw->add_option("--d", d, "Degree tag (default: file tag or deg h)");
  handlers[invw] = [&] {
    const PolySpec h = input_spec(poly_text, g);
    pr.poly(w_inverse(h.poly, resolve_tag(h.poly, d, h.degree_tag, "--d")));
    return exit_pass;
  };

  CLI::App* f = sub("f", "f-polynomial sum h_i x^i (x+1)^{d-i} of a numerator");
  f->add_option("--poly", poly_text, "Numerator h");
  f->add_option("--d", d, "Degree tag (default: file tag or deg h)");
  handlers[f] = [&] {
    const PolySpec h = input_spec(poly_text, g);
    const std::size_t tag = resolve_tag(h.poly, d, h.degree_tag, "--d");
    pr.poly(f_from_h(h.poly, tag), tag);
    return exit_pass;
  };

  CLI::App* h = sub("h", "Magic-basis coordinates (the numerator) of an f-polynomial");
  h->add_option("--poly", poly_text, "f-polynomial");
  h->add_option("--d", d, "Degree tag (default: file tag or deg f)");
  handlers[h] = [&] {
    const PolySpec fs = input_spec(poly_text, g);
    const std::size_t tag = resolve_tag(fs.poly, d, fs.degree_tag, "--d");
    pr.poly(h_from_f(fs.poly, tag), tag);
    return exit_pass;
  };

  CLI::App* had = sub("hadamard", "Numerator of the Hadamard product of two series");
  had->add_option("--a", a_text, "First numerator");
  had->add_option("--da", da, "Degree tag of the first numerator (default its degree)");
  had->add_option("--b", b_text, "Second numerator");
  had->add_option("--db", db, "Degree tag of the second numerator (default its degree)");
  had->add_option("--route", route_text, "direct, bullet or diamond")
      ->check(CLI::IsMember({"direct", "bullet", "diamond"}));
  handlers[had] = [&] {
    const Poly a = required_poly(a_text, "--a"), b = required_poly(b_text, "--b");
    const TaggedPoly ta{a, resolve_tag(a, da, std::nullopt, "--da")};
    const TaggedPoly tb{b, resolve_tag(b, db, std::nullopt, "--db")};
    const HadamardRoute route = route_text == "bullet"    ? HadamardRoute::bullet
                                : route_text == "diamond" ? HadamardRoute::diamond
                                                          : HadamardRoute::direct;
    pr.tagged(hadamard(ta, tb, route));
    return exit_pass;
  };

  CLI::App* dia = sub("diamond", "Diamond product of two f-polynomials");
  dia->add_option("--a", a_text, "First f-polynomial");
  dia->add_option("--b", b_text, "Second f-polynomial");
  handlers[dia] = [&] {
    pr.poly(diamond(required_poly(a_text, "--a"), required_poly(b_text, "--b")));
    return exit_pass;
  };

  CLI::App* gam = sub("gamma", "Gamma-expansion of a symmetric polynomial (or the inverse with --contract)");
  gam->add_option("--poly", poly_text, "Symmetric polynomial (or gamma-polynomial with --contract)");
  gam->add_option("--center", center, "s, for symmetry about s/2 (default: detected; required with --contract)");
  gam->add_flag("--contract", contract, "Map a gamma-polynomial back to sum g_i x^i (1+x)^{s-2i}");
  handlers[gam] = [&] {
    const PolySpec p = input_spec(poly_text, g);
    if (contract) {
      if (!center) throw PreconditionError("--contract requires --center");
      pr.poly(gamma_contract(p.poly, *center), *center);
      return exit_pass;
    }
    std::size_t s = 0;
    if (center) {
      s = *center;
    } else {
      const auto cert = symmetry_certificate(p.poly, std::nullopt);
      if (!cert) throw PreconditionError("gamma: asymmetric input (no center of symmetry)");
      s = cert->center_numerator;
    }
    pr.poly(gamma_expand(p.poly, s));
    return exit_pass;
  };

  CLI::App* sym = sub("symdec", "Symmetric decomposition h = a + x b (or f = a + x b under reflection)");
  sym->add_option("--poly", poly_text, "Numerator h (or f-polynomial with --reflect)");
  sym->add_option("--d", d, "Degree tag (default: file tag or degree)");
  sym->add_flag("--reflect", reflect_mode, "Decompose an f-polynomial with respect to reflection");
  handlers[sym] = [&] {
    const PolySpec p = input_spec(poly_text, g);
    const std::size_t tag = resolve_tag(p.poly, d, p.degree_tag, "--d");
    Poly a, b;
    if (reflect_mode) {
      const ReflectDecomp dec = r_decompose(p.poly, tag);
      a = dec.a;
      b = dec.b;
    } else {
      const SymDecomp dec = i_decompose(p.poly, tag);
      a = dec.a;
      b = dec.b;
    }
    if (g.json) {
      json obj = {{"a", json::parse(polyspec_json(a, tag))}};
      obj["b"] = tag > 0 ? json::parse(polyspec_json(b, tag - 1)) : json::parse(polyspec_json(b));
      out << obj.dump() << '\n';
    } else {
      out << "a: " << (g.pretty ? to_pretty(a) : to_csv(a)) << '\n';
      out << "b: " << (g.pretty ? to_pretty(b) : to_csv(b)) << '\n';
    }
    return exit_pass;
  };

  CLI::App* chk = sub("check", "Check a property; exit 0 if it holds, 1 with a witness if it fails");
  chk->add_option("property", property,
                  "nonneg, internal-zeros (holds when there are none), unimodal, logconcave, ulc, realrooted, "
                  "gammapos, symmetric, interlacing")
      ->required()
      ->check(CLI::IsMember({"nonneg", "internal-zeros", "unimodal", "logconcave", "ulc", "realrooted", "gammapos",
                             "symmetric", "interlacing"}));
  chk->add_option("--poly,--a", poly_text, "Polynomial to check (for interlacing: a)");
  chk->add_option("--b", b_text, "For interlacing: the polynomial b tested for b interlacing a");
  chk->add_option("--order", order, "ULC order m (default deg)");
  chk->add_option("--center", center, "s for gammapos (default: detected center)");
  chk->add_option("--d", d, "Reference degree for symmetric, reported as the defect d - s");
  handlers[chk] = [&] {
    const Poly p = input_spec(poly_text, g).poly;
    if (property == "nonneg") return report_property(check_nonnegative(p), pr);
    if (property == "internal-zeros") return report_property(has_internal_zeros(p), pr);
    if (property == "unimodal") return report_property(is_unimodal(p), pr);
    if (property == "logconcave") return report_property(is_log_concave(p), pr);
    if (property == "ulc") return report_property(is_ulc(p, order.value_or(p.degree().value_or(0))), pr);
    if (property == "realrooted") return report_property(is_real_rooted(p), pr);
    if (property == "interlacing") return report_property(interlaces(required_poly(b_text, "--b"), p), pr);
    if (property == "gammapos") {
      std::size_t s = 0;
      if (center) {
        s = *center;
      } else {
        if (p.is_zero()) throw PreconditionError("gammapos: zero polynomial needs --center");
        const auto cert = symmetry_certificate(p, std::nullopt);
        if (!cert) throw PreconditionError("gammapos: asymmetric input (no center of symmetry)");
        s = cert->center_numerator;
      }
      return report_property(is_gamma_positive(p, s), pr);
    }
    // symmetric
    const auto cert = symmetry_certificate(p, d);
    if (!cert) return report_property(PropertyReport::fail("symmetric", {}, "no center of symmetry"), pr);
    if (d && !cert->defect)
      throw PreconditionError("--d = " + std::to_string(*d) + " is below the symmetry degree " +
                              std::to_string(cert->center_numerator));
    PropertyReport r = PropertyReport::pass("symmetric");
    r.witness = {static_cast<long long>(cert->center_numerator)};
    r.detail = "center " + std::to_string(cert->center_numerator) + "/2";
    if (cert->defect) {
      r.witness.push_back(static_cast<long long>(*cert->defect));
      r.detail += ", defect " + std::to_string(*cert->defect);
    }
    if (g.json) return report_property(r, pr);
    out << "holds: symmetric (" << r.detail << ")\n";
    return exit_pass;
  };

  CLI::App* ver = sub("verify", "Run a theorem suite on seeded random instances");
  ver->add_option("theorem", theorem, suite_list())->required();
  handlers[ver] = [&] {
    const auto suite = suite_from_name(theorem);
    if (!suite) throw PreconditionError("unknown theorem '" + theorem + "' (expected one of: " + suite_list() + ")");
    return report_suite(run_suite(*suite, g.cfg, g.kmax), g, out);
  };

  CLI::App* scan = sub("scan", "Search random pairs for a counterexample to an open question");
  scan->add_option("target", scan_target, "logconcave-pair")->required()->check(CLI::IsMember({"logconcave-pair"}));
  handlers[scan] = [&] {
    const ScanReport r = scan_logconcave_pairs(g.cfg);
    if (g.json) {
      out << json{{"pairs", r.pairs}, {"seed", g.cfg.seed}, {"finds", r.finds}}.dump() << '\n';
    } else {
      out << "pairs: " << r.pairs << '\n' << "finds: " << r.finds.size() << '\n';
      for (const auto& s : r.finds) out << "  research result: " << s << '\n';
    }
    return exit_pass;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (g.json && g.pretty) {
    err << "error: --json and --pretty are mutually exclusive\n";
    return exit_usage;
  }

  try {
    for (auto& [s, handler] : handlers)
      if (s->parsed()) return handler();
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return exit_usage;
  } catch (const GeneratorExhausted& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::logic_error& e) {
    err << "error: internal invariant violated (implementation bug): " << e.what() << '\n';
    return exit_fail;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

} // namespace hadprod
