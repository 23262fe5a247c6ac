// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.

#include "cli.hpp"

#include "hadprod/analysis.hpp"
#include "hadprod/decomp.hpp"
#include "hadprod/ehrhart.hpp"
#include "hadprod/harness.hpp"
#include "hadprod/operators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hadprod;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  // Returns an empty string on success, otherwise the reason for failure.
  std::function<std::string()> body;
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

int cli_exit(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return run_cli(args, out, err);
}

TrialConfig suite_config(std::size_t trials, std::size_t max_degree) {
  TrialConfig cfg;
  cfg.seed = 1;
  cfg.trials = trials;
  cfg.max_degree = max_degree;
  return cfg;
}

std::string run_suites(const std::vector<Suite>& suites, std::size_t trials, std::size_t max_degree) {
  for (Suite s : suites) {
    const SuiteReport r = run_suite(s, suite_config(trials, max_degree));
    if (r.trials != trials) return suite_name(s) + ": ran " + std::to_string(r.trials) + " trials";
    if (!r.passed())
      return suite_name(s) + ": " + std::to_string(r.failures) + " failures, first: " +
             (r.messages.empty() ? "" : r.messages.front());
  }
  return "";
}

std::string nonunimodal_product() {
  const TaggedPoly out = hadamard({Poly{1, 0, 0, 1}, 6}, {Poly{1}, 3});
  if (out != TaggedPoly{Poly{1, 18, 45, 40, 45, 18, 1}, 9}) return "hadamard gave " + to_csv(out.poly);
  if (cli_exit({"check", "unimodal", "--poly", to_csv(out.poly)}) != 1) return "check unimodal did not exit 1";
  return "";
}

std::string gamma_of_ulc_sextic() {
  const Poly h{1, 8, 24, 36, 24, 8, 1};
  const Poly g = gamma_expand(h, 6);
  if (g != Poly{1, 2, 1, 2}) return "gamma_expand gave " + to_csv(g);
  if (!is_ulc(h, 6)) return "input not ULC(6)";
  return expect(!is_unimodal(g), "gamma-polynomial is unimodal");
}

std::string decomposition_of_cubic() {
  const Poly h{1, 3, 9, 1};
  const SymDecomp dec = i_decompose(h, 3);
  if (dec.a != Poly{1, 3, 3, 1} || dec.b != Poly{0, 6}) return "i_decompose gave a, b = " + to_csv(dec.a) + "; " + to_csv(dec.b);
  if (!is_real_rooted(dec.a) || !is_real_rooted(dec.b)) return "a or b not real-rooted";
  const TaggedPoly sq = hadamard({h, 3}, {h, 3});
  if (sq != TaggedPoly{Poly{1, 42, 639, 1836, 1239, 162, 1}, 6}) return "hadamard gave " + to_csv(sq.poly);
  if (is_real_rooted(sq.poly)) return "square is real-rooted";
  return expect(!decomposition_is_interlacing(i_decompose(sq.poly, 6)), "square's decomposition is interlacing");
}

std::string reeve_powers() {
  std::array<Rational, 3> prev{};
  for (std::size_t k = 1; k <= 8; ++k) {
    const Poly f = product_f(k);
    const std::array<Rational, 3> c{f.coeff(0), f.coeff(1), f.coeff(2)};
    const std::string at = " at k=" + std::to_string(k);
    if (c != closed_form(k)) return "closed form mismatch" + at;
    if (k > 1) {
      if (c[0] != prev[0]) return "recursion f0" + at;
      if (c[1] != 3 * prev[0] + 4 * prev[1]) return "recursion f1" + at;
      if (c[2] != 10 * prev[0] + 26 * prev[1] + 17 * prev[2]) return "recursion f2" + at;
    }
    if (!(c[1] * c[1] < c[0] * c[2])) return "f1^2 < f0 f2 fails" + at;
    if (is_log_concave(f)) return "product_f is log-concave" + at;
    if (is_real_rooted(h_from_f(f, 3 * k))) return "h* is real-rooted" + at;
    prev = c;
  }
  return "";
}

std::string gamma_implies_ulc() {
  const std::string r = run_suites({Suite::gamma_implies_ulc}, 200, 8);
  if (!r.empty()) return r;
  // the converse fails: h is ULC(6) while its gamma-polynomial is not unimodal
  const Poly h{1, 8, 24, 36, 24, 8, 1};
  return expect(is_ulc(h, 6) && !is_unimodal(gamma_expand(h, 6)), "negative control did not reproduce");
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hadamard product of (1+x^3, 6) and (1, 3) is exact and not unimodal", 1, nonunimodal_product},
      {2, "gamma-expansion of a ULC(6) sextic is 1+2x+x^2+2x^3 and not unimodal", 1, gamma_of_ulc_sextic},
      {3, "decomposition of 1+3x+9x^2+x^3 and of its Hadamard square", 1, decomposition_of_cubic},
      {4, "Reeve powers k=1..8: closed form, recursion, not log-concave, h* not real-rooted", 30, reeve_powers},
      {5, "real-rootedness preserved (200 trials, degree <= 8)", 60,
       [] { return run_suites({Suite::wagner}, 200, 8); }},
      {6, "ULC(d1+d2) preserved (200 trials, degree <= 8)", 60,
       [] { return run_suites({Suite::ulc_preservation}, 200, 8); }},
      {7, "symmetry, defect and gamma-positivity preserved (200 trials)", 60,
       [] { return run_suites({Suite::gamma_preservation}, 200, 8); }},
      {8, "nonnegative, gamma-positive and interlacing decompositions preserved (200 trials each)", 120,
       [] { return run_suites({Suite::symdec_nonneg, Suite::symdec_gamma, Suite::symdec_interlacing}, 200, 8); }},
      {9, "no internal zeros preserved (200 trials)", 30,
       [] { return run_suites({Suite::no_internal_zeros}, 200, 8); }},
      {10, "ULC gamma-polynomial implies ULC (200 trials) with negative control", 30, gamma_implies_ulc},
      {11, "ULC times log-concave is log-concave without internal zeros (200 trials)", 30,
       [] { return run_suites({Suite::mixed_logconcave}, 200, 8); }},
      {12, "direct, bullet and diamond routes agree (100 trials, degree <= 6)", 60,
       [] { return run_suites({Suite::cross_route}, 100, 6); }},
      {13, "round trips and involutions (500 instances each)", 30,
       [] { return run_suites({Suite::round_trips}, 500, 8); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.body();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && elapsed >= c.limit_seconds) reason = "time limit exceeded";
    const bool ok = reason.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2d  %s  [%.2f s, limit %.0f s]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                c.limit_seconds, ok ? "" : ": ", reason.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
