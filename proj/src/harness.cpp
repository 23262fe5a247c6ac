#include "hadprod/harness.hpp"

#include "hadprod/analysis.hpp"
#include "hadprod/decomp.hpp"
#include "hadprod/ehrhart.hpp"
#include "hadprod/generators.hpp"
#include "hadprod/operators.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace hadprod {

namespace {

constexpr std::size_t kept_messages = 5;

struct Named {
  Suite suite;
  const char* name;
};

constexpr Named suite_names[] = {
    {Suite::wagner, "wagner"},
    {Suite::ulc_preservation, "ulc-preservation"},
    {Suite::gamma_preservation, "gamma-preservation"},
    {Suite::symdec_nonneg, "symdec-nonneg"},
    {Suite::symdec_gamma, "symdec-gamma"},
    {Suite::symdec_interlacing, "symdec-interlacing"},
    {Suite::no_internal_zeros, "no-internal-zeros"},
    {Suite::gamma_implies_ulc, "gamma-implies-ulc"},
    {Suite::mixed_logconcave, "mixed-logconcave"},
    {Suite::reeve, "reeve"},
    {Suite::cross_route, "cross-route"},
    {Suite::round_trips, "round-trips"},
};

using Trial = std::function<std::optional<std::string>(SplitMix64&, const TrialConfig&)>;

std::string show(const TaggedPoly& t) { return "(" + to_csv(t.poly) + "; d=" + std::to_string(t.ref_degree) + ")"; }

std::string pair_context(const TaggedPoly& a, const TaggedPoly& b) { return show(a) + " * " + show(b); }

// Degree of a random numerator and a tag at least that large, both capped.
std::pair<std::size_t, std::size_t> degree_and_tag(SplitMix64& rng, std::size_t cap) {
  const std::size_t deg = rng.range(0, cap);
  return {deg, rng.range(deg, cap)};
}

std::optional<std::string> hypothesis_failure(const std::string& what, const TaggedPoly& t) {
  return "generator produced an input outside the hypothesis (" + what + "): " + show(t);
}

std::optional<std::string> trial_wagner(SplitMix64& rng, const TrialConfig& cfg) {
  TaggedPoly in[2];
  for (auto& t : in) {
    auto [deg, tag] = degree_and_tag(rng, cfg.max_degree);
    t = gen_real_rooted(rng, cfg, deg, tag);
    if (!is_real_rooted(t.poly) || !all_nonnegative(t.poly)) return hypothesis_failure("real-rooted", t);
  }
  const TaggedPoly out = hadamard(in[0], in[1]);
  const auto r = is_real_rooted(out.poly);
  if (!r) return "output not real-rooted (" + r.detail + ") for " + pair_context(in[0], in[1]);
  return std::nullopt;
}

std::optional<std::string> trial_ulc(SplitMix64& rng, const TrialConfig& cfg) {
  TaggedPoly in[2];
  for (auto& t : in) {
    const std::size_t deg = rng.range(0, cfg.max_degree);
    t = gen_ulc(rng, cfg, deg, deg);
    if (!is_ulc(t.poly, t.ref_degree)) return hypothesis_failure("ULC", t);
  }
  const TaggedPoly out = hadamard(in[0], in[1]);
  const auto r = is_ulc(out.poly, out.ref_degree);
  if (!r) return "output not in ULC(d1+d2) (" + r.detail + ") for " + pair_context(in[0], in[1]);
  return std::nullopt;
}

std::optional<std::string> trial_gamma(SplitMix64& rng, const TrialConfig& cfg) {
  const std::size_t defect = rng.range(0, cfg.max_degree);
  TaggedPoly in[2];
  std::size_t centers[2];
  for (int i = 0; i < 2; ++i) {
    centers[i] = rng.range(0, cfg.max_degree - defect);
    in[i] = gen_symmetric(rng, cfg, centers[i], defect);
    const auto cert = symmetry_certificate(in[i].poly, in[i].ref_degree);
    if (!cert || cert->center_numerator != centers[i] || cert->defect != defect ||
        !is_gamma_positive(in[i].poly, centers[i]))
      return hypothesis_failure("symmetric, gamma-positive, defect " + std::to_string(defect), in[i]);
  }
  const TaggedPoly out = hadamard(in[0], in[1]);
  const std::size_t s = out.ref_degree - defect;
  const auto cert = symmetry_certificate(out.poly, out.ref_degree);
  if (!cert || cert->center_numerator != s)
    return "output not symmetric about " + std::to_string(s) + "/2 for " + pair_context(in[0], in[1]);
  if (cert->defect != defect) return "output defect differs from " + std::to_string(defect);
  const auto r = is_gamma_positive(out.poly, s);
  if (!r) return "output not gamma-positive (" + r.detail + ") for " + pair_context(in[0], in[1]);
  return std::nullopt;
}

template <class Gen, class Check>
std::optional<std::string> trial_symdec(SplitMix64& rng, const TrialConfig& cfg, Gen gen, Check check,
                                        const char* what) {
  TaggedPoly in[2];
  for (auto& t : in) {
    t = gen(rng, cfg, rng.range(0, cfg.max_degree));
    if (!check(i_decompose(t.poly, t.ref_degree))) return hypothesis_failure(what, t);
  }
  const TaggedPoly out = hadamard(in[0], in[1]);
  const SymDecomp dec = i_decompose(out.poly, out.ref_degree);
  if (!check(dec))
    return std::string("output decomposition is not ") + what + " for " + pair_context(in[0], in[1]);
  return std::nullopt;
}

std::optional<std::string> trial_symdec_nonneg(SplitMix64& rng, const TrialConfig& cfg) {
  return trial_symdec(
      rng, cfg, gen_nonneg_symdec, [](const SymDecomp& d) { return bool(decomposition_is_nonnegative(d)); },
      "nonnegative");
}

std::optional<std::string> trial_symdec_gamma(SplitMix64& rng, const TrialConfig& cfg) {
  return trial_symdec(
      rng, cfg, gen_gamma_symdec, [](const SymDecomp& d) { return bool(decomposition_is_gamma_positive(d)); },
      "gamma-positive");
}

std::optional<std::string> trial_symdec_interlacing(SplitMix64& rng, const TrialConfig& cfg) {
  return trial_symdec(
      rng, cfg, gen_interlacing_symdec,
      [](const SymDecomp& d) {
        return bool(decomposition_is_nonnegative(d)) && bool(decomposition_is_interlacing(d));
      },
      "nonnegative and interlacing");
}

std::optional<std::string> trial_no_internal_zeros(SplitMix64& rng, const TrialConfig& cfg) {
  TaggedPoly in[2];
  for (auto& t : in) {
    auto [deg, tag] = degree_and_tag(rng, cfg.max_degree);
    t = gen_contiguous(rng, cfg, deg, tag);
    if (!all_nonnegative(t.poly) || !has_internal_zeros(t.poly)) return hypothesis_failure("contiguous", t);
  }
  const TaggedPoly out = hadamard(in[0], in[1]);
  const auto r = has_internal_zeros(out.poly);
  if (!r) return "output has internal zeros (" + r.detail + ") for " + pair_context(in[0], in[1]);
  return std::nullopt;
}

std::optional<std::string> trial_gamma_implies_ulc(SplitMix64& rng, const TrialConfig& cfg) {
  const std::size_t s = rng.range(0, cfg.max_degree);
  const std::size_t half = s / 2;
  const TaggedPoly gamma = gen_ulc(rng, cfg, rng.range(0, half), half);
  if (!is_ulc(gamma.poly, half)) return hypothesis_failure("gamma in ULC(floor(s/2))", gamma);
  const Poly h = gamma_contract(gamma.poly, s);
  const auto r = is_ulc(h, s);
  if (!r) return "h = " + to_csv(h) + " not in ULC(" + std::to_string(s) + "): " + r.detail;
  return std::nullopt;
}

std::optional<std::string> trial_mixed(SplitMix64& rng, const TrialConfig& cfg) {
  const std::size_t d1 = rng.range(0, cfg.max_degree);
  const TaggedPoly p = gen_ulc(rng, cfg, d1, d1);
  if (!is_ulc(p.poly, d1)) return hypothesis_failure("ULC(deg p)", p);
  auto [deg, tag] = degree_and_tag(rng, cfg.max_degree);
  const TaggedPoly q = gen_logconcave(rng, cfg, deg, tag);
  if (!is_log_concave(q.poly) || !has_internal_zeros(q.poly))
    return hypothesis_failure("log-concave, no internal zeros", q);
  const TaggedPoly out = hadamard(p, q);
  const auto lc = is_log_concave(out.poly);
  if (!lc) return "output not log-concave (" + lc.detail + ") for " + pair_context(p, q);
  const auto nz = has_internal_zeros(out.poly);
  if (!nz) return "output has internal zeros (" + nz.detail + ") for " + pair_context(p, q);
  return std::nullopt;
}

std::optional<std::string> trial_cross_route(SplitMix64& rng, const TrialConfig& cfg) {
  const std::size_t cap = std::min<std::size_t>(cfg.max_degree, 6);
  TaggedPoly in[2];
  for (auto& t : in) {
    auto [deg, tag] = degree_and_tag(rng, cap);
    t = {gen_any(rng, cfg, deg), tag};
  }
  const TaggedPoly a = hadamard(in[0], in[1], HadamardRoute::direct);
  const TaggedPoly b = hadamard(in[0], in[1], HadamardRoute::bullet);
  const TaggedPoly c = hadamard(in[0], in[1], HadamardRoute::diamond);
  if (a != b) return "direct and bullet routes disagree for " + pair_context(in[0], in[1]);
  if (a != c) return "direct and diamond routes disagree for " + pair_context(in[0], in[1]);
  return std::nullopt;
}

std::optional<std::string> trial_round_trips(SplitMix64& rng, const TrialConfig& cfg) {
  auto [deg, d] = degree_and_tag(rng, cfg.max_degree);
  const Poly h = gen_any(rng, cfg, deg);
  const std::string ctx = " for " + show(TaggedPoly{h, d});

  const Poly p = w_inverse(h, d);
  if (w_numerator(p, d) != h) return "w_numerator(w_inverse(h, d), d) != h" + ctx;
  if (!p.is_zero() && p.degree() == d && w_transform(p) != TaggedPoly{h, d})
    return "w_transform(w_inverse(h, d)) != (h, d)" + ctx;
  const Poly f = f_from_h(h, d);
  if (h_from_f(f, d) != h) return "h_from_f(f_from_h(h, d), d) != h" + ctx;
  if (subdivision(p) != f) return "subdivision(w_inverse(h, d)) != f_from_h(h, d)" + ctx;
  if (reverse(reverse(h, d), d) != h) return "reverse is not an involution" + ctx;
  if (reflect(reflect(f, d), d) != f) return "reflect is not an involution" + ctx;
  if (h_from_f(reflect(f, d), d) != reverse(h, d)) return "reflect does not swap magic coordinates" + ctx;

  const std::size_t s = d;
  const Poly g = gen_any(rng, cfg, s / 2);
  const Poly sym = gamma_contract(g, s);
  if (gamma_expand(sym, s) != g) return "gamma_expand(gamma_contract(g, s), s) != g for g=" + to_csv(g);
  if (!sym.is_zero() && reverse(sym, s) != sym) return "gamma_contract output not symmetric";
  return std::nullopt;
}

Trial trial_for(Suite s) {
  switch (s) {
  case Suite::wagner: return trial_wagner;
  case Suite::ulc_preservation: return trial_ulc;
  case Suite::gamma_preservation: return trial_gamma;
  case Suite::symdec_nonneg: return trial_symdec_nonneg;
  case Suite::symdec_gamma: return trial_symdec_gamma;
  case Suite::symdec_interlacing: return trial_symdec_interlacing;
  case Suite::no_internal_zeros: return trial_no_internal_zeros;
  case Suite::gamma_implies_ulc: return trial_gamma_implies_ulc;
  case Suite::mixed_logconcave: return trial_mixed;
  case Suite::cross_route: return trial_cross_route;
  case Suite::round_trips: return trial_round_trips;
  case Suite::reeve: break;
  }
  return {};
}

} // namespace

std::string suite_name(Suite s) {
  for (const auto& n : suite_names)
    if (n.suite == s) return n.name;
  return "unknown";
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (const auto& n : suite_names)
    if (name == n.name) return n.suite;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> v;
    for (const auto& n : suite_names) v.push_back(n.suite);
    return v;
  }();
  return suites;
}

SuiteReport run_suite(Suite suite, const TrialConfig& cfg, std::size_t k_max) {
  if (cfg.max_coefficient == 0) throw PreconditionError("max_coefficient must be positive");
  SuiteReport report;
  report.name = suite_name(suite);

  if (suite == Suite::reeve) {
    report.expect_violation = true;
    report.trials = k_max;
    const PropertyReport r = counterexample_report(k_max);
    if (!r) {
      report.failures = 1;
      report.messages.push_back(r.detail);
    }
    return report;
  }

  if (cfg.trials == 0) throw PreconditionError("trials must be positive");
  if (cfg.max_degree == 0) throw PreconditionError("max_degree must be positive");
  const Trial trial = trial_for(suite);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(cfg.seed, i);
    ++report.trials;
    if (auto msg = trial(rng, cfg)) {
      ++report.failures;
      if (report.messages.size() < kept_messages) report.messages.push_back("trial " + std::to_string(i) + ": " + *msg);
    }
  }
  return report;
}

ScanReport scan_logconcave_pairs(const TrialConfig& cfg) {
  if (cfg.trials == 0) throw PreconditionError("trials must be positive");
  ScanReport report;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(cfg.seed, i);
    TaggedPoly in[2];
    for (auto& t : in) {
      auto [deg, tag] = degree_and_tag(rng, cfg.max_degree);
      t = gen_logconcave(rng, cfg, deg, tag);
    }
    ++report.pairs;
    const TaggedPoly out = hadamard(in[0], in[1]);
    const auto lc = is_log_concave(out.poly);
    const auto nz = has_internal_zeros(out.poly);
    if (!lc || !nz)
      report.finds.push_back("pair " + std::to_string(i) + ": " + pair_context(in[0], in[1]) + " -> " +
                             show(out) + " (" + (!lc ? lc.detail : nz.detail) + ")");
  }
  return report;
}

} // namespace hadprod
