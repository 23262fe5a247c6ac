#include "hadprod/generators.hpp"

#include "hadprod/analysis.hpp"
#include "hadprod/decomp.hpp"

#include <algorithm>
#include <string>

namespace hadprod {

namespace {

std::size_t resolve_tag(std::size_t degree, std::optional<std::size_t> tag, const char* name) {
  const std::size_t t = tag.value_or(degree);
  if (t < degree)
    throw PreconditionError(std::string(name) + ": tag " + std::to_string(t) + " below degree " +
                            std::to_string(degree));
  return t;
}

template <class Make, class Accept>
TaggedPoly with_rejection(const TrialConfig& cfg, const char* name, Make make, Accept accept) {
  for (std::size_t attempt = 0; attempt < rejection_budget; ++attempt) {
    TaggedPoly candidate = make();
    if (accept(candidate)) return candidate;
  }
  throw GeneratorExhausted(std::string(name) + ": rejection budget of " + std::to_string(rejection_budget) +
                           " attempts exhausted (seed " + std::to_string(cfg.seed) + ")");
}

Poly palindrome(SplitMix64& rng, const TrialConfig& cfg, std::size_t len) {
  std::vector<Rational> c(len);
  for (std::size_t i = 0; i < (len + 1) / 2; ++i) c[i] = c[len - 1 - i] = rng.nonneg_rational(cfg.max_coefficient);
  return Poly(std::move(c));
}

Poly random_gamma(SplitMix64& rng, const TrialConfig& cfg, std::size_t s) {
  std::vector<Rational> g(s / 2 + 1);
  for (auto& v : g) v = rng.nonneg_rational(cfg.max_coefficient);
  return Poly(std::move(g));
}

} // namespace

Poly real_rooted_from_roots(const std::vector<Rational>& roots, const Rational& scale) {
  Poly p = Poly::constant(scale);
  for (const auto& r : roots) p *= Poly::linear(r);
  return p;
}

TaggedPoly gen_real_rooted(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                           std::optional<std::size_t> tag) {
  const std::size_t d = resolve_tag(degree, tag, "gen_real_rooted");
  return with_rejection(
      cfg, "gen_real_rooted",
      [&] {
        std::vector<Rational> roots(degree);
        for (auto& r : roots) r = rng.nonneg_rational(cfg.max_coefficient);
        return TaggedPoly{real_rooted_from_roots(roots, rng.positive_rational(cfg.max_coefficient)), d};
      },
      [](const TaggedPoly& t) { return bool(is_real_rooted(t.poly)) && all_nonnegative(t.poly); });
}

TaggedPoly gen_ulc(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree, std::optional<std::size_t> tag) {
  const std::size_t d = resolve_tag(degree, tag, "gen_ulc");
  return with_rejection(
      cfg, "gen_ulc",
      [&] {
        TaggedPoly t = gen_real_rooted(rng, cfg, degree, d);
        if (degree < 2) return t;
        const std::size_t steps = rng.range(0, degree);
        for (std::size_t s = 0; s < steps; ++s) {
          std::vector<Rational> c = t.poly.coeffs();
          const std::size_t j = rng.range(1, degree - 1);
          c[j] *= rng.positive_rational(cfg.max_coefficient) / cfg.max_coefficient;
          Poly candidate(std::move(c));
          if (is_ulc(candidate, d)) t.poly = std::move(candidate);
        }
        return t;
      },
      [](const TaggedPoly& t) { return bool(is_ulc(t.poly, t.ref_degree)); });
}

TaggedPoly gen_symmetric(SplitMix64& rng, const TrialConfig& cfg, std::size_t s, std::size_t defect) {
  return with_rejection(
      cfg, "gen_symmetric", [&] { return TaggedPoly{gamma_contract(random_gamma(rng, cfg, s), s), s + defect}; },
      [s](const TaggedPoly& t) {
        if (t.poly.is_zero()) return false;
        const auto cert = symmetry_certificate(t.poly, t.ref_degree);
        return cert && cert->center_numerator == s;
      });
}

TaggedPoly gen_gamma_positive(SplitMix64& rng, const TrialConfig& cfg, std::size_t s) {
  return with_rejection(
      cfg, "gen_gamma_positive", [&] { return TaggedPoly{gamma_contract(random_gamma(rng, cfg, s), s), s}; },
      [s](const TaggedPoly& t) { return !t.poly.is_zero() && bool(is_gamma_positive(t.poly, s)); });
}

TaggedPoly gen_nonneg_symdec(SplitMix64& rng, const TrialConfig& cfg, std::size_t d) {
  return with_rejection(
      cfg, "gen_nonneg_symdec",
      [&] {
        const Poly a = palindrome(rng, cfg, d + 1);
        const Poly b = d > 0 ? palindrome(rng, cfg, d) : Poly{};
        return TaggedPoly{a + Poly::monomial(1, 1) * b, d};
      },
      [](const TaggedPoly& t) {
        return !t.poly.is_zero() && bool(decomposition_is_nonnegative(i_decompose(t.poly, t.ref_degree)));
      });
}

TaggedPoly gen_gamma_symdec(SplitMix64& rng, const TrialConfig& cfg, std::size_t d) {
  return with_rejection(
      cfg, "gen_gamma_symdec",
      [&] {
        const Poly a = gamma_contract(random_gamma(rng, cfg, d), d);
        const Poly b = d > 0 ? gamma_contract(random_gamma(rng, cfg, d - 1), d - 1) : Poly{};
        return TaggedPoly{a + Poly::monomial(1, 1) * b, d};
      },
      [](const TaggedPoly& t) {
        return !t.poly.is_zero() && bool(decomposition_is_gamma_positive(i_decompose(t.poly, t.ref_degree)));
      });
}

TaggedPoly gen_interlacing_symdec(SplitMix64& rng, const TrialConfig& cfg, std::size_t d) {
  return with_rejection(
      cfg, "gen_interlacing_symdec",
      [&] {
        // roots of a, each pair (-r, -1/r)
        std::vector<Rational> s;
        for (std::size_t i = 0; i < d / 2; ++i) {
          const Rational r = rng.positive_rational(cfg.max_coefficient);
          s.push_back(-r);
          s.push_back(Rational(-1 / r));
        }
        if (d % 2 == 1) s.push_back(-1);
        std::sort(s.begin(), s.end(), std::greater<>()); // s[0] = s_1 is the largest

        Poly a = Poly::constant(rng.positive_rational(cfg.max_coefficient));
        for (const auto& root : s) a *= Poly::linear(-root);

        Poly b;
        if (d > 0 && !rng.coin(8)) {
          // gap i (1-based) is [s_{i+1}, s_i]; inversion maps gap i onto gap d-i
          std::vector<Rational> t(d - 1);
          for (std::size_t i = 1; i <= d - 1; ++i) {
            if (i < d - i) {
              const Rational lo = s[i], hi = s[i - 1];
              t[i - 1] = lo + rng.unit_rational(cfg.max_coefficient) * (hi - lo);
              t[d - i - 1] = 1 / t[i - 1];
            } else if (i == d - i) {
              t[i - 1] = -1;
            }
          }
          b = Poly::constant(rng.positive_rational(cfg.max_coefficient));
          for (const auto& root : t) b *= Poly::linear(-root);
        }
        return TaggedPoly{a + Poly::monomial(1, 1) * b, d};
      },
      [](const TaggedPoly& t) {
        const SymDecomp dec = i_decompose(t.poly, t.ref_degree);
        return bool(decomposition_is_nonnegative(dec)) && bool(decomposition_is_interlacing(dec));
      });
}

TaggedPoly gen_logconcave(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                          std::optional<std::size_t> tag) {
  const std::size_t d = resolve_tag(degree, tag, "gen_logconcave");
  return with_rejection(
      cfg, "gen_logconcave",
      [&] {
        const std::size_t lo = rng.range(0, degree);
        std::vector<Rational> ratios(degree - lo);
        for (auto& r : ratios) r = rng.positive_rational(cfg.max_coefficient);
        std::sort(ratios.begin(), ratios.end(), std::greater<>());
        std::vector<Rational> c(degree + 1);
        c[lo] = rng.positive_rational(cfg.max_coefficient);
        for (std::size_t j = lo + 1; j <= degree; ++j) c[j] = c[j - 1] * ratios[j - lo - 1];
        return TaggedPoly{Poly(std::move(c)), d};
      },
      [](const TaggedPoly& t) { return bool(is_log_concave(t.poly)) && bool(has_internal_zeros(t.poly)); });
}

TaggedPoly gen_contiguous(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                          std::optional<std::size_t> tag) {
  const std::size_t d = resolve_tag(degree, tag, "gen_contiguous");
  return with_rejection(
      cfg, "gen_contiguous",
      [&] {
        const std::size_t lo = rng.range(0, degree);
        std::vector<Rational> c(degree + 1);
        for (std::size_t j = lo; j <= degree; ++j) c[j] = rng.positive_rational(cfg.max_coefficient);
        return TaggedPoly{Poly(std::move(c)), d};
      },
      [](const TaggedPoly& t) { return all_nonnegative(t.poly) && bool(has_internal_zeros(t.poly)); });
}

Poly gen_any(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = rng.signed_rational(cfg.max_coefficient);
  return Poly(std::move(c));
}

} // namespace hadprod
