#include "hadprod/analysis.hpp"

#include <sstream>

namespace hadprod {

namespace {

void require_nonnegative(const Poly& h, const char* op) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(h.coeffs()[i]) < 0)
      throw PreconditionError(std::string(op) + ": negative coefficient at index " + std::to_string(i));
}

long long as_ll(std::size_t v) { return static_cast<long long>(v); }

// Distinct real roots of a * b, ascending, for nonconstant a and b.
std::vector<RootInterval> merged_roots(const std::vector<Poly>& la, const std::vector<Poly>& lb) {
  const Poly& sa = la.front();
  const Poly& sb = lb.front();
  const Poly lcm = sa * *divide_exact(sb, gcd(sa, sb));
  return isolate_squarefree_roots(lcm).intervals;
}

// Descending root list of the polynomial with the given layers, as indices
// into the merged roots, with multiplicity.
std::vector<std::size_t> descending_root_indices(const std::vector<Poly>& layers,
                                                 const std::vector<RootInterval>& merged) {
  std::vector<std::size_t> out;
  for (std::size_t i = merged.size(); i-- > 0;) {
    const std::size_t mult = root_multiplicity(layers, merged[i]);
    for (std::size_t t = 0; t < mult; ++t) out.push_back(i);
  }
  return out;
}

} // namespace

PropertyReport check_nonnegative(const Poly& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(h.coeffs()[i]) < 0)
      return PropertyReport::fail("nonnegative", {as_ll(i)},
                                  "coefficient " + std::to_string(i) + " is " + h.coeffs()[i].get_str());
  return PropertyReport::pass("nonnegative");
}

PropertyReport has_internal_zeros(const Poly& h) {
  require_nonnegative(h, "has_internal_zeros");
  const char* name = "no internal zeros";
  std::optional<std::size_t> first, zero_after;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const bool nz = sgn(h.coeffs()[i]) != 0;
    if (nz && !first) {
      first = i;
    } else if (!nz && first && !zero_after) {
      zero_after = i;
    } else if (nz && zero_after) {
      // h.coeffs()[*zero_after - 1] is the last nonzero before the gap
      const std::size_t i0 = *zero_after - 1;
      return PropertyReport::fail(name, {as_ll(i0), as_ll(*zero_after), as_ll(i)},
                                  "a_" + std::to_string(i0) + ", a_" + std::to_string(i) + " > 0 but a_" +
                                      std::to_string(*zero_after) + " = 0");
    }
  }
  return PropertyReport::pass(name);
}

PropertyReport is_log_concave(const Poly& h) {
  require_nonnegative(h, "is_log_concave");
  const auto& a = h.coeffs();
  for (std::size_t j = 1; j + 1 < a.size(); ++j) {
    const Rational lhs = a[j] * a[j];
    const Rational rhs = a[j - 1] * a[j + 1];
    if (lhs < rhs)
      return PropertyReport::fail("log-concave", {as_ll(j)},
                                  "j=" + std::to_string(j) + ": a_j^2 = " + lhs.get_str() +
                                      " < a_{j-1} a_{j+1} = " + rhs.get_str());
  }
  return PropertyReport::pass("log-concave");
}

PropertyReport is_unimodal(const Poly& h) {
  require_nonnegative(h, "is_unimodal");
  const auto& a = h.coeffs();
  std::optional<std::size_t> descent;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    if (!descent && a[j] > a[j + 1]) descent = j;
    if (descent && a[j] < a[j + 1])
      return PropertyReport::fail("unimodal", {as_ll(*descent), as_ll(j)},
                                  "descent a_" + std::to_string(*descent) + " > a_" + std::to_string(*descent + 1) +
                                      " then ascent a_" + std::to_string(j) + " < a_" + std::to_string(j + 1));
  }
  return PropertyReport::pass("unimodal");
}

PropertyReport is_ulc(const Poly& h, std::size_t m) {
  if (h.size() > m + 1)
    throw PreconditionError("is_ulc: order " + std::to_string(m) + " is below the degree " +
                            std::to_string(*h.degree()));
  require_nonnegative(h, "is_ulc");
  const std::string name = "ULC(" + std::to_string(m) + ")";
  PropertyReport gaps = has_internal_zeros(h);
  if (!gaps) return PropertyReport::fail(name, gaps.witness, "internal zeros: " + gaps.detail);
  std::vector<Rational> b(m + 1);
  for (std::size_t j = 0; j <= m; ++j)
    b[j] = h.coeff(j) / Rational(binomial(static_cast<long>(m), static_cast<long>(j)));
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    const Rational lhs = b[j] * b[j];
    const Rational rhs = b[j - 1] * b[j + 1];
    if (lhs < rhs)
      return PropertyReport::fail(name, {as_ll(j)},
                                  "j=" + std::to_string(j) + ": (a_j/C(m,j))^2 = " + lhs.get_str() + " < " +
                                      rhs.get_str());
  }
  return PropertyReport::pass(name);
}

PropertyReport is_real_rooted(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("is_real_rooted: zero polynomial");
  if (p.size() == 1) return PropertyReport::pass("real-rooted");
  const Poly q = square_free_part(p);
  const std::size_t n = *q.degree();
  const std::size_t real = SturmChain(q).count_real();
  if (real == n) return PropertyReport::pass("real-rooted");
  return PropertyReport::fail("real-rooted", {as_ll(real), as_ll(n)},
                              std::to_string(real) + " distinct real roots, squarefree degree " + std::to_string(n));
}

PropertyReport interlaces(const Poly& b, const Poly& a) {
  const char* name = "interlacing";
  if (b.is_zero() || a.is_zero()) return PropertyReport::pass(name);
  if (!is_real_rooted(a)) throw PreconditionError("interlaces: a is not real-rooted");
  if (!is_real_rooted(b)) throw PreconditionError("interlaces: b is not real-rooted");
  const std::size_t k = *a.degree(), m = *b.degree();
  if (!(m == k || m + 1 == k))
    return PropertyReport::fail(name, {as_ll(m), as_ll(k)},
                                "deg b = " + std::to_string(m) + " must be deg a or deg a - 1 (deg a = " +
                                    std::to_string(k) + ")");
  if (m == 0) return PropertyReport::pass(name); // constant b against linear a
  const auto la = multiplicity_layers(a), lb = multiplicity_layers(b);
  const auto merged = merged_roots(la, lb);
  const auto s = descending_root_indices(la, merged);
  const auto t = descending_root_indices(lb, merged);
  // 0-based: need t[i] <= s[i] and s[i+1] <= t[i]
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > s[i])
      return PropertyReport::fail(name, {as_ll(i + 1)},
                                  "t_" + std::to_string(i + 1) + " > s_" + std::to_string(i + 1));
    if (i + 1 < s.size() && s[i + 1] > t[i])
      return PropertyReport::fail(name, {as_ll(i + 2)},
                                  "s_" + std::to_string(i + 2) + " > t_" + std::to_string(i + 1));
  }
  return PropertyReport::pass(name);
}

std::optional<SymmetryCertificate> symmetry_certificate(const Poly& h, std::optional<std::size_t> ref_degree) {
  if (h.is_zero()) throw PreconditionError("symmetry_certificate: zero polynomial");
  std::size_t lo = 0;
  while (sgn(h.coeffs()[lo]) == 0) ++lo;
  const std::size_t s = lo + *h.degree();
  if (reverse(h, s) != h) return std::nullopt;
  SymmetryCertificate cert{s, std::nullopt};
  if (ref_degree && *ref_degree >= s) cert.defect = *ref_degree - s;
  return cert;
}

PropertyReport check_functional_eq(const Poly& p, std::size_t s) {
  if (p.is_zero()) throw PreconditionError("check_functional_eq: zero polynomial");
  const std::size_t d = *p.degree();
  if (s > d) throw PreconditionError("check_functional_eq: requires s <= deg p");
  // x -> -(x + d + 1 - s)
  const Rational shift(static_cast<long>(d + 1) - static_cast<long>(s));
  Poly lhs = compose(p, Poly(std::vector<Rational>{-shift, Rational(-1)}));
  if (d % 2 == 1) lhs = -lhs;
  if (lhs == p) return PropertyReport::pass("functional equation");
  return PropertyReport::fail("functional equation", {as_ll(s)},
                              "(-1)^d p(-(x+d+1-s)) != p(x) for s=" + std::to_string(s));
}

namespace {

void require_symmetric(const Poly& h, std::size_t s, const char* op) {
  if (h.size() > s + 1 || reverse(h, s) != h)
    throw PreconditionError(std::string(op) + ": asymmetric input (reverse(h, " + std::to_string(s) + ") != h)");
}

} // namespace

Poly gamma_expand(const Poly& h, std::size_t s) {
  require_symmetric(h, s, "gamma_expand");
  Poly rem = h;
  std::vector<Rational> gamma(s / 2 + 1);
  for (std::size_t i = 0; i <= s / 2; ++i) {
    gamma[i] = rem.coeff(i);
    if (sgn(gamma[i]) != 0) rem -= Poly::monomial(gamma[i], i) * Poly::linear_power(1, s - 2 * i);
  }
  if (!rem.is_zero()) throw std::logic_error("gamma_expand: nonzero remainder for a symmetric input");
  return Poly(std::move(gamma));
}

Poly gamma_contract(const Poly& g, std::size_t s) {
  if (g.size() > s / 2 + 1)
    throw PreconditionError("gamma_contract: degree overflow (deg g > floor(s/2))");
  Poly h;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (sgn(g.coeffs()[i]) != 0) h += Poly::monomial(g.coeffs()[i], i) * Poly::linear_power(1, s - 2 * i);
  return h;
}

PropertyReport is_gamma_positive(const Poly& h, std::size_t s) {
  const Poly g = gamma_expand(h, s);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (sgn(g.coeffs()[i]) < 0)
      return PropertyReport::fail("gamma-positive", {as_ll(i)},
                                  "gamma_" + std::to_string(i) + " = " + g.coeffs()[i].get_str());
  return PropertyReport::pass("gamma-positive");
}

} // namespace hadprod
