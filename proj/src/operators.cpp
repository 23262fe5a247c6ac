#include "hadprod/operators.hpp"

#include <string>

namespace hadprod {

namespace {

void require_tag(const Poly& p, std::size_t d, const char* op) {
  if (p.size() > d + 1)
    throw PreconditionError(std::string(op) + ": degree overflow (deg " + std::to_string(*p.degree()) +
                            " > " + std::to_string(d) + ")");
}

} // namespace

HomogRep homogenize(const Poly& h, std::size_t d) {
  require_tag(h, d, "homogenize");
  HomogRep rep;
  rep.degree = d;
  rep.coeffs.assign(d + 1, Rational(0));
  for (std::size_t i = 0; i < h.size(); ++i) rep.coeffs[i] = h.coeffs()[i];
  return rep;
}

TaggedPoly dehomogenize(const HomogRep& rep) { return {Poly(rep.coeffs), rep.degree}; }

Poly w_numerator(const Poly& p, std::size_t d) {
  require_tag(p, d, "w_numerator");
  std::vector<Rational> values(d + 1);
  for (std::size_t j = 0; j <= d; ++j) values[j] = evaluate(p, Rational(static_cast<long>(j)));
  // (1-x)^{d+1} truncated at degree d
  std::vector<Rational> kernel(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    kernel[k] = Rational(binomial(static_cast<long>(d + 1), static_cast<long>(k)));
    if (k % 2 == 1) kernel[k] = -kernel[k];
  }
  std::vector<Rational> h(d + 1);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t k = 0; k <= i; ++k) h[i] += kernel[k] * values[i - k];
  return Poly(std::move(h));
}

TaggedPoly w_transform(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("w_transform: zero input has no degree");
  const std::size_t d = *p.degree();
  return {w_numerator(p, d), d};
}

Poly w_inverse(const Poly& h, std::size_t d) {
  require_tag(h, d, "w_inverse");
  Poly p;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(h.coeffs()[i]) == 0) continue;
    p += binomial_poly(static_cast<long>(d - i), d) * h.coeffs()[i];
  }
  return p;
}

Poly subdivision(const Poly& p) {
  if (p.is_zero()) return p;
  const std::size_t n = *p.degree();
  std::vector<Rational> diff(n + 1);
  for (std::size_t j = 0; j <= n; ++j) diff[j] = evaluate(p, Rational(static_cast<long>(j)));
  // in-place forward differences: diff[j] becomes Delta^j p(0)
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t t = n; t >= j; --t) diff[t] -= diff[t - 1];
  return Poly(std::move(diff));
}

Poly f_from_h(const Poly& h, std::size_t d) {
  require_tag(h, d, "f_from_h");
  Poly f;
  Poly xpow = Poly::constant(1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (sgn(h.coeffs()[i]) != 0) f += xpow * Poly::linear_power(1, d - i) * h.coeffs()[i];
    xpow *= Poly::monomial(1, 1);
  }
  return f;
}

Poly h_from_f(const Poly& f, std::size_t d) {
  require_tag(f, d, "h_from_f");
  // h(t) = (1-t)^d f(t/(1-t)) = sum_j f_j t^j (1-t)^{d-j}
  Poly h;
  const Poly one_minus_t(std::vector<Rational>{1, -1});
  Poly tpow = Poly::constant(1);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (sgn(f.coeffs()[j]) != 0) h += tpow * pow(one_minus_t, d - j) * f.coeffs()[j];
    tpow *= Poly::monomial(1, 1);
  }
  return h;
}

HomogRep bullet_monomial(long k, long a, long l, long b) {
  if (a < 0 || b < 0 || k < 0 || k > a || l < 0 || l > b)
    throw PreconditionError("bullet_monomial: requires 0 <= k <= a and 0 <= l <= b");
  HomogRep rep;
  rep.degree = static_cast<std::size_t>(a + b);
  rep.coeffs.assign(rep.degree + 1, Rational(0));
  for (long i = 0; i <= a + b; ++i)
    rep.coeffs[static_cast<std::size_t>(i)] = Rational(binomial(a - k + l, i - k) * binomial(b - l + k, i - l));
  return rep;
}

HomogRep bullet(const HomogRep& p, const HomogRep& q) {
  HomogRep out;
  out.degree = p.degree + q.degree;
  out.coeffs.assign(out.degree + 1, Rational(0));
  const long a = static_cast<long>(p.degree), b = static_cast<long>(q.degree);
  for (long k = 0; k <= a; ++k) {
    const Rational& pk = p.coeffs[static_cast<std::size_t>(k)];
    if (sgn(pk) == 0) continue;
    for (long l = 0; l <= b; ++l) {
      const Rational& ql = q.coeffs[static_cast<std::size_t>(l)];
      if (sgn(ql) == 0) continue;
      const HomogRep mono = bullet_monomial(k, a, l, b);
      const Rational w = pk * ql;
      for (std::size_t i = 0; i <= out.degree; ++i) out.coeffs[i] += w * mono.coeffs[i];
    }
  }
  return out;
}

TaggedPoly hadamard(const TaggedPoly& h1, const TaggedPoly& h2, HadamardRoute route) {
  require_tag(h1.poly, h1.ref_degree, "hadamard (first factor)");
  require_tag(h2.poly, h2.ref_degree, "hadamard (second factor)");
  const std::size_t d = h1.ref_degree + h2.ref_degree;
  switch (route) {
  case HadamardRoute::direct: {
    const Poly p = w_inverse(h1.poly, h1.ref_degree) * w_inverse(h2.poly, h2.ref_degree);
    return {w_numerator(p, d), d};
  }
  case HadamardRoute::bullet:
    return dehomogenize(bullet(homogenize(h1.poly, h1.ref_degree), homogenize(h2.poly, h2.ref_degree)));
  case HadamardRoute::diamond: {
    const Poly f = diamond(f_from_h(h1.poly, h1.ref_degree), f_from_h(h2.poly, h2.ref_degree));
    return {h_from_f(f, d), d};
  }
  }
  throw PreconditionError("hadamard: unknown route");
}

Poly diamond(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const std::size_t top = std::min(*f.degree(), *g.degree());
  const Poly xx1 = Poly{0, 1, 1}; // x (x+1)
  Poly fj = f, gj = g;            // f^{(j)} / j!
  Poly weight = Poly::constant(1);
  Poly out;
  for (std::size_t j = 0; j <= top; ++j) {
    if (j > 0) {
      const Rational inv(1, static_cast<unsigned long>(j));
      fj = derivative(fj) * inv;
      gj = derivative(gj) * inv;
      weight *= xx1;
    }
    out += fj * gj * weight;
  }
  return out;
}

Poly diamond_power(const Poly& f, std::size_t k) {
  if (k == 0) throw PreconditionError("diamond_power: k must be at least 1");
  Poly acc = f;
  for (std::size_t i = 1; i < k; ++i) acc = diamond(acc, f);
  return acc;
}

bool is_magic_positive(const Poly& f, std::size_t d) { return all_nonnegative(h_from_f(f, d)); }

std::set<std::size_t> msupp(const Poly& f, std::size_t d) {
  const Poly h = h_from_f(f, d);
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const int s = sgn(h.coeffs()[i]);
    if (s < 0)
      throw PreconditionError("msupp: negative magic coefficient at index " + std::to_string(i) +
                              " (f is not magic positive)");
    if (s > 0) out.insert(i);
  }
  return out;
}

} // namespace hadprod
