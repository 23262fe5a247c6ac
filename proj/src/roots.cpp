#include "hadprod/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hadprod {

std::size_t RootIsolation::real_root_count() const {
  std::size_t n = 0;
  for (const auto& r : intervals) n += r.multiplicity;
  return n;
}

std::vector<RootInterval> RootIsolation::exact_roots() const {
  std::vector<RootInterval> out;
  std::copy_if(intervals.begin(), intervals.end(), std::back_inserter(out),
               [](const RootInterval& r) { return r.exact(); });
  return out;
}

SturmChain::SturmChain(const Poly& squarefree) {
  if (squarefree.is_zero()) throw PreconditionError("SturmChain: zero polynomial");
  chain_.push_back(squarefree);
  chain_.push_back(derivative(squarefree));
  while (!chain_.back().is_zero()) {
    Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    // positive rescaling keeps signs and tames coefficient growth
    if (!r.is_zero()) r = monic(r) * Rational(sgn(r.leading()) > 0 ? -1 : 1);
    chain_.push_back(std::move(r));
  }
  chain_.pop_back();
}

namespace {

std::size_t count_changes(const std::vector<int>& signs) {
  std::size_t n = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++n;
    prev = s;
  }
  return n;
}

} // namespace

std::size_t SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sgn(evaluate(p, x)));
  return count_changes(s);
}

std::size_t SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()));
  return count_changes(s);
}

std::size_t SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    int v = sgn(p.leading());
    if (*p.degree() % 2 == 1) v = -v;
    s.push_back(v);
  }
  return count_changes(s);
}

std::size_t SturmChain::count_in(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations_at(lo) - variations_at(hi);
}

std::size_t SturmChain::count_real() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

Rational cauchy_bound(const Poly& p) {
  if (p.size() < 2) throw PreconditionError("cauchy_bound: needs a nonconstant polynomial");
  Rational m = 0;
  const Rational& lead = p.leading();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / lead)));
  return 1 + m;
}

std::size_t sign_variations(const std::vector<Rational>& coeffs) {
  std::vector<int> s;
  s.reserve(coeffs.size());
  for (const auto& c : coeffs) s.push_back(sgn(c));
  return count_changes(s);
}

std::size_t descartes_bound(const Poly& p, const Rational& lo, const Rational& hi) {
  // q(x) = p(lo + (hi - lo) x) maps (0,1) onto (lo, hi)
  const Poly q = compose(p, Poly(std::vector<Rational>{lo, hi - lo}));
  // (1+y)^n q(1/(1+y)) maps (0, inf) onto (0, 1)
  std::vector<Rational> rev(q.coeffs().rbegin(), q.coeffs().rend());
  return sign_variations(taylor_shift(Poly(std::move(rev)), 1).coeffs());
}

std::size_t count_distinct_real_roots(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("count_distinct_real_roots: zero polynomial");
  if (p.size() == 1) return 0;
  return SturmChain(square_free_part(p)).count_real();
}

namespace {

/// Leading coefficient of the primitive integer polynomial proportional to q.
Integer primitive_leading(const Poly& q) {
  Integer den_lcm = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : q.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  Integer lead = q.leading().get_num() * (den_lcm / q.leading().get_den()) / content;
  return abs(lead);
}

} // namespace

namespace {

// Smallest power of two that is at least x (x > 0).
Rational dyadic_ceiling(const Rational& x) {
  Rational b = 1;
  while (b < x) b *= 2;
  return b;
}

} // namespace

std::vector<Poly> multiplicity_layers(const Poly& p) {
  if (p.size() < 2) throw PreconditionError("multiplicity_layers: zero or constant input");
  std::vector<Poly> layers;
  Poly g = p;
  while (g.size() >= 2) {
    Poly h = gcd(g, derivative(g));
    layers.push_back(monic(*divide_exact(g, h)));
    g = std::move(h);
  }
  return layers;
}

RootIsolation isolate_squarefree_roots(const Poly& q) {
  if (q.size() < 2) throw PreconditionError("isolate_squarefree_roots: zero or constant input");
  // dyadic endpoints keep the evaluations cheap
  const Rational bound = dyadic_ceiling(cauchy_bound(q));

  struct Open {
    Rational lo, hi;
  };
  std::vector<RootInterval> found;
  std::vector<Open> work{{-bound, bound}};
  while (!work.empty()) {
    Open cur = work.back();
    work.pop_back();
    const std::size_t v = descartes_bound(q, cur.lo, cur.hi);
    if (v == 0) continue;
    if (v == 1) {
      found.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    // split at a non-root so no endpoint is ever a root; a root hit here is
    // recovered exactly by the refinement below
    Rational mid = (cur.lo + cur.hi) / 2;
    for (long k = 3; sgn(evaluate(q, mid)) == 0; ++k) mid = cur.lo + (cur.hi - cur.lo) / k;
    work.push_back({mid, cur.hi});
    work.push_back({cur.lo, mid});
  }

  // Shrink each open interval below 1/L, L the leading coefficient of the
  // primitive integer form of q. Rational roots of q have the form n/L, so at
  // most one candidate survives and is tested exactly.
  const Rational step(Integer(1), primitive_leading(q));
  for (auto& r : found) {
    if (r.exact()) continue;
    const int lo_sign = sgn(evaluate(q, r.lo));
    while (r.hi - r.lo >= step) {
      Rational mid = (r.lo + r.hi) / 2;
      const int s = sgn(evaluate(q, mid));
      if (s == 0) {
        r.lo = r.hi = mid;
        break;
      }
      if (s == lo_sign)
        r.lo = mid;
      else
        r.hi = mid;
    }
    if (r.exact()) continue;
    Integer n;
    Rational scaled = r.lo / step;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational cand = Rational(n + 1) * step;
    if (cand < r.hi && sgn(evaluate(q, cand)) == 0) r.lo = r.hi = cand;
  }

  std::sort(found.begin(), found.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return {std::move(found)};
}

RootIsolation isolate_roots(const Poly& p) {
  if (p.size() < 2) throw PreconditionError("isolate_roots: zero or constant input");
  const std::vector<Poly> layers = multiplicity_layers(p);
  RootIsolation iso = isolate_squarefree_roots(layers.front());
  for (auto& r : iso.intervals) r.multiplicity = root_multiplicity(layers, r);
  return iso;
}

std::size_t root_multiplicity(const std::vector<Poly>& layers, const RootInterval& root) {
  // roots of layer k + 1 are roots of layer k, each layer squarefree
  std::size_t m = 0;
  for (const auto& s : layers) {
    const bool is_root = root.exact() ? sgn(evaluate(s, root.lo)) == 0
                                      : sgn(evaluate(s, root.lo)) * sgn(evaluate(s, root.hi)) < 0;
    if (!is_root) break;
    ++m;
  }
  return m;
}

} // namespace hadprod
