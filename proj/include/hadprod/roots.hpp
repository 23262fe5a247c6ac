#ifndef HADPROD_ROOTS_HPP
#define HADPROD_ROOTS_HPP

#include "hadprod/poly.hpp"

#include <cstddef>
#include <vector>

namespace hadprod {

/// One distinct real root. When lo == hi the root is exactly lo; otherwise
/// it is the only root of the squarefree part inside the open interval (lo, hi)
/// and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::size_t multiplicity = 1;

  bool exact() const { return lo == hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Disjoint isolating intervals sorted ascending.
struct RootIsolation {
  std::vector<RootInterval> intervals;

  /// Real roots counted with multiplicity.
  std::size_t real_root_count() const;
  /// Rational roots found exactly, with multiplicity.
  std::vector<RootInterval> exact_roots() const;
};

/// Sturm sequence of a squarefree polynomial.
class SturmChain {
public:
  explicit SturmChain(const Poly& squarefree);

  std::size_t variations_at(const Rational& x) const;
  std::size_t variations_at_neg_infinity() const;
  std::size_t variations_at_pos_infinity() const;

  /// Distinct real roots in the half-open interval (lo, hi].
  std::size_t count_in(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots on the whole line.
  std::size_t count_real() const;

  const std::vector<Poly>& sequence() const { return chain_; }

private:
  std::vector<Poly> chain_;
};

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Poly& p);

/// Sign variations of the coefficient sequence, zeros skipped.
std::size_t sign_variations(const std::vector<Rational>& coeffs);

/// Descartes bound for the number of roots of p in the open interval (lo, hi).
std::size_t descartes_bound(const Poly& p, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of a nonzero polynomial.
std::size_t count_distinct_real_roots(const Poly& p);

/// Squarefree parts of p, gcd(p, p'), gcd of that with its derivative, ...;
/// layer k (0-based) is monic and vanishes exactly at the roots of p of
/// multiplicity greater than k. Throws PreconditionError on constant input.
std::vector<Poly> multiplicity_layers(const Poly& p);

/// Isolates every real root of a squarefree q by Descartes bisection from
/// the Cauchy bound. Rational roots are reported exactly; multiplicities are 1.
RootIsolation isolate_squarefree_roots(const Poly& q);

/// Isolates every real root of p with its multiplicity. Throws
/// PreconditionError on zero or constant input.
RootIsolation isolate_roots(const Poly& p);

/// Multiplicity of the root isolated by `root` in the polynomial whose
/// multiplicity_layers are `layers` (0 when it is not a root). `root` must
/// isolate a single root of a squarefree multiple of layers.front().
std::size_t root_multiplicity(const std::vector<Poly>& layers, const RootInterval& root);

} // namespace hadprod

#endif
