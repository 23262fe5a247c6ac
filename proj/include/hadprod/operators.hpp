#ifndef HADPROD_OPERATORS_HPP
#define HADPROD_OPERATORS_HPP

#include "hadprod/poly.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace hadprod {

/// A polynomial paired with the degree d of the interpolating polynomial it
/// belongs to. For a numerator h this is the d in (1-x)^{d+1}; for an
/// f-polynomial it is the degree of the magic basis x^i (x+1)^{d-i}.
struct TaggedPoly {
  Poly poly;
  std::size_t ref_degree = 0;

  friend bool operator==(const TaggedPoly&, const TaggedPoly&) = default;
};

/// Homogeneous bivariate polynomial of degree `degree`; coeffs[i] is the
/// coefficient of x^i y^{degree-i}. Trailing zeros are kept.
struct HomogRep {
  std::vector<Rational> coeffs;
  std::size_t degree = 0;

  friend bool operator==(const HomogRep&, const HomogRep&) = default;
};

/// y^d h(x/y) for deg h <= d.
HomogRep homogenize(const Poly& h, std::size_t d);
/// Sets y = 1; the result is tagged with the homogeneous degree.
TaggedPoly dehomogenize(const HomogRep& rep);

/// Numerator of sum_{j>=0} p(j) x^j over (1-x)^{deg p + 1}. Throws on p = 0.
TaggedPoly w_transform(const Poly& p);

/// Same numerator taken against (1-x)^{d+1} for any d >= deg p. Zero maps to zero.
Poly w_numerator(const Poly& p, std::size_t d);

/// The interpolating polynomial sum_i h_i C(x + d - i, d).
Poly w_inverse(const Poly& h, std::size_t d);

/// Rewrites p in the basis C(x, j) and sends C(x, j) to x^j.
Poly subdivision(const Poly& p);

/// sum_i h_i x^i (x+1)^{d-i}.
Poly f_from_h(const Poly& h, std::size_t d);

/// Coordinates of f in the magic basis {x^i (x+1)^{d-i}}.
Poly h_from_f(const Poly& f, std::size_t d);

enum class HadamardRoute {
  direct,  ///< w_numerator(w_inverse(h1) * w_inverse(h2))
  bullet,  ///< bilinear extension of bullet_monomial on homogenizations
  diamond, ///< h_from_f(f_from_h(h1) <> f_from_h(h2))
};

/// Numerator of the Hadamard product of the two series, tagged d1 + d2.
/// The direct route is the production path; the other two are independent
/// cross-checks.
TaggedPoly hadamard(const TaggedPoly& h1, const TaggedPoly& h2,
                    HadamardRoute route = HadamardRoute::direct);

/// (x^k y^{a-k}) * (x^l y^{b-l}) under the bullet product: coefficient of
/// x^i y^{a+b-i} is C(a-k+l, i-k) C(b-l+k, i-l).
HomogRep bullet_monomial(long k, long a, long l, long b);

/// Bilinear extension of bullet_monomial.
HomogRep bullet(const HomogRep& p, const HomogRep& q);

/// sum_j f^{(j)} g^{(j)} / (j!)^2 x^j (x+1)^j.
Poly diamond(const Poly& f, const Poly& g);

/// f <> f <> ... <> f with k factors; k = 0 is rejected.
Poly diamond_power(const Poly& f, std::size_t k);

/// Indices of positive magic-basis coordinates of f. Throws when f is not
/// magic positive.
std::set<std::size_t> msupp(const Poly& f, std::size_t d);

/// True when all magic-basis coordinates of f at degree d are nonnegative.
bool is_magic_positive(const Poly& f, std::size_t d);

} // namespace hadprod

#endif
