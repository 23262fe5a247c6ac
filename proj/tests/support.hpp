#ifndef HADPROD_TESTS_SUPPORT_HPP
#define HADPROD_TESTS_SUPPORT_HPP

#include "hadprod/operators.hpp"
#include "hadprod/poly.hpp"

#include "doctest.h"

#include <string>
#include <vector>

namespace doctest {

template <>
struct StringMaker<hadprod::Poly> {
  static String convert(const hadprod::Poly& p) { return ("[" + hadprod::to_csv(p) + "]").c_str(); }
};

template <>
struct StringMaker<hadprod::TaggedPoly> {
  static String convert(const hadprod::TaggedPoly& t) {
    return ("[" + hadprod::to_csv(t.poly) + "; d=" + std::to_string(t.ref_degree) + "]").c_str();
  }
};

template <>
struct StringMaker<hadprod::Rational> {
  static String convert(const hadprod::Rational& r) { return r.get_str().c_str(); }
};

} // namespace doctest

namespace hadprod::test {

/// Poly from rational literals such as {"1/2", "3"}.
inline Poly Q(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) {
    Rational r(s);
    r.canonicalize();
    c.push_back(r);
  }
  return Poly(std::move(c));
}

inline const Poly x = Poly::monomial(1, 1);

} // namespace hadprod::test

#endif
