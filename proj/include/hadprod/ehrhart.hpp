#ifndef HADPROD_EHRHART_HPP
#define HADPROD_EHRHART_HPP

#include "hadprod/analysis.hpp"
#include "hadprod/poly.hpp"

#include <array>
#include <cstddef>

namespace hadprod {

/// The Reeve tetrahedron with vertices (0,0,0), (1,0,0), (0,1,0), (1,7,8).
/// Only its h*-polynomial is used; no lattice points are counted.
struct ReeveData {
  Poly hstar;
  std::size_t dim = 0;
  Poly f_poly;
  std::array<std::array<int, 3>, 4> vertices{};
};

ReeveData reeve();

/// f-polynomial of the k-fold Cartesian power: reeve().f_poly diamond-raised to k.
Poly product_f(std::size_t k);

/// (f_{k,0}, f_{k,1}, f_{k,2}) = (1, 4^k - 1, 17^k - 2 * 4^k + 1).
std::array<Rational, 3> closed_form(std::size_t k);

/// For every k <= k_max: the first three coefficients of product_f(k) match
/// closed_form(k), f_{k,1}^2 < f_{k,0} f_{k,2}, product_f(k) is not
/// log-concave, and its h*-polynomial is not real-rooted. Holds when all of
/// that is confirmed; the witness of a failure is {k}.
PropertyReport counterexample_report(std::size_t k_max);

} // namespace hadprod

#endif
