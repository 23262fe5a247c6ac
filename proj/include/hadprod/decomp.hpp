#ifndef HADPROD_DECOMP_HPP
#define HADPROD_DECOMP_HPP

#include "hadprod/analysis.hpp"
#include "hadprod/poly.hpp"

#include <cstddef>

namespace hadprod {

/// h = a + x b with reverse(a, d) = a and reverse(b, d - 1) = b.
struct SymDecomp {
  Poly a;
  Poly b;
  std::size_t d = 0;

  Poly reconstruct() const;
  friend bool operator==(const SymDecomp&, const SymDecomp&) = default;
};

/// The I_d-decomposition of h (deg h <= d).
SymDecomp i_decompose(const Poly& h, std::size_t d);

/// The R_d-decomposition of an f-polynomial: f = a~ + x b~ with
/// reflect(a~, d) = a~ and reflect(b~, d - 1) = b~.
struct ReflectDecomp {
  Poly a;
  Poly b;
};

ReflectDecomp r_decompose(const Poly& f, std::size_t d);

/// The unique l with reflect(l, d1 + d2 - 1) = l and
/// ((x+1) b1) <> ((x+1) b2) = (x+1) l. Requires d1, d2 >= 1,
/// deg b_i <= d_i - 1 and reflect(b_i, d_i - 1) = b_i.
Poly defect1_ell(const Poly& b1, std::size_t d1, const Poly& b2, std::size_t d2);

PropertyReport decomposition_is_nonnegative(const SymDecomp& dec);

/// a and b real-rooted with b interlacing a. A zero part is accepted.
PropertyReport decomposition_is_interlacing(const SymDecomp& dec);

/// a gamma-positive about d/2 and b gamma-positive about (d-1)/2.
PropertyReport decomposition_is_gamma_positive(const SymDecomp& dec);

} // namespace hadprod

#endif
