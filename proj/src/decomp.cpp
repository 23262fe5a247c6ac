#include "hadprod/decomp.hpp"

#include "hadprod/operators.hpp"

#include <stdexcept>

namespace hadprod {

Poly SymDecomp::reconstruct() const { return a + Poly::monomial(1, 1) * b; }

SymDecomp i_decompose(const Poly& h, std::size_t d) {
  if (h.size() > d + 1) throw PreconditionError("i_decompose: degree overflow (deg h > d)");
  // h_i = a_i + b_{i-1} and h_{d-i} = a_i + b_i
  std::vector<Rational> a(d + 1), b(d);
  for (std::size_t i = 0; i <= d; ++i) {
    a[i] = h.coeff(i) - (i > 0 ? b[i - 1] : Rational(0));
    if (i < d) b[i] = h.coeff(d - i) - a[i];
  }
  SymDecomp dec{Poly(std::move(a)), Poly(std::move(b)), d};
  if (dec.reconstruct() != h || reverse(dec.a, d) != dec.a || (d > 0 && reverse(dec.b, d - 1) != dec.b))
    throw std::logic_error("i_decompose: recurrence produced an invalid decomposition");
  return dec;
}

ReflectDecomp r_decompose(const Poly& f, std::size_t d) {
  if (f.size() > d + 1) throw PreconditionError("r_decompose: degree overflow (deg f > d)");
  const Poly rf = reflect(f, d);
  const Poly x = Poly::monomial(1, 1);
  return {Poly::linear(1) * f - x * rf, rf - f};
}

Poly defect1_ell(const Poly& b1, std::size_t d1, const Poly& b2, std::size_t d2) {
  if (d1 == 0 || d2 == 0) throw PreconditionError("defect1_ell: d1 and d2 must be at least 1");
  if (b1.size() > d1 || reflect(b1, d1 - 1) != b1)
    throw PreconditionError("defect1_ell: b1 is not R_{d1-1}-symmetric");
  if (b2.size() > d2 || reflect(b2, d2 - 1) != b2)
    throw PreconditionError("defect1_ell: b2 is not R_{d2-1}-symmetric");
  const Poly x1 = Poly::linear(1);
  const Poly prod = diamond(x1 * b1, x1 * b2);
  auto ell = divide_exact(prod, x1);
  if (!ell) throw std::logic_error("defect1_ell: (x+1) does not divide the diamond product");
  return *ell;
}

PropertyReport decomposition_is_nonnegative(const SymDecomp& dec) {
  const auto ra = check_nonnegative(dec.a);
  if (!ra) return PropertyReport::fail("nonnegative decomposition", {0, ra.witness[0]}, "a: " + ra.detail);
  const auto rb = check_nonnegative(dec.b);
  if (!rb) return PropertyReport::fail("nonnegative decomposition", {1, rb.witness[0]}, "b: " + rb.detail);
  return PropertyReport::pass("nonnegative decomposition");
}

PropertyReport decomposition_is_interlacing(const SymDecomp& dec) {
  const char* name = "interlacing decomposition";
  if (!dec.a.is_zero()) {
    const auto ra = is_real_rooted(dec.a);
    if (!ra) return PropertyReport::fail(name, {0}, "a is not real-rooted: " + ra.detail);
  }
  if (!dec.b.is_zero()) {
    const auto rb = is_real_rooted(dec.b);
    if (!rb) return PropertyReport::fail(name, {1}, "b is not real-rooted: " + rb.detail);
  }
  auto r = interlaces(dec.b, dec.a);
  r.property = name;
  return r;
}

PropertyReport decomposition_is_gamma_positive(const SymDecomp& dec) {
  const char* name = "gamma-positive decomposition";
  const auto ra = is_gamma_positive(dec.a, dec.d);
  if (!ra) return PropertyReport::fail(name, {0, ra.witness[0]}, "a: " + ra.detail);
  if (dec.d > 0) {
    const auto rb = is_gamma_positive(dec.b, dec.d - 1);
    if (!rb) return PropertyReport::fail(name, {1, rb.witness[0]}, "b: " + rb.detail);
  }
  return PropertyReport::pass(name);
}

} // namespace hadprod
