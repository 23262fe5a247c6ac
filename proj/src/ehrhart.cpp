#include "hadprod/ehrhart.hpp"

#include "hadprod/operators.hpp"

namespace hadprod {

ReeveData reeve() {
  ReeveData r;
  r.hstar = Poly{1, 0, 7};
  r.dim = 3;
  r.f_poly = Poly{1, 3, 10, 8};
  r.vertices = {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 7, 8}}};
  return r;
}

Poly product_f(std::size_t k) {
  if (k == 0) throw PreconditionError("product_f: k must be at least 1");
  return diamond_power(reeve().f_poly, k);
}

std::array<Rational, 3> closed_form(std::size_t k) {
  if (k == 0) throw PreconditionError("closed_form: k must be at least 1");
  Integer four, seventeen;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, k);
  mpz_ui_pow_ui(seventeen.get_mpz_t(), 17, k);
  return {Rational(1), Rational(four - 1), Rational(seventeen - 2 * four + 1)};
}

PropertyReport counterexample_report(std::size_t k_max) {
  if (k_max == 0) throw PreconditionError("counterexample_report: k_max must be at least 1");
  const char* name = "reeve counterexample";
  const Poly f1 = reeve().f_poly;
  Poly f = f1;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) f = diamond(f1, f);
    const auto kk = static_cast<long long>(k);
    const auto cf = closed_form(k);
    for (std::size_t i = 0; i < 3; ++i)
      if (f.coeff(i) != cf[i])
        return PropertyReport::fail(name, {kk}, "k=" + std::to_string(k) + ": f_{k," + std::to_string(i) +
                                                    "} = " + f.coeff(i).get_str() + " != closed form " +
                                                    cf[i].get_str());
    if (!(f.coeff(1) * f.coeff(1) < f.coeff(0) * f.coeff(2)))
      return PropertyReport::fail(name, {kk}, "k=" + std::to_string(k) + ": f_{k,1}^2 >= f_{k,0} f_{k,2}");
    if (is_log_concave(f))
      return PropertyReport::fail(name, {kk}, "k=" + std::to_string(k) + ": f-polynomial is log-concave");
    if (is_real_rooted(h_from_f(f, 3 * k)))
      return PropertyReport::fail(name, {kk}, "k=" + std::to_string(k) + ": h*-polynomial is real-rooted");
  }
  return PropertyReport::pass(name);
}

} // namespace hadprod
