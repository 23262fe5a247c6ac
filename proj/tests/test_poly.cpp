#include "hadprod/poly.hpp"

#include "hadprod/generators.hpp"
#include "support.hpp"

using namespace hadprod;
using hadprod::test::Q;
using hadprod::test::x;

TEST_SUITE("poly") {

TEST_CASE("coefficients are trimmed and the zero polynomial has no degree") {
  const Poly p{1, 2, 0, 0};
  CHECK(p.size() == 2);
  CHECK(p.degree() == 1u);
  CHECK(Poly{0, 0}.is_zero());
  CHECK_FALSE(Poly{}.degree().has_value());
  CHECK(Poly{} == Poly{0});
}

TEST_CASE("add") {
  CHECK((Poly{1, 1} + Poly{-1, -1}).is_zero());
  CHECK(Poly{1, 0, 7} + Poly{0, 3} == Poly{1, 3, 7});
  CHECK(Poly{1, 0, 0, 1} + Poly{1, 0, 0, 1} == Poly{2, 0, 0, 2});
  CHECK(add(Poly{1}, Poly{}) == Poly{1});
}

TEST_CASE("mul") {
  CHECK(Poly{1, 1} * Poly{1, 1} == Poly{1, 2, 1});
  CHECK(Poly{1, 0, 0, 1} * Poly{1} == Poly{1, 0, 0, 1});
  CHECK((Poly{1, 2} * Poly{}).is_zero());
  // schoolbook oracle: f * f' for f = 1+3x+10x^2+8x^3
  const Poly f{1, 3, 10, 8};
  CHECK(mul(f, derivative(f)) == Poly{3, 29, 114, 296, 400, 192});
  CHECK(pow(Poly{1, 1}, 3) == Poly{1, 3, 3, 1});
  CHECK(pow(Poly{2, 5}, 0) == Poly{1});
}

TEST_CASE("derivative") {
  CHECK(derivative(Poly{1, 3, 10, 8}) == Poly{3, 20, 24});
  CHECK(derivative(Poly{1, 0, 0, 1}, 4).is_zero());
  CHECK(derivative(Poly{5, 1}, 0) == Poly{5, 1});
  // d/dx x^i (x+1)^{d-i} for i=2, d=5
  const Poly m = pow(x, 2) * Poly::linear_power(1, 3);
  const Poly expected = Rational(2) * x * Poly::linear_power(1, 3) + Rational(3) * pow(x, 2) * Poly::linear_power(1, 2);
  CHECK(derivative(m) == expected);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(Poly{1, 0, 7}, 1) == 8);
  CHECK(evaluate(Poly{1, 3, 10, 8}, 0) == 1);
  CHECK(evaluate(Poly{6, 11, 6, 1}, -1) == 0);
  CHECK(evaluate(Poly{}, 5) == 0);
  CHECK(evaluate(Poly{1, 1}, Rational(1, 2)) == Rational(3, 2));
}

TEST_CASE("compose and taylor_shift") {
  CHECK(compose(Poly{0, 0, 1}, Poly{1, 1}) == Poly{1, 2, 1});
  CHECK(taylor_shift(Poly{0, 0, 1}, 1) == Poly{1, 2, 1});
  CHECK(taylor_shift(Poly{1, 2, 1}, -1) == Poly{0, 0, 1});
}

TEST_CASE("reverse") {
  CHECK(reverse(Poly{1, 0, 7}, 2) == Poly{7, 0, 1});
  CHECK(reverse(Poly{1, 0, 0, 1}, 3) == Poly{1, 0, 0, 1});
  CHECK(reverse(Poly{1}, 2) == Poly{0, 0, 1});
  CHECK(reverse(Poly{}, 3).is_zero());
  CHECK_THROWS_AS(reverse(Poly{1, 2, 3}, 1), PreconditionError);
}

TEST_CASE("reflect") {
  CHECK(reflect(x, 1) == Poly{1, 1});
  // x (x+1)^2 at d = 3 goes to x^2 (x+1)
  CHECK(reflect(x * Poly::linear_power(1, 2), 3) == pow(x, 2) * Poly::linear(1));
  CHECK_THROWS_AS(reflect(Poly{1, 2, 3}, 1), PreconditionError);
}

TEST_CASE("reverse and reflect are involutions on random input") {
  TrialConfig cfg;
  for (std::uint64_t i = 0; i < 100; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(7, i);
    const std::size_t deg = rng.range(0, 8);
    const std::size_t d = rng.range(deg, 10);
    const Poly p = gen_any(rng, cfg, deg);
    CHECK(reverse(reverse(p, d), d) == p);
    CHECK(reflect(reflect(p, d), d) == p);
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(Poly{1, 2, 1}, Poly{2, 3, 1}) == Poly{1, 1});
  CHECK(gcd(Poly{1, 1, 1}, Poly{5, 1}) == Poly{1});
  const Poly p = Poly::linear_power(2, 3);
  CHECK(gcd(p, derivative(p)) == Poly::linear_power(2, 2));
  CHECK(gcd(Poly{}, Poly{2, 4}) == Q({"1/2", "1"})); // monic
  CHECK_THROWS_AS(gcd(Poly{}, Poly{}), PreconditionError);
}

TEST_CASE("division") {
  const auto [q, r] = divmod(Poly{1, 0, 1}, Poly{1, 1});
  CHECK(q == Poly{-1, 1});
  CHECK(r == Poly{2});
  CHECK(divide_exact(Poly{1, 2, 1}, Poly{1, 1}) == Poly{1, 1});
  CHECK_FALSE(divide_exact(Poly{1, 0, 1}, Poly{1, 1}).has_value());
  CHECK_THROWS(divmod(Poly{1}, Poly{}));
  CHECK(square_free_part(Poly::linear_power(1, 3) * Poly::linear(2)) == Poly{2, 3, 1});
  CHECK(monic(Poly{2, 4}) == Q({"1/2", "1"}));
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 3) == -4); // (-2)(-3)(-4)/6
  CHECK(binomial_poly(2, 2) == Q({"1", "3/2", "1/2"}));
  CHECK(binomial_poly(0, 0) == Poly{1});
}

TEST_CASE("text forms") {
  CHECK(to_csv(Q({"1", "-1/2", "0", "3"})) == "1,-1/2,0,3");
  CHECK(to_csv(Poly{}) == "0");
  CHECK(to_pretty(Poly{1, 0, 7}) == "7x^2 + 1");
  CHECK(all_nonnegative(Poly{0, 1, 2}));
  CHECK_FALSE(all_nonnegative(Poly{1, -1}));
}

}
