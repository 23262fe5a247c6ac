#include "hadprod/operators.hpp"

#include "hadprod/ehrhart.hpp"
#include "hadprod/generators.hpp"
#include "support.hpp"

using namespace hadprod;
using hadprod::test::Q;
using hadprod::test::x;

namespace {

// (2x^6+24x^5+170x^4+720x^3+1628x^2+1776x+720)/720
Poly sextic() {
  return Poly{720, 1776, 1628, 720, 170, 24, 2} * Rational(1, 720);
}

const Poly cubic_q = Poly{6, 11, 6, 1} * Rational(1, 6);

} // namespace

TEST_SUITE("operators") {

TEST_CASE("w_transform") {
  CHECK(w_transform(Poly{1}) == TaggedPoly{Poly{1}, 0});
  CHECK(w_transform(Q({"1", "3/2", "1/2"})) == TaggedPoly{Poly{1}, 2});
  CHECK(w_transform(sextic()) == TaggedPoly{Poly{1, 0, 0, 1}, 6});
  CHECK(w_transform(cubic_q) == TaggedPoly{Poly{1}, 3});
  CHECK_THROWS_AS(w_transform(Poly{}), PreconditionError);
}

TEST_CASE("w_numerator against a larger reference degree") {
  // sum_j x^j = 1/(1-x) = (1-x)^2 / (1-x)^3
  CHECK(w_numerator(Poly{1}, 2) == Poly{1, -2, 1});
  CHECK(w_numerator(Poly{}, 4).is_zero());
  CHECK_THROWS_AS(w_numerator(Poly{1, 1}, 0), PreconditionError);
}

TEST_CASE("w_inverse") {
  CHECK(w_inverse(Poly{1}, 3) == cubic_q);
  CHECK(w_inverse(Poly{1, 0, 0, 1}, 6) == sextic());
  CHECK(w_inverse(Poly{1}, 0) == Poly{1});
  CHECK(w_inverse(Poly{}, 3).is_zero());
  CHECK_THROWS_AS(w_inverse(Poly{1, 1}, 0), PreconditionError);
}

TEST_CASE("homogenize") {
  const HomogRep rep = homogenize(Poly{1, 2}, 3);
  CHECK(rep.degree == 3);
  CHECK(rep.coeffs == std::vector<Rational>{1, 2, 0, 0});
  CHECK(dehomogenize(rep) == TaggedPoly{Poly{1, 2}, 3});
  CHECK_THROWS_AS(homogenize(Poly{1, 2, 3}, 1), PreconditionError);
}

TEST_CASE("subdivision") {
  CHECK(subdivision(x) == x);
  CHECK(subdivision(Poly{0, 0, 1}) == Poly{0, 1, 2});
  CHECK(subdivision(w_inverse(Poly{1, 0, 7}, 3)) == Poly{1, 3, 10, 8});
  CHECK(subdivision(Poly{5}) == Poly{5});
}

TEST_CASE("f_from_h and h_from_f") {
  CHECK(f_from_h(Poly{1, 0, 7}, 3) == Poly{1, 3, 10, 8});
  for (std::size_t d = 0; d < 6; ++d) {
    CHECK(f_from_h(Poly{1}, d) == Poly::linear_power(1, d));
    CHECK(f_from_h(Poly::monomial(1, d), d) == Poly::monomial(1, d));
    CHECK(h_from_f(Poly::linear_power(1, d), d) == Poly{1});
  }
  CHECK(h_from_f(Poly{1, 3, 10, 8}, 3) == Poly{1, 0, 7});
  CHECK_THROWS_AS(f_from_h(Poly{1, 1}, 0), PreconditionError);
}

TEST_CASE("subdivision of the interpolating polynomial equals the f-polynomial") {
  TrialConfig cfg;
  for (std::uint64_t i = 0; i < 100; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(11, i);
    const std::size_t deg = rng.range(0, 7);
    const std::size_t d = rng.range(deg, 8);
    const Poly h = gen_any(rng, cfg, deg);
    CHECK(subdivision(w_inverse(h, d)) == f_from_h(h, d));
  }
}

TEST_CASE("hadamard examples") {
  const TaggedPoly a{Poly{1, 0, 0, 1}, 6}, b{Poly{1}, 3};
  CHECK(hadamard(a, b) == TaggedPoly{Poly{1, 18, 45, 40, 45, 18, 1}, 9});
  const TaggedPoly h{Poly{1, 3, 9, 1}, 3};
  CHECK(hadamard(h, h) == TaggedPoly{Poly{1, 42, 639, 1836, 1239, 162, 1}, 6});
  CHECK(hadamard({x, 2}, {x, 2}) == TaggedPoly{Poly{0, 1, 4, 1}, 4});
  CHECK(hadamard(h, {Poly{1}, 0}) == h);
}

TEST_CASE("hadamard routes agree") {
  const TaggedPoly a{Poly{1, 0, 0, 1}, 6}, b{Poly{1}, 3};
  for (auto route : {HadamardRoute::bullet, HadamardRoute::diamond})
    CHECK(hadamard(a, b, route) == hadamard(a, b));
  // a tagged numerator whose interpolating polynomial drops degree
  const TaggedPoly c{Poly{1, -1}, 1}, e{Poly{2, 1}, 2};
  CHECK(hadamard(c, e, HadamardRoute::bullet) == hadamard(c, e));
  CHECK(hadamard(c, e, HadamardRoute::diamond) == hadamard(c, e));
  CHECK_THROWS_AS(hadamard({Poly{1, 1}, 0}, b), PreconditionError);
}

TEST_CASE("bullet_monomial") {
  const HomogRep m = bullet_monomial(1, 2, 1, 2);
  CHECK(m.degree == 4);
  CHECK(m.coeffs == std::vector<Rational>{0, 1, 4, 1, 0});
  const HomogRep one = bullet_monomial(0, 0, 0, 0);
  CHECK(one.degree == 0);
  CHECK(one.coeffs == std::vector<Rational>{1});
  // (x^2, 2) with (x, 1) against the direct route
  CHECK(dehomogenize(bullet_monomial(2, 2, 1, 1)).poly == Poly{0, 0, 2, 1});
  CHECK(hadamard({pow(x, 2), 2}, {x, 1}).poly == Poly{0, 0, 2, 1});
  CHECK_THROWS_AS(bullet_monomial(3, 2, 0, 0), PreconditionError);
  CHECK_THROWS_AS(bullet_monomial(-1, 2, 0, 0), PreconditionError);
}

TEST_CASE("diamond") {
  CHECK(diamond(x, x) == Poly{0, 1, 2});
  const Poly f{1, 3, 10, 8};
  CHECK(diamond(f, Poly{1}) == f);
  CHECK(diamond(Poly{1}, f) == f);
  CHECK(diamond(f, f) == Poly{1, 15, 258, 1484, 3480, 3520, 1280});
  CHECK(diamond(Poly{1, 1}, Poly{1, 1}) == Poly{1, 3, 2});
  CHECK(diamond(f, Poly{}).is_zero());
}

TEST_CASE("subdivision turns products into diamond products") {
  TrialConfig cfg;
  for (std::uint64_t i = 0; i < 60; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(13, i);
    const Poly p = gen_any(rng, cfg, rng.range(0, 5));
    const Poly q = gen_any(rng, cfg, rng.range(0, 5));
    CHECK(subdivision(p * q) == diamond(subdivision(p), subdivision(q)));
  }
}

TEST_CASE("diamond_power") {
  const Poly f{1, 3, 10, 8};
  CHECK(diamond_power(f, 1) == f);
  const Poly f2 = diamond_power(f, 2);
  CHECK(f2.coeff(0) == 1);
  CHECK(f2.coeff(1) == 15);
  CHECK(f2.coeff(2) == 258);
  CHECK(diamond_power(f, 3) == diamond(f, f2));
  CHECK_THROWS_AS(diamond_power(f, 0), PreconditionError);
}

TEST_CASE("msupp") {
  CHECK(msupp(Poly::linear_power(1, 3), 3) == std::set<std::size_t>{0});
  CHECK(msupp(Poly{1, 3, 10, 8}, 3) == std::set<std::size_t>{0, 2});
  CHECK(msupp(f_from_h(Poly{1, 0, 0, 1}, 6), 6) == std::set<std::size_t>{0, 3});
  CHECK(is_magic_positive(Poly{1, 3, 10, 8}, 3));
  CHECK_FALSE(is_magic_positive(f_from_h(Poly{1, -1}, 1), 1));
  CHECK_THROWS_AS(msupp(f_from_h(Poly{1, -1}, 1), 1), PreconditionError);
}

}
