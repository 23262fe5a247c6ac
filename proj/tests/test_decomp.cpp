#include "hadprod/decomp.hpp"

#include "hadprod/generators.hpp"
#include "hadprod/operators.hpp"
#include "support.hpp"

using namespace hadprod;
using hadprod::test::x;

TEST_SUITE("decomp") {

TEST_CASE("i_decompose of 1+3x+9x^2+x^3") {
  const SymDecomp dec = i_decompose(Poly{1, 3, 9, 1}, 3);
  CHECK(dec.a == Poly{1, 3, 3, 1});
  CHECK(dec.b == Poly{0, 6});
  CHECK(dec.reconstruct() == Poly{1, 3, 9, 1});
  CHECK(is_real_rooted(dec.a));
  CHECK(is_real_rooted(dec.b));
}

TEST_CASE("i_decompose of a symmetric numerator has b = 0") {
  const Poly h{1, 8, 24, 36, 24, 8, 1};
  const SymDecomp dec = i_decompose(h, 6);
  CHECK(dec.a == h);
  CHECK(dec.b.is_zero());
}

TEST_CASE("i_decompose of the Hadamard square of 1+3x+9x^2+x^3") {
  const SymDecomp dec = i_decompose(Poly{1, 42, 639, 1836, 1239, 162, 1}, 6);
  CHECK(dec.a == Poly{1, 42, 519, 1116, 519, 42, 1});
  CHECK(dec.b == Poly{0, 120, 720, 720, 120});
  CHECK_FALSE(is_real_rooted(dec.a));
  CHECK(is_real_rooted(dec.b)); // 120 x (x+1)(x^2+5x+1)
  CHECK_FALSE(decomposition_is_interlacing(dec));
}

TEST_CASE("i_decompose preconditions and small cases") {
  CHECK_THROWS_AS(i_decompose(Poly{1, 1, 1}, 1), PreconditionError);
  const SymDecomp zero = i_decompose(Poly{5}, 0);
  CHECK(zero.a == Poly{5});
  CHECK(zero.b.is_zero());
  const SymDecomp d1 = i_decompose(Poly{1}, 1); // 1 = (1 + x) + x * (-1)
  CHECK(d1.a == Poly{1, 1});
  CHECK(d1.b == Poly{-1});
}

TEST_CASE("i_decompose round trip on random numerators") {
  TrialConfig cfg;
  for (std::uint64_t i = 0; i < 100; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(23, i);
    const std::size_t deg = rng.range(0, 8);
    const std::size_t d = rng.range(deg, 9);
    const Poly h = gen_any(rng, cfg, deg);
    const SymDecomp dec = i_decompose(h, d);
    CHECK(dec.reconstruct() == h);
    CHECK(reverse(dec.a, d) == dec.a);
    if (d > 0) CHECK(reverse(dec.b, d - 1) == dec.b);
  }
}

TEST_CASE("r_decompose") {
  const Poly sym = Poly::linear_power(1, 3);
  const ReflectDecomp fixed = r_decompose(sym * Poly{1, 2} + reflect(sym * Poly{1, 2}, 4), 4);
  CHECK(fixed.b.is_zero());
  const ReflectDecomp dec = r_decompose(f_from_h(Poly{1, 3, 9, 1}, 3), 3);
  CHECK(dec.a == f_from_h(Poly{1, 3, 3, 1}, 3));
  CHECK(dec.b == f_from_h(Poly{0, 6}, 2));
  CHECK_THROWS_AS(r_decompose(Poly{1, 1, 1}, 1), PreconditionError);
}

TEST_CASE("r_decompose transports i_decompose") {
  TrialConfig cfg;
  for (std::uint64_t i = 0; i < 60; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(29, i);
    const std::size_t d = rng.range(1, 7);
    const Poly h = gen_any(rng, cfg, rng.range(0, d));
    const SymDecomp idec = i_decompose(h, d);
    const ReflectDecomp rdec = r_decompose(f_from_h(h, d), d);
    CHECK(rdec.a == f_from_h(idec.a, d));
    CHECK(rdec.b == f_from_h(idec.b, d - 1));
  }
}

TEST_CASE("defect1_ell") {
  CHECK(defect1_ell(Poly{1}, 1, Poly{1}, 1) == Poly{1, 2});
  CHECK(defect1_ell(Poly{}, 2, Poly{}, 3).is_zero());
  CHECK_THROWS_AS(defect1_ell(Poly{1}, 0, Poly{1}, 1), PreconditionError);
  CHECK_THROWS_AS(defect1_ell(Poly{1, 3}, 2, Poly{1}, 1), PreconditionError);
  // b = x + 1/2 satisfies reflect(b, 1) = b
  const Poly b1(std::vector<Rational>{Rational(1, 2), 1});
  const Poly ell = defect1_ell(b1, 2, Poly{1}, 1);
  CHECK(reflect(ell, 2) == ell);
  CHECK(Poly::linear(1) * ell == diamond(Poly::linear(1) * b1, Poly::linear(1)));
}

TEST_CASE("decomposition_is_nonnegative") {
  CHECK(decomposition_is_nonnegative(i_decompose(Poly{1, 3, 9, 1}, 3)));
  const SymDecomp neg = i_decompose(Poly{1, -1, 1, 1}, 3);
  CHECK(neg.a == Poly{1, -1, -1, 1});
  CHECK(neg.b == Poly{0, 2});
  const auto r = decomposition_is_nonnegative(neg);
  CHECK_FALSE(r);
  CHECK(r.witness == std::vector<long long>{0, 1});
  CHECK(decomposition_is_nonnegative(SymDecomp{Poly{1, 2, 1}, Poly{}, 2}));
}

TEST_CASE("decomposition_is_interlacing") {
  // a = (1+x)^3 and b = 6x are real-rooted but do not interlace
  CHECK_FALSE(decomposition_is_interlacing(i_decompose(Poly{1, 3, 9, 1}, 3)));
  CHECK(decomposition_is_interlacing(SymDecomp{Poly{1, 2, 1}, Poly{}, 2}));
  // b = 3(x+1) shares the double root of a = (x+1)^2
  CHECK(decomposition_is_interlacing(SymDecomp{Poly{1, 2, 1}, Poly{3, 3}, 2}));
  // a = (1+x)(1+4x+x^2) with roots -2 +- sqrt 3 and -1, b = (1+x)^2
  CHECK(decomposition_is_interlacing(SymDecomp{Poly{1, 5, 5, 1}, Poly{1, 2, 1}, 3}));
}

TEST_CASE("decomposition_is_gamma_positive") {
  CHECK(decomposition_is_gamma_positive(i_decompose(Poly{1, 3, 9, 1}, 3)));
  CHECK(gamma_expand(Poly{0, 6}, 2) == Poly{0, 6});
  const SymDecomp bad{Poly::linear_power(1, 3), Poly{1, 1, 1}, 3};
  const auto r = decomposition_is_gamma_positive(bad);
  CHECK_FALSE(r);
  CHECK(r.witness == std::vector<long long>{1, 1});
  CHECK(decomposition_is_gamma_positive(SymDecomp{Poly::linear_power(1, 4), Poly{}, 4}));
}

}
