#include "hadprod/random.hpp"

#include <stdexcept>

namespace hadprod {

namespace {
constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t master, std::uint64_t index) {
  return SplitMix64(mix(master ^ mix(index + golden_gamma)));
}

std::uint64_t SplitMix64::next() {
  state_ += golden_gamma;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("SplitMix64::below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

std::size_t SplitMix64::range(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw PreconditionError("SplitMix64::range: hi < lo");
  return lo + static_cast<std::size_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool SplitMix64::coin(std::uint64_t one_in) { return below(one_in) == 0; }

Rational SplitMix64::nonneg_rational(std::uint64_t max) {
  Rational r(Integer(static_cast<unsigned long>(below(max + 1))), Integer(static_cast<unsigned long>(below(max) + 1)));
  r.canonicalize();
  return r;
}

Rational SplitMix64::positive_rational(std::uint64_t max) {
  Rational r(Integer(static_cast<unsigned long>(below(max) + 1)), Integer(static_cast<unsigned long>(below(max) + 1)));
  r.canonicalize();
  return r;
}

Rational SplitMix64::unit_rational(std::uint64_t max) {
  Rational r(Integer(static_cast<unsigned long>(below(max + 1))), Integer(static_cast<unsigned long>(max)));
  r.canonicalize();
  return r;
}

Rational SplitMix64::signed_rational(std::uint64_t max) {
  Rational r = nonneg_rational(max);
  return coin(2) ? Rational(-r) : r;
}

} // namespace hadprod
