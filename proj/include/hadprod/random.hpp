#ifndef HADPROD_RANDOM_HPP
#define HADPROD_RANDOM_HPP

#include "hadprod/poly.hpp"

#include <cstdint>

namespace hadprod {

/// Parameters shared by every seeded trial suite.
struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t max_degree = 8;
  /// Bound for random numerators and denominators.
  std::uint64_t max_coefficient = 10;
};

/// SplitMix64 (Steele, Lea, Flood 2014). Counter based: output i of a stream
/// is mix(seed + (i+1) * golden_gamma), so streams are cheap to split and the
/// sequence is fixed across platforms and releases. Integer ranges use
/// rejection sampling rather than std::uniform_int_distribution, whose output
/// is implementation-defined.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `master`.
  static SplitMix64 for_trial(std::uint64_t master, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t range(std::size_t lo, std::size_t hi);
  bool coin(std::uint64_t one_in);

  /// num / den with num in [0, max] and den in [1, max].
  Rational nonneg_rational(std::uint64_t max);
  /// num / den with num, den in [1, max].
  Rational positive_rational(std::uint64_t max);
  /// Uniform-ish rational in the closed unit interval with denominator `max`.
  Rational unit_rational(std::uint64_t max);
  /// Signed rational, numerator in [-max, max].
  Rational signed_rational(std::uint64_t max);

private:
  static std::uint64_t mix(std::uint64_t z);
  std::uint64_t state_;
};

} // namespace hadprod

#endif
