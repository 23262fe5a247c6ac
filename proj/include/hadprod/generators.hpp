#ifndef HADPROD_GENERATORS_HPP
#define HADPROD_GENERATORS_HPP

#include "hadprod/operators.hpp"
#include "hadprod/random.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hadprod {

/// A generator could not produce an instance satisfying its hypothesis within
/// the rejection budget.
class GeneratorExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Attempts per instance before a generator gives up.
inline constexpr std::size_t rejection_budget = 10'000;

// Every generator below returns a numerator tagged with its reference degree
// and checks its own hypothesis before returning. `tag` defaults to `degree`.

/// c * prod (x + r_i) for the given nonnegative roots r_i.
Poly real_rooted_from_roots(const std::vector<Rational>& roots, const Rational& scale = 1);

/// Real-rooted with nonpositive zeros and nonnegative coefficients.
TaggedPoly gen_real_rooted(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                           std::optional<std::size_t> tag = std::nullopt);

/// In ULC(tag): a real-rooted instance with interior coefficients shrunk at
/// random, each step kept only if is_ulc still holds.
TaggedPoly gen_ulc(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                   std::optional<std::size_t> tag = std::nullopt);

/// sum gamma_i x^i (1+x)^{s-2i} with random nonnegative gamma, tagged s + defect.
TaggedPoly gen_symmetric(SplitMix64& rng, const TrialConfig& cfg, std::size_t s, std::size_t defect);

/// Gamma-positive symmetric polynomial about s/2, tagged s.
TaggedPoly gen_gamma_positive(SplitMix64& rng, const TrialConfig& cfg, std::size_t s);

/// h = a + x b whose I_d-decomposition is nonnegative.
TaggedPoly gen_nonneg_symdec(SplitMix64& rng, const TrialConfig& cfg, std::size_t d);

/// h = a + x b with a, b gamma-positive about d/2 and (d-1)/2.
TaggedPoly gen_gamma_symdec(SplitMix64& rng, const TrialConfig& cfg, std::size_t d);

/// h = a + x b, nonnegative and interlacing: a has paired roots (-r, -1/r)
/// (and -1 for odd d), b has one root in each gap of a, mirrored under
/// inversion so that it stays symmetric.
TaggedPoly gen_interlacing_symdec(SplitMix64& rng, const TrialConfig& cfg, std::size_t d);

/// Log-concave with no internal zeros (positive coefficients on a contiguous
/// run ending at `degree`, consecutive ratios nonincreasing).
TaggedPoly gen_logconcave(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                          std::optional<std::size_t> tag = std::nullopt);

/// Nonnegative with contiguous support ending at `degree`.
TaggedPoly gen_contiguous(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree,
                          std::optional<std::size_t> tag = std::nullopt);

/// Arbitrary signed rational coefficients of degree <= `degree`.
Poly gen_any(SplitMix64& rng, const TrialConfig& cfg, std::size_t degree);

} // namespace hadprod

#endif
