#ifndef HADPROD_ANALYSIS_HPP
#define HADPROD_ANALYSIS_HPP

#include "hadprod/poly.hpp"
#include "hadprod/roots.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hadprod {

/// Verdict of a coefficient-property check.
///
/// `witness` is machine readable and its meaning depends on the property:
/// a failing index j for log-concavity, an (i, j, k) triple for internal zeros,
/// a (descent, ascent) pair for unimodality, and so on. `detail` is the same
/// information for humans.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::vector<long long> witness;
  std::string detail;

  explicit operator bool() const { return holds; }

  static PropertyReport pass(std::string property) { return {std::move(property), true, {}, {}}; }
  static PropertyReport fail(std::string property, std::vector<long long> witness, std::string detail) {
    return {std::move(property), false, std::move(witness), std::move(detail)};
  }
};

/// Report for "all coefficients are nonnegative"; witness = first negative index.
PropertyReport check_nonnegative(const Poly& h);

/// Report for the property "no internal zeros": holds iff the support of h is
/// a contiguous run of indices. Witness (i, j, k) with h_i, h_k != 0 = h_j.
/// Requires nonnegative coefficients.
PropertyReport has_internal_zeros(const Poly& h);

/// a_j^2 >= a_{j-1} a_{j+1} for every interior j. Witness = first failing j.
PropertyReport is_log_concave(const Poly& h);

/// a_0 <= ... <= a_k >= ... >= a_d. Witness = (j, k): a strict descent
/// a_j > a_{j+1} followed by a strict ascent a_k < a_{k+1}.
PropertyReport is_unimodal(const Poly& h);

/// Membership in ULC(m): nonnegative, no internal zeros, and a_j / C(m, j)
/// log-concave. Requires m >= deg h.
PropertyReport is_ulc(const Poly& h, std::size_t m);

/// Only real zeros (Sturm count of the squarefree part). Constants hold.
PropertyReport is_real_rooted(const Poly& p);

/// b interlaces a (b <= a): with zeros s_k <= ... <= s_1 of a and
/// t_m <= ... <= t_1 of b, ... <= t_2 <= s_2 <= t_1 <= s_1. Roots are compared
/// exactly with multiplicity. A zero polynomial on either side interlaces.
/// Throws PreconditionError when a nonzero input is not real-rooted.
PropertyReport interlaces(const Poly& b, const Poly& a);

struct SymmetryCertificate {
  /// s, with center of symmetry s / 2.
  std::size_t center_numerator = 0;
  /// d - s; present when a reference degree d >= s was supplied.
  std::optional<std::size_t> defect;
};

/// Certificate iff reverse(h, s) = h for s = min supp + max supp.
/// Throws PreconditionError on h = 0.
std::optional<SymmetryCertificate> symmetry_certificate(const Poly& h,
                                                        std::optional<std::size_t> ref_degree = std::nullopt);

/// Checks (-1)^d p(-(x + d + 1 - s)) = p(x) with d = deg p.
PropertyReport check_functional_eq(const Poly& p, std::size_t s);

/// Coordinates of a symmetric h (reverse(h, s) = h) in the basis
/// x^i (1+x)^{s-2i}, i <= s/2.
Poly gamma_expand(const Poly& h, std::size_t s);

/// sum_i g_i x^i (1+x)^{s-2i}; inverse of gamma_expand.
Poly gamma_contract(const Poly& g, std::size_t s);

/// All gamma coordinates nonnegative; witness = first negative index.
PropertyReport is_gamma_positive(const Poly& h, std::size_t s);

} // namespace hadprod

#endif
