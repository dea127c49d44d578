#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "starramsey/star_family.hpp"

namespace starramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Regularity degrees ell_1..ell_t, the common remainder a in [1, s] and the
// number k of odd entries. For every s-subset A: sum_{i in A} ell_i = m_A - a.
struct EllProfile {
  std::vector<std::int64_t> ell;
  int a = 0;
  int k = 0;

  BigInt ell_sum() const;

  friend bool operator==(const EllProfile&, const EllProfile&) = default;
};

/// Two equal-size multisets of color sets with the same multiset union but
/// different m-sums.
struct MultisetViolation {
  std::vector<ColorSet> left;
  std::vector<ColorSet> right;
  std::int64_t left_sum = 0;
  std::int64_t right_sum = 0;
};

struct SumConditionResult {
  bool holds = false;
  /// m_A = sum_{i in A} weights[i-1] for every A when `holds`.
  std::vector<Rational> weights;
  std::optional<MultisetViolation> violation;
  /// Nonzero right-hand side left over by elimination when no bounded
  /// violation was found.
  std::optional<Rational> residual;
};

/// Decides whether m is additive over colors, i.e. whether the equal-union
/// sum condition holds, by exact rational elimination.
SumConditionResult sum_condition(const StarFamily& family);

/// Enumerates multiset pairs of size 2..max_b (b = 1 is trivial) and returns
/// the first pair with equal union and different sums. Exhaustive and
/// independent of the elimination in sum_condition; only practical for small
/// C(t,s). Throws InvalidInput when C(t,s) > 64 or t > 31.
std::optional<MultisetViolation> find_multiset_violation(const StarFamily& family,
                                                         int max_b);

/// Computes the ell-profile. Throws HypothesisViolated when the sum condition
/// fails, OutOfTheoremRange when some ell_i < 0, and InternalInconsistency if
/// the per-color remainders disagree or the subset identity breaks.
EllProfile ell_profile(const StarFamily& family);

}  // namespace starramsey
