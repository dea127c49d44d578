#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starramsey/ell_profile.hpp"

namespace starramsey {

struct RamseyAnswer {
  BigInt r;
  std::string branch;
  std::optional<EllProfile> ell;
};

struct StarCriticalAnswer {
  BigInt rstar;
  BigInt r;
  std::string branch;
};

/// The six shapes a uniform star size m can take relative to s, matched in
/// the order the piecewise value lists them. For s = 1 an even m is read as
/// (2k+1)s + 1.
enum class UniformShape {
  EvenMultiple,         // m = 2ks, s != 1
  EvenPlusRemainder,    // m = 2ks + a, 1 <= a <= s-1
  OddMultiple,          // m = (2k+1)s
  OddMultiplePlusOne,   // m = (2k+1)s + 1
  OddPlusRemainder,     // m = (2k+1)s + a, 2 <= a <= s-1
};

struct UniformCase {
  UniformShape shape;
  BigInt k;
  int a = 0;  // remainder for the two "+ a" shapes, 1 for OddMultiplePlusOne
};

/// Throws OutOfTheoremRange if m < s, InvalidInput unless 1 <= s < t.
UniformCase classify_uniform(const BigInt& m, int s, int t);

RamseyAnswer ramsey_general(const StarFamily& family);
RamseyAnswer ramsey_uniform(const BigInt& m, int s, int t);

/// Classical multicolor star Ramsey number; every m_i must exceed 1.
RamseyAnswer ramsey_classical(std::span<const BigInt> ms);
StarCriticalAnswer star_critical_classical(std::span<const BigInt> ms);

// Closed forms for s = t-1 in terms of x = floor((mt-1)/(t-1)), q = floor(x/t).
// Kept as cross-checks for the uniform formulas.
RamseyAnswer ramsey_tminus1_xq(const BigInt& m, int t);
StarCriticalAnswer star_critical_tminus1_xq(const BigInt& m, int t);

StarCriticalAnswer star_critical_uniform(const BigInt& m, int s, int t);

/// Degree threshold b: a center of degree >= b always carries a K_{1,m}
/// inside some s-subset of colors. NotApplicable for m = (2k+1)s+1, t even.
BigInt b_threshold(const BigInt& m, int s, int t);

/// Some s-subset A with sum_{i in A} d_i >= m_A, or nullopt.
std::optional<ColorSet> degree_forces_star(std::span<const std::int64_t> degrees,
                                           const StarFamily& family);

}  // namespace starramsey
