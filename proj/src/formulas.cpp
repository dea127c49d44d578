#include "starramsey/formulas.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "starramsey/error.hpp"

namespace starramsey {
namespace {

void require_shape(int s, int t) {
  if (t < 2 || s < 1 || s >= t) {
    throw Error(ErrorCode::InvalidInput, "need 1 <= s < t");
  }
}

void require_classical(std::span<const BigInt> ms) {
  if (ms.empty()) throw Error(ErrorCode::InvalidInput, "need at least one star size");
  for (const auto& m : ms) {
    if (m <= 1) throw Error(ErrorCode::OutOfTheoremRange, "classical star sizes must exceed 1");
  }
}

struct ClassicalCounts {
  BigInt base;  // sum m_i - t
  int even = 0;
};

ClassicalCounts classical_counts(std::span<const BigInt> ms) {
  ClassicalCounts c;
  for (const auto& m : ms) {
    c.base += m - 1;
    if (m % 2 == 0) ++c.even;
  }
  return c;
}

struct XQ {
  BigInt x;
  bool special;
};

XQ xq(const BigInt& m, int t) {
  if (t < 2) throw Error(ErrorCode::InvalidInput, "need t >= 2");
  if (m < 1) throw Error(ErrorCode::InvalidInput, "need m >= 1");
  BigInt x = (m * t - 1) / (t - 1);
  BigInt q = x / t;
  bool special = x == t * q + 1 && x % 2 != 0 && q % 2 != 0;
  return {x, special};
}

}  // namespace

UniformCase classify_uniform(const BigInt& m, int s, int t) {
  require_shape(s, t);
  if (m < s) throw Error(ErrorCode::OutOfTheoremRange, "need m >= s");
  const BigInt q = m / s;
  const int rem = static_cast<int>(m % s);
  const bool q_even = q % 2 == 0;
  if (rem == 0) {
    if (q_even && s != 1) return {UniformShape::EvenMultiple, q / 2, 0};
    if (q_even) return {UniformShape::OddMultiplePlusOne, (q - 2) / 2, 1};
    return {UniformShape::OddMultiple, (q - 1) / 2, 0};
  }
  if (q_even) return {UniformShape::EvenPlusRemainder, q / 2, rem};
  if (rem == 1) return {UniformShape::OddMultiplePlusOne, (q - 1) / 2, 1};
  return {UniformShape::OddPlusRemainder, (q - 1) / 2, rem};
}

RamseyAnswer ramsey_general(const StarFamily& family) {
  EllProfile profile = ell_profile(family);
  RamseyAnswer answer;
  const BigInt sum = profile.ell_sum();
  if (profile.a == 1 && profile.k >= 1 && profile.k % 2 == 0) {
    answer.r = sum + 1;
    answer.branch = "a=1,k-even";
  } else {
    answer.r = sum + profile.a + 1;
    answer.branch = "otherwise";
  }
  answer.ell = std::move(profile);
  return answer;
}

RamseyAnswer ramsey_uniform(const BigInt& m, int s, int t) {
  const UniformCase c = classify_uniform(m, s, t);
  const BigInt& k = c.k;
  RamseyAnswer answer;
  switch (c.shape) {
    case UniformShape::EvenMultiple:
      answer.r = (2 * k - 1) * t + s + 1;
      answer.branch = "m=2ks,s!=1";
      break;
    case UniformShape::EvenPlusRemainder:
      answer.r = 2 * k * t + c.a + 1;
      answer.branch = "m=2ks+a";
      break;
    case UniformShape::OddMultiple:
      answer.r = 2 * k * t + s + 1;
      answer.branch = "m=(2k+1)s";
      break;
    case UniformShape::OddMultiplePlusOne:
      if (t % 2 == 0) {
        answer.r = (2 * k + 1) * t + 1;
        answer.branch = "m=(2k+1)s+1,t-even";
      } else {
        answer.r = (2 * k + 1) * t + 2;
        answer.branch = "m=(2k+1)s+1,t-odd";
      }
      break;
    case UniformShape::OddPlusRemainder:
      answer.r = (2 * k + 1) * t + c.a + 1;
      answer.branch = "m=(2k+1)s+a";
      break;
  }
  const BigInt ell = (m - 1) / s;
  if (ell <= std::numeric_limits<std::int64_t>::max()) {
    EllProfile profile;
    profile.ell.assign(t, static_cast<std::int64_t>(ell));
    profile.a = static_cast<int>(m - s * ell);
    profile.k = ell % 2 != 0 ? t : 0;
    answer.ell = std::move(profile);
  }
  return answer;
}

RamseyAnswer ramsey_classical(std::span<const BigInt> ms) {
  require_classical(ms);
  const auto c = classical_counts(ms);
  if (c.even >= 2 && c.even % 2 == 0) return {c.base + 1, "k-even", std::nullopt};
  return {c.base + 2, "otherwise", std::nullopt};
}

StarCriticalAnswer star_critical_classical(std::span<const BigInt> ms) {
  const RamseyAnswer r = ramsey_classical(ms);
  const auto c = classical_counts(ms);
  if (c.even >= 2 && c.even % 2 == 0) return {c.base + 1 - c.even / 2, r.r, "k-even"};
  return {1, r.r, "otherwise"};
}

RamseyAnswer ramsey_tminus1_xq(const BigInt& m, int t) {
  const auto v = xq(m, t);
  if (v.special) return {v.x, "x=tq+1,x-q-odd", std::nullopt};
  return {v.x + 1, "otherwise", std::nullopt};
}

StarCriticalAnswer star_critical_tminus1_xq(const BigInt& m, int t) {
  const auto v = xq(m, t);
  const BigInt r = ramsey_tminus1_xq(m, t).r;
  if (v.special) return {v.x - 1, r, "x=tq+1,x-q-odd"};
  return {1, r, "otherwise"};
}

StarCriticalAnswer star_critical_uniform(const BigInt& m, int s, int t) {
  const UniformCase c = classify_uniform(m, s, t);
  StarCriticalAnswer answer;
  answer.r = ramsey_uniform(m, s, t).r;
  if (c.shape == UniformShape::OddMultiplePlusOne && t % 2 == 0) {
    if (2 * s <= t) {
      answer.rstar = 2 * c.k * t + t / 2 + 1;
      answer.branch = "m=(2k+1)s+1,t-even,s<=t/2";
    } else {
      answer.rstar = 2 * c.k * t + s + 1;
      answer.branch = "m=(2k+1)s+1,t-even,s>t/2";
    }
  } else {
    answer.rstar = 1;
    answer.branch = "otherwise";
  }
  return answer;
}

BigInt b_threshold(const BigInt& m, int s, int t) {
  const UniformCase c = classify_uniform(m, s, t);
  const BigInt& k = c.k;
  switch (c.shape) {
    case UniformShape::EvenMultiple: return (2 * k - 1) * t + s;
    case UniformShape::EvenPlusRemainder: return 2 * k * t + c.a;
    case UniformShape::OddMultiple: return 2 * k * t + s;
    case UniformShape::OddMultiplePlusOne:
      if (t % 2 == 0) {
        throw Error(ErrorCode::NotApplicable,
                    "no degree threshold for m = (2k+1)s+1 with t even");
      }
      return (2 * k + 1) * t + 1;
    case UniformShape::OddPlusRemainder: return (2 * k + 1) * t + c.a;
  }
  throw Error(ErrorCode::InternalInconsistency, "unhandled uniform shape");
}

std::optional<ColorSet> degree_forces_star(std::span<const std::int64_t> degrees,
                                           const StarFamily& family) {
  const int t = family.t();
  const int s = family.s();
  if (static_cast<int>(degrees.size()) != t) {
    throw Error(ErrorCode::InvalidInput, "degree vector length must equal t");
  }
  if (family.is_uniform()) {
    std::vector<int> order(t);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return degrees[x] > degrees[y]; });
    BigInt sum = 0;
    ColorSet set = 0;
    for (int j = 0; j < s; ++j) {
      sum += degrees[order[j]];
      set |= color_bit(order[j] + 1);
    }
    if (sum >= family.value_at(0)) return set;
    return std::nullopt;
  }
  for (std::size_t r = 0; r < family.size(); ++r) {
    const ColorSet set = family.subset_at(r);
    BigInt sum = 0;
    for (int c : colors_of(set)) sum += degrees[c - 1];
    if (sum >= family.value_at(r)) return set;
  }
  return std::nullopt;
}

}  // namespace starramsey
