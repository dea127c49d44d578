#include "starramsey/ell_profile.hpp"

#include <algorithm>
#include <unordered_map>

#include "starramsey/error.hpp"

namespace starramsey {
namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// One reduced equation sum_i coef[i] x_i = rhs with a leading 1 at `pivot`.
struct PivotRow {
  int pivot;
  std::vector<Rational> coef;
  Rational rhs;
};

// Spreads the membership bits of a color set into 2-bit counters so that
// adding the codes of up to three sets yields their multiset union.
std::uint64_t spread(ColorSet set) {
  std::uint64_t out = 0;
  for (int c : colors_of(set)) out |= std::uint64_t{1} << (2 * (c - 1));
  return out;
}

}  // namespace

BigInt EllProfile::ell_sum() const {
  BigInt total = 0;
  for (auto v : ell) total += v;
  return total;
}

SumConditionResult sum_condition(const StarFamily& family) {
  const int t = family.t();
  SumConditionResult result;

  std::vector<PivotRow> pivots;
  std::vector<bool> pivoted(t, false);
  std::size_t rank = 0;
  for (; rank < family.size() && static_cast<int>(pivots.size()) < t; ++rank) {
    std::vector<Rational> row(t, Rational(0));
    for (int c : colors_of(family.subset_at(rank))) row[c - 1] = 1;
    Rational rhs = family.value_at(rank);
    for (const auto& p : pivots) {
      if (row[p.pivot] == 0) continue;
      Rational factor = row[p.pivot];
      for (int i = 0; i < t; ++i) row[i] -= factor * p.coef[i];
      rhs -= factor * p.rhs;
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
    if (lead == row.end()) {
      if (rhs != 0) {
        result.residual = rhs;
        break;
      }
      continue;
    }
    int col = static_cast<int>(lead - row.begin());
    Rational scale = row[col];
    for (auto& v : row) v /= scale;
    rhs /= scale;
    pivoted[col] = true;
    pivots.push_back({col, std::move(row), std::move(rhs)});
  }

  if (!result.residual) {
    // Each pivot row vanishes on the pivot columns inserted before it, so
    // back-substitute in reverse insertion order. Free columns stay zero.
    std::vector<Rational> x(t, Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational value = it->rhs;
      for (int i = 0; i < t; ++i) {
        if (i != it->pivot && it->coef[i] != 0) value -= it->coef[i] * x[i];
      }
      x[it->pivot] = value;
    }
    // Every equation, including those used as pivots, must hold exactly.
    for (std::size_t r = 0; r < family.size(); ++r) {
      Rational lhs = 0;
      for (int c : colors_of(family.subset_at(r))) lhs += x[c - 1];
      if (lhs != family.value_at(r)) {
        result.residual = Rational(family.value_at(r)) - lhs;
        break;
      }
    }
    if (!result.residual) {
      result.holds = true;
      result.weights = std::move(x);
      return result;
    }
  }

  if (family.size() <= 64 && t <= 31) {
    result.violation = find_multiset_violation(family, 3);
  }
  return result;
}

std::optional<MultisetViolation> find_multiset_violation(const StarFamily& family,
                                                         int max_b) {
  const std::size_t count = family.size();
  if (count > 64 || family.t() > 31) {
    throw Error(ErrorCode::InvalidInput, "multiset enumeration limited to C(t,s) <= 64, t <= 31");
  }
  if (max_b > 3) throw Error(ErrorCode::InvalidInput, "multiset size limited to 3");

  std::vector<std::uint64_t> codes(count);
  for (std::size_t r = 0; r < count; ++r) codes[r] = spread(family.subset_at(r));

  for (int b = 2; b <= max_b; ++b) {
    struct Seen {
      std::int64_t sum;
      std::vector<std::size_t> members;
    };
    std::unordered_map<std::uint64_t, Seen> by_union;
    std::vector<std::size_t> idx(b, 0);
    while (true) {
      std::uint64_t key = 0;
      std::int64_t sum = 0;
      for (auto r : idx) {
        key += codes[r];
        sum += family.value_at(r);
      }
      auto [it, inserted] = by_union.try_emplace(key, Seen{sum, idx});
      if (!inserted && it->second.sum != sum) {
        MultisetViolation v;
        for (auto r : it->second.members) v.left.push_back(family.subset_at(r));
        for (auto r : idx) v.right.push_back(family.subset_at(r));
        v.left_sum = it->second.sum;
        v.right_sum = sum;
        return v;
      }
      // Next non-decreasing index tuple.
      int pos = b - 1;
      while (pos >= 0 && idx[pos] == count - 1) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < b; ++j) idx[j] = idx[pos];
    }
  }
  return std::nullopt;
}

EllProfile ell_profile(const StarFamily& family) {
  const int t = family.t();
  const int s = family.s();
  auto condition = sum_condition(family);
  if (!condition.holds) {
    throw Error(ErrorCode::HypothesisViolated,
                "star sizes are not additive over colors (equal-union sum condition fails)");
  }

  std::vector<BigInt> ell(t);
  std::vector<BigInt> rem(t);
  for (int i = 1; i <= t; ++i) {
    const ColorSet w = window_set(i, s, t);
    BigInt n_i = 0;
    for (int j : colors_of(w)) n_i += family.value((w & ~color_bit(j)) | color_bit(i));
    n_i -= BigInt(s - 1) * family.value(w);
    ell[i - 1] = floor_div(n_i - 1, s);
    rem[i - 1] = n_i - s * ell[i - 1];
  }

  if (std::adjacent_find(rem.begin(), rem.end(), std::not_equal_to<>()) != rem.end()) {
    throw Error(ErrorCode::InternalInconsistency,
                "remainders a_i differ although the sum condition holds");
  }
  for (int i = 0; i < t; ++i) {
    if (ell[i] < 0) {
      throw Error(ErrorCode::OutOfTheoremRange,
                  "ell_" + std::to_string(i + 1) + " is negative");
    }
  }

  EllProfile profile;
  profile.a = static_cast<int>(rem[0]);
  for (const auto& v : ell) {
    profile.ell.push_back(static_cast<std::int64_t>(v));
    if (v % 2 != 0) ++profile.k;
  }
  for (std::size_t r = 0; r < family.size(); ++r) {
    BigInt sum = 0;
    for (int c : colors_of(family.subset_at(r))) sum += profile.ell[c - 1];
    if (sum != BigInt(family.value_at(r)) - profile.a) {
      throw Error(ErrorCode::InternalInconsistency, "subset identity sum ell = m_A - a fails");
    }
  }
  return profile;
}

}  // namespace starramsey
