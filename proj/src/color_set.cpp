#include "starramsey/color_set.hpp"

#include <bit>
#include <limits>

#include "starramsey/error.hpp"

namespace starramsey {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::EvenOrder: return "EvenOrder";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::ColorCountMismatch: return "ColorCountMismatch";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

ColorSet make_color_set(std::span<const int> colors) {
  ColorSet set = 0;
  for (int c : colors) {
    if (c < 1 || c > kMaxColors) {
      throw Error(ErrorCode::InvalidInput, "color out of range: " + std::to_string(c));
    }
    set |= color_bit(c);
  }
  return set;
}

ColorSet make_color_set(std::initializer_list<int> colors) {
  return make_color_set(std::span<const int>(colors.begin(), colors.size()));
}

std::vector<int> colors_of(ColorSet set) {
  std::vector<int> out;
  out.reserve(std::popcount(set));
  while (set != 0) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return out;
}

int color_count(ColorSet set) { return std::popcount(set); }

bool contains(ColorSet set, int color) { return (set & color_bit(color)) != 0; }

__extension__ using Wide = unsigned __int128;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays exact because result = C(n-k+i-1, i-1).
    Wide next = static_cast<Wide>(result) * (n - k + i) / i;
    if (next > kMax) return kMax;
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

std::uint64_t colex_rank(ColorSet set) {
  std::uint64_t rank = 0;
  int j = 1;
  while (set != 0) {
    int c = std::countr_zero(set);
    rank += binomial(c, j);
    ++j;
    set &= set - 1;
  }
  return rank;
}

ColorSet colex_unrank(std::uint64_t rank, int size) {
  ColorSet set = 0;
  for (int j = size; j >= 1; --j) {
    int c = j - 1;
    while (binomial(c + 1, j) <= rank) ++c;
    rank -= binomial(c, j);
    set |= ColorSet{1} << c;
  }
  return set;
}

void for_each_subset(int t, int size, const std::function<void(ColorSet)>& visit) {
  if (size < 0 || size > t) return;
  if (size == 0) {
    visit(0);
    return;
  }
  // Gosper's hack enumerates fixed-popcount masks in increasing numeric order,
  // which is exactly colex order.
  ColorSet set = (ColorSet{1} << size) - 1;
  const ColorSet limit = ColorSet{1} << t;
  while (set < limit) {
    visit(set);
    ColorSet low = set & (~set + 1);
    ColorSet ripple = set + low;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
}

std::vector<int> window(int i, int s, int t) {
  std::vector<int> out;
  out.reserve(s);
  for (int j = 1; j <= s; ++j) out.push_back((i + j - 1) % t + 1);
  return out;
}

ColorSet window_set(int i, int s, int t) {
  auto w = window(i, s, t);
  return make_color_set(w);
}

}  // namespace starramsey
