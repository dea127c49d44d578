#include "starramsey/star_family.hpp"

#include <algorithm>
#include <string>

#include "starramsey/error.hpp"

namespace starramsey {
namespace {

void check_shape(int t, int s) {
  if (t < 2 || t > kMaxColors) {
    throw Error(ErrorCode::InvalidInput, "t must lie in [2, 62], got " + std::to_string(t));
  }
  if (s < 1 || s >= t) {
    throw Error(ErrorCode::InvalidInput, "s must satisfy 1 <= s < t, got s=" + std::to_string(s));
  }
  if (binomial(t, s) > kMaxFamilySize) {
    throw Error(ErrorCode::InvalidInput, "C(t,s) too large for dense storage");
  }
}

}  // namespace

StarFamily::StarFamily(int t, int s, std::vector<std::int64_t> values)
    : t_(t), s_(s), values_(std::move(values)) {
  check_shape(t, s);
  if (values_.size() != binomial(t, s)) {
    throw Error(ErrorCode::InvalidInput,
                "expected " + std::to_string(binomial(t, s)) + " star sizes, got " +
                    std::to_string(values_.size()));
  }
  for (auto m : values_) {
    if (m < 1) throw Error(ErrorCode::InvalidInput, "star sizes must be positive");
  }
}

StarFamily StarFamily::from_entries(
    int t, int s, std::span<const std::pair<ColorSet, std::int64_t>> entries) {
  check_shape(t, s);
  const auto count = binomial(t, s);
  std::vector<std::int64_t> values(count, 0);
  std::vector<bool> seen(count, false);
  const ColorSet universe = (ColorSet{1} << t) - 1;
  for (const auto& [set, m] : entries) {
    if ((set & ~universe) != 0 || color_count(set) != s) {
      throw Error(ErrorCode::InvalidInput, "color set is not an s-subset of [t]");
    }
    auto rank = colex_rank(set);
    if (seen[rank]) throw Error(ErrorCode::InvalidInput, "duplicate color set");
    seen[rank] = true;
    values[rank] = m;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::InvalidInput, "every s-subset must be listed");
  }
  return StarFamily(t, s, std::move(values));
}

StarFamily StarFamily::uniform(std::int64_t m, int s, int t) {
  check_shape(t, s);
  return StarFamily(t, s, std::vector<std::int64_t>(binomial(t, s), m));
}

std::int64_t StarFamily::value(ColorSet set) const {
  if (color_count(set) != s_ || (set >> t_) != 0) {
    throw Error(ErrorCode::InvalidInput, "color set is not an s-subset of [t]");
  }
  return values_[colex_rank(set)];
}

bool StarFamily::is_uniform() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) ==
         values_.end();
}

StarFamily StarFamily::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != t_) {
    throw Error(ErrorCode::InvalidInput, "permutation size must equal t");
  }
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < t_; ++i) {
    if (check[i] != i + 1) throw Error(ErrorCode::InvalidInput, "not a permutation of [t]");
  }
  std::vector<std::int64_t> out(values_.size());
  for (std::size_t rank = 0; rank < values_.size(); ++rank) {
    ColorSet image = 0;
    for (int c : colors_of(subset_at(rank))) image |= color_bit(perm[c - 1]);
    out[colex_rank(image)] = values_[rank];
  }
  return StarFamily(t_, s_, std::move(out));
}

}  // namespace starramsey
