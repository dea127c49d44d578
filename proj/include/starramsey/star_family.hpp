#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "starramsey/color_set.hpp"

namespace starramsey {

// Star sizes m_A for every s-subset A of the t colors. Values are stored
// densely, indexed by the colex rank of A.
class StarFamily {
 public:
  /// `values[colex_rank(A)]` is m_A. Throws InvalidInput unless 1 <= s < t,
  /// t <= kMaxColors, there are exactly C(t,s) values and all are >= 1.
  StarFamily(int t, int s, std::vector<std::int64_t> values);

  /// Builds from explicit (A, m_A) entries; every s-subset must appear once.
  static StarFamily from_entries(
      int t, int s, std::span<const std::pair<ColorSet, std::int64_t>> entries);

  static StarFamily uniform(std::int64_t m, int s, int t);

  int t() const noexcept { return t_; }
  int s() const noexcept { return s_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::int64_t value(ColorSet set) const;
  std::int64_t value_at(std::size_t rank) const { return values_[rank]; }
  ColorSet subset_at(std::size_t rank) const {
    return colex_unrank(rank, s_);
  }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  bool is_uniform() const noexcept;

  /// Applies the color relabeling i -> perm[i-1] (perm is a permutation of
  /// 1..t) to every index set.
  StarFamily relabeled(std::span<const int> perm) const;

  friend bool operator==(const StarFamily&, const StarFamily&) = default;

 private:
  int t_;
  int s_;
  std::vector<std::int64_t> values_;
};

/// Upper bound on C(t,s) accepted for dense storage.
inline constexpr std::uint64_t kMaxFamilySize = std::uint64_t{1} << 22;

}  // namespace starramsey
