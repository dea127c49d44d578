#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace starramsey {

/// A set of colors drawn from {1, ..., t}, stored as a bitmask with bit i-1
/// standing for color i. Supports t <= 62.
using ColorSet = std::uint64_t;

inline constexpr int kMaxColors = 62;

constexpr ColorSet color_bit(int color) { return ColorSet{1} << (color - 1); }

ColorSet make_color_set(std::span<const int> colors);
ColorSet make_color_set(std::initializer_list<int> colors);

/// Colors in ascending order.
std::vector<int> colors_of(ColorSet set);

int color_count(ColorSet set);

bool contains(ColorSet set, int color);

/// Binomial coefficient; saturates at UINT64_MAX instead of overflowing.
std::uint64_t binomial(int n, int k);

/// Rank of an s-subset in colexicographic order (0-based). This is the index
/// used by the dense family storage.
std::uint64_t colex_rank(ColorSet set);

/// Inverse of colex_rank for subsets of size `size`.
ColorSet colex_unrank(std::uint64_t rank, int size);

/// Visits every `size`-subset of {1..t} in colex order.
void for_each_subset(int t, int size, const std::function<void(ColorSet)>& visit);

/// The cyclic window {i+1, ..., i+s} with every element reduced into [t]
/// (a multiple of t maps to t). Returned in generation order.
std::vector<int> window(int i, int s, int t);

ColorSet window_set(int i, int s, int t);

}  // namespace starramsey
