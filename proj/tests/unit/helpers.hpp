#pragma once

#include <random>
#include <vector>

#include "starramsey/colored_graph.hpp"
#include "starramsey/star_family.hpp"

namespace starramsey::testing {

// Builds m_A = sum_{i in A} base[i] + shift with colex-ordered values.
inline StarFamily additive_family(int t, int s, const std::vector<std::int64_t>& base,
                                  std::int64_t shift) {
  std::vector<std::int64_t> values;
  for_each_subset(t, s, [&](ColorSet set) {
    std::int64_t v = shift;
    for (int c : colors_of(set)) v += base[c - 1];
    values.push_back(v);
  });
  return StarFamily(t, s, std::move(values));
}

// Random additive family with all entries in [1, max_value]; the induced
// profile has every ell_i >= 0.
inline StarFamily random_additive_family(std::mt19937_64& rng, int t, int s,
                                         std::int64_t max_value) {
  std::uniform_int_distribution<std::int64_t> shift_dist(1, 2 * s);
  while (true) {
    const std::int64_t shift = shift_dist(rng);
    const std::int64_t room = (max_value - shift) / s;
    if (room < 0) continue;
    std::uniform_int_distribution<std::int64_t> base_dist(0, room);
    std::vector<std::int64_t> base(t);
    for (auto& b : base) b = base_dist(rng);
    return additive_family(t, s, base, shift);
  }
}

inline ColoredGraph random_coloring(std::mt19937_64& rng, int n, int t) {
  ColoredGraph g(n, t);
  std::uniform_int_distribution<int> color(1, t);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_color(u, v, color(rng));
  }
  return g;
}

// Looks for a star by trying every leaf set of the right size; meant for n <= 8.
inline bool naive_has_star(const ColoredGraph& g, const StarFamily& f) {
  const int n = g.n();
  bool found = false;
  for (int v = 0; v < n && !found; ++v) {
    for_each_subset(f.t(), f.s(), [&](ColorSet a) {
      if (found) return;
      const std::int64_t need = f.value(a);
      for (std::uint32_t leaves = 0; leaves < (1u << n); ++leaves) {
        if (std::popcount(leaves) != need || (leaves >> v) & 1u) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
          if (!((leaves >> u) & 1u)) continue;
          ok = g.present(u, v) && contains(a, g.color(u, v));
        }
        if (ok) {
          found = true;
          return;
        }
      }
    });
  }
  return found;
}

}  // namespace starramsey::testing
