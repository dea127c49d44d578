#include "starramsey/verifier.hpp"

#include <algorithm>
#include <numeric>

#include "starramsey/error.hpp"

namespace starramsey {
namespace {

void require_matching_colors(const ColoredGraph& g, const StarFamily& family) {
  if (g.t() != family.t()) {
    throw Error(ErrorCode::ColorCountMismatch,
                "coloring uses t=" + std::to_string(g.t()) + " but family has t=" +
                    std::to_string(family.t()));
  }
}

std::optional<ColorSet> heavy_set_top_s(std::span<const std::int64_t> d, std::int64_t m,
                                        int s) {
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });
  std::int64_t sum = 0;
  ColorSet set = 0;
  for (int j = 0; j < s; ++j) {
    sum += d[order[j]];
    set |= color_bit(order[j] + 1);
  }
  if (sum >= m) return set;
  return std::nullopt;
}

std::optional<ColorSet> heavy_set_all(std::span<const std::int64_t> d,
                                      const StarFamily& family) {
  for (std::size_t r = 0; r < family.size(); ++r) {
    const ColorSet set = family.subset_at(r);
    std::int64_t sum = 0;
    for (int c : colors_of(set)) sum += d[c - 1];
    if (sum >= family.value_at(r)) return set;
  }
  return std::nullopt;
}

StarWitness make_witness(const ColoredGraph& g, const StarFamily& family, int center,
                         ColorSet set) {
  StarWitness w{center, set, {}};
  const auto m = family.value(set);
  for (int v = 0; v < g.n() && static_cast<std::int64_t>(w.leaves.size()) < m; ++v) {
    if (v == center) continue;
    if (int c = g.color(center, v); c != 0 && contains(set, c)) w.leaves.push_back(v);
  }
  return w;
}

std::optional<StarWitness> scan(const ColoredGraph& g, const StarFamily& family,
                                bool allow_shortcut) {
  require_matching_colors(g, family);
  const auto degrees = color_degree_vectors(g);
  const bool shortcut = allow_shortcut && family.is_uniform();
  for (int v = 0; v < g.n(); ++v) {
    auto set = shortcut ? heavy_set_top_s(degrees[v], family.value_at(0), family.s())
                        : heavy_set_all(degrees[v], family);
    if (set) return make_witness(g, family, v, *set);
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<std::int64_t>> color_degree_vectors(const ColoredGraph& g) {
  std::vector<std::vector<std::int64_t>> degrees(g.n(), std::vector<std::int64_t>(g.t(), 0));
  for (const auto& [e, c] : g.edges()) {
    ++degrees[e.u][c - 1];
    ++degrees[e.v][c - 1];
  }
  return degrees;
}

std::optional<StarWitness> find_star(const ColoredGraph& g, const StarFamily& family) {
  return scan(g, family, true);
}

std::optional<StarWitness> find_star_exhaustive(const ColoredGraph& g,
                                                const StarFamily& family) {
  return scan(g, family, false);
}

bool verify_no_star(const ColoredGraph& g, const StarFamily& family) {
  return !find_star(g, family).has_value();
}

}  // namespace starramsey
