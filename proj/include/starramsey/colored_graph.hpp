#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "starramsey/decompositions.hpp"

namespace starramsey {

// A t-edge-coloring of K_n, possibly with a star removed at `center`.
// Color 0 marks an absent pair.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// Starts with every pair absent.
  ColoredGraph(int n, int t);

  int n() const noexcept { return n_; }
  int t() const noexcept { return t_; }
  std::optional<int> center() const noexcept { return center_; }
  void set_center(std::optional<int> center);

  int color(int u, int v) const { return colors_[index(u, v)]; }
  bool present(int u, int v) const { return color(u, v) != 0; }
  void set_color(int u, int v, int color);
  void remove_edge(int u, int v);

  /// Present edges in lexicographic order, with their colors.
  std::vector<std::pair<Edge, int>> edges() const;
  /// Absent pairs in lexicographic order.
  std::vector<Edge> missing() const;

  /// Throws InvalidInput if an absent pair is not incident to the center.
  void validate() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::size_t index(int u, int v) const;

  int n_ = 0;
  int t_ = 0;
  std::optional<int> center_;
  std::vector<std::uint8_t> colors_;
};

}  // namespace starramsey
