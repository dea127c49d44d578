#include "starramsey/colored_graph.hpp"

#include <string>

#include "starramsey/error.hpp"

namespace starramsey {

ColoredGraph::ColoredGraph(int n, int t) : n_(n), t_(t) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "vertex count must be nonnegative");
  if (t < 1 || t > 255) throw Error(ErrorCode::InvalidInput, "color count must lie in [1, 255]");
  colors_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t ColoredGraph::index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw Error(ErrorCode::InvalidInput,
                "bad vertex pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  return static_cast<std::size_t>(u) * n_ + v;
}

void ColoredGraph::set_center(std::optional<int> center) {
  if (center && (*center < 0 || *center >= n_)) {
    throw Error(ErrorCode::InvalidInput, "center out of range");
  }
  center_ = center;
}

void ColoredGraph::set_color(int u, int v, int color) {
  if (color < 1 || color > t_) {
    throw Error(ErrorCode::InvalidInput, "color out of range: " + std::to_string(color));
  }
  colors_[index(u, v)] = static_cast<std::uint8_t>(color);
  colors_[index(v, u)] = static_cast<std::uint8_t>(color);
}

void ColoredGraph::remove_edge(int u, int v) {
  colors_[index(u, v)] = 0;
  colors_[index(v, u)] = 0;
}

std::vector<std::pair<Edge, int>> ColoredGraph::edges() const {
  std::vector<std::pair<Edge, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (int c = color(u, v); c != 0) out.emplace_back(Edge(u, v), c);
    }
  }
  return out;
}

std::vector<Edge> ColoredGraph::missing() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (color(u, v) == 0) out.emplace_back(u, v);
    }
  }
  return out;
}

void ColoredGraph::validate() const {
  for (const auto& e : missing()) {
    if (!center_ || (e.u != *center_ && e.v != *center_)) {
      throw Error(ErrorCode::InvalidInput, "missing pair {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) +
                                               "} is not incident to the center");
    }
  }
}

}  // namespace starramsey
