#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "starramsey/colored_graph.hpp"
#include "starramsey/star_family.hpp"

namespace starramsey {

struct StarWitness {
  int center = 0;
  ColorSet colors = 0;
  std::vector<int> leaves;

  friend bool operator==(const StarWitness&, const StarWitness&) = default;
};

/// degrees[v][i-1] = number of present edges at v with color i.
std::vector<std::vector<std::int64_t>> color_degree_vectors(const ColoredGraph& g);

/// First star K_{1,m_A} colored within some A, scanning centers in ascending
/// order. Stars depend only on color degrees, so no subgraph search is made.
/// Leaves are the lowest-numbered qualifying neighbors. Throws
/// ColorCountMismatch when g.t() != family.t().
std::optional<StarWitness> find_star(const ColoredGraph& g, const StarFamily& family);

bool verify_no_star(const ColoredGraph& g, const StarFamily& family);

/// Same answer as find_star, but always enumerates all s-subsets instead of
/// using the top-s shortcut for uniform families.
std::optional<StarWitness> find_star_exhaustive(const ColoredGraph& g,
                                                const StarFamily& family);

}  // namespace starramsey
