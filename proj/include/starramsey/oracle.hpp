#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "starramsey/colored_graph.hpp"
#include "starramsey/star_family.hpp"

namespace starramsey {

struct SearchConfig {
  std::uint64_t node_budget = 1'000'000'000;
  /// Pins the first edge to color 1 and introduces colors in ascending
  /// order. Only valid for uniform families.
  bool break_color_symmetry = false;
  /// Number of top tree levels whose subtrees are handed to workers.
  int parallel_width = 0;
  /// Worker count; 0 means RAMSEY_THREADS or all hardware threads.
  int threads = 0;
  /// Rejects a branch as soon as some vertex can no longer reach its full
  /// degree without a star, instead of waiting for the star itself.
  bool degree_lookahead = true;
};

struct SearchOutcome {
  /// Lexicographically least avoidance coloring in edge order, if any.
  std::optional<ColoredGraph> coloring;
  std::uint64_t nodes_explored = 0;
};

/// Depth-first, edge-by-edge color assignment over K_n minus `host_missing`
/// in lexicographic edge order. The node count is that of the sequential
/// search regardless of threads. Throws BudgetExhausted when the budget runs
/// out, InvalidInput for a malformed host or symmetry breaking on a
/// non-uniform family.
SearchOutcome exists_avoidance_coloring(int n, const StarFamily& family,
                                        std::span<const Edge> host_missing,
                                        const SearchConfig& config);

struct OracleResult {
  /// nullopt when the node budget ran out.
  std::optional<std::int64_t> value;
  std::uint64_t nodes_explored = 0;
  std::optional<ColoredGraph> witness_coloring;
};

/// Least n such that K_n has no avoidance coloring, found by ascending n.
/// The witness is the avoidance coloring of K_{n-1}.
OracleResult brute_force_ramsey(const StarFamily& family, const SearchConfig& config);

/// Least k >= 1 such that K_N minus a star keeping k spokes at vertex N-1
/// has no avoidance coloring, N the uniform Ramsey number. The witness is the
/// avoidance coloring with k - 1 spokes.
OracleResult brute_force_star_critical(std::int64_t m, int s, int t,
                                       const SearchConfig& config);

/// Thread count from RAMSEY_THREADS, falling back to hardware concurrency.
int default_thread_count();

}  // namespace starramsey
