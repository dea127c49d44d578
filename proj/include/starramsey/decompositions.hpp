#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace starramsey {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class FactorKind { OneFactor, TwoFactor, Hamiltonian };

std::string to_string(FactorKind kind);

// Edge-disjoint spanning factors covering every edge of K_n exactly once.
// Hamiltonian (and two-factor) factors list their edges in traversal order
// starting at vertex 0.
struct Factorization {
  int n = 0;
  FactorKind kind = FactorKind::OneFactor;
  std::vector<std::vector<Edge>> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Circle method: vertex n-1 is fixed, the rest rotate. n - 1 perfect
/// matchings. Throws OddOrder for odd n, InvalidInput for n < 2.
Factorization one_factorization(int n);

/// Walecki zigzag decomposition of K_n, n odd, into (n-1)/2 Hamiltonian
/// cycles. Throws EvenOrder for even n, InvalidInput for n < 3.
Factorization hamiltonian_decomposition(int n);

/// Same cycles as hamiltonian_decomposition, labeled as 2-factors.
Factorization two_factorization(int n);

/// Vertex sequence of a cycle given as a traversal-ordered edge list.
std::vector<int> cycle_vertices(std::span<const Edge> cycle);

/// Splits a spanning path into alternate edges, walking from the endpoint
/// with the smaller id. The first matching takes the first edge. Throws
/// NotAPath if the edges do not form a simple path on |edges|+1 vertices.
std::pair<std::vector<Edge>, std::vector<Edge>> split_path_into_matchings(
    std::span<const Edge> path);

/// Recounts edges, degrees and connectivity; returns a description of the
/// first broken invariant, or nullopt if the factorization is valid.
std::optional<std::string> check_factorization(const Factorization& f);

}  // namespace starramsey
