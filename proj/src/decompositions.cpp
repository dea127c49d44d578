#include "starramsey/decompositions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "starramsey/error.hpp"

namespace starramsey {

std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::OneFactor: return "one_factor";
    case FactorKind::TwoFactor: return "two_factor";
    case FactorKind::Hamiltonian: return "hamiltonian";
  }
  return "unknown";
}

Factorization one_factorization(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "1-factorization needs n >= 2");
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "1-factorization needs even n");
  const int ring = n - 1;
  Factorization f{n, FactorKind::OneFactor, {}};
  f.factors.reserve(ring);
  for (int r = 0; r < ring; ++r) {
    std::vector<Edge> matching;
    matching.reserve(n / 2);
    matching.emplace_back(r, n - 1);
    for (int j = 1; j < n / 2; ++j) {
      matching.emplace_back((r + j) % ring, (r - j + ring) % ring);
    }
    f.factors.push_back(std::move(matching));
  }
  return f;
}

Factorization hamiltonian_decomposition(int n) {
  if (n % 2 == 0) throw Error(ErrorCode::EvenOrder, "Hamiltonian decomposition needs odd n");
  if (n < 3) throw Error(ErrorCode::InvalidInput, "Hamiltonian decomposition needs n >= 3");
  const int p = (n - 1) / 2;
  const int ring = 2 * p;
  const int hub = n - 1;
  Factorization f{n, FactorKind::Hamiltonian, {}};
  f.factors.reserve(p);
  for (int i = 0; i < p; ++i) {
    // Zigzag i, i+1, i-1, i+2, i-2, ... around the ring, closed through the hub.
    std::vector<int> cycle{hub, i};
    for (int j = 1; static_cast<int>(cycle.size()) < n; ++j) {
      cycle.push_back((i + j) % ring);
      if (static_cast<int>(cycle.size()) < n) cycle.push_back((i - j + ring) % ring);
    }
    std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), 0), cycle.end());
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int j = 0; j < n; ++j) edges.emplace_back(cycle[j], cycle[(j + 1) % n]);
    f.factors.push_back(std::move(edges));
  }
  return f;
}

Factorization two_factorization(int n) {
  Factorization f = hamiltonian_decomposition(n);
  f.kind = FactorKind::TwoFactor;
  return f;
}

std::vector<int> cycle_vertices(std::span<const Edge> cycle) {
  if (cycle.size() < 3) throw Error(ErrorCode::InvalidInput, "cycle needs at least 3 edges");
  auto shares = [](const Edge& e, int x) { return e.u == x || e.v == x; };
  int first = shares(cycle[1], cycle[0].u) ? cycle[0].v : cycle[0].u;
  std::vector<int> out{first};
  int current = first;
  for (const auto& e : cycle.first(cycle.size() - 1)) {
    if (!shares(e, current)) throw Error(ErrorCode::InvalidInput, "edges are not in cycle order");
    current = e.u == current ? e.v : e.u;
    out.push_back(current);
  }
  return out;
}

std::pair<std::vector<Edge>, std::vector<Edge>> split_path_into_matchings(
    std::span<const Edge> path) {
  if (path.empty()) return {};
  std::map<int, std::vector<int>> adj;
  for (const auto& e : path) {
    if (e.u == e.v || e.u < 0) throw Error(ErrorCode::NotAPath, "invalid edge in path");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  if (adj.size() != path.size() + 1) {
    throw Error(ErrorCode::NotAPath, "edge count does not match a spanning path");
  }
  int start = -1;
  int endpoints = 0;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() > 2) throw Error(ErrorCode::NotAPath, "vertex of degree > 2");
    if (nbrs.size() == 1) {
      ++endpoints;
      if (start < 0) start = v;  // map order: smallest endpoint first
    }
  }
  if (endpoints != 2) throw Error(ErrorCode::NotAPath, "path must have exactly two endpoints");

  std::pair<std::vector<Edge>, std::vector<Edge>> out;
  int prev = -1;
  int current = start;
  for (std::size_t step = 0; step < path.size(); ++step) {
    const auto& nbrs = adj[current];
    int next = nbrs[0] != prev ? nbrs[0] : (nbrs.size() > 1 ? nbrs[1] : -1);
    if (next < 0) throw Error(ErrorCode::NotAPath, "path is disconnected");
    (step % 2 == 0 ? out.first : out.second).emplace_back(current, next);
    prev = current;
    current = next;
  }
  return out;
}

std::optional<std::string> check_factorization(const Factorization& f) {
  const int n = f.n;
  if (n < 1) return "order must be positive";
  std::vector<int> uses(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t idx = 0; idx < f.factors.size(); ++idx) {
    const auto& factor = f.factors[idx];
    const std::string where = "factor " + std::to_string(idx) + ": ";
    std::vector<int> degree(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : factor) {
      if (e.u < 0 || e.v >= n || e.u >= e.v) return where + "edge out of range or unordered";
      ++uses[static_cast<std::size_t>(e.u) * n + e.v];
      ++degree[e.u];
      ++degree[e.v];
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    const int want = f.kind == FactorKind::OneFactor ? 1 : 2;
    for (int v = 0; v < n; ++v) {
      if (degree[v] != want) {
        return where + "vertex " + std::to_string(v) + " has degree " +
               std::to_string(degree[v]) + ", expected " + std::to_string(want);
      }
    }
    if (f.kind == FactorKind::Hamiltonian) {
      std::vector<bool> seen(n, false);
      std::vector<int> stack{0};
      seen[0] = true;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = true;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != n) return where + "not a single spanning cycle";
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int c = uses[static_cast<std::size_t>(u) * n + v];
      if (c != 1) {
        return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} covered " +
               std::to_string(c) + " times";
      }
    }
  }
  return std::nullopt;
}

}  // namespace starramsey
