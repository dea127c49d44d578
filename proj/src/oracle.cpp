#include "starramsey/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "starramsey/error.hpp"
#include "starramsey/formulas.hpp"

namespace starramsey {
namespace {

constexpr int kMaxSearchOrder = 64;
constexpr std::size_t kMaxLookaheadStates = std::size_t{1} << 22;
constexpr std::uint64_t kFlushEvery = 256;

// Immutable description of one search: host graph, edge order and the
// per-vertex pruning tables.
struct Problem {
  int n = 0;
  int t = 0;
  std::vector<Edge> edges;
  std::vector<int> host_degree;
  std::optional<int> center;
  bool symmetry = false;

  // For each color (0-based), the color sets containing it with their m_A.
  std::vector<std::vector<std::pair<ColorSet, std::int64_t>>> sets_with_color;

  // Degree lookahead: reach[index(d)] is the largest total degree that some
  // star-free color-degree vector dominating d attains, or -1 when d itself
  // already carries a star. Coordinates are capped at `bound`.
  bool lookahead = false;
  std::vector<int> bound;
  std::vector<std::size_t> stride;
  std::vector<std::int32_t> reach;
};

bool star_free(std::span<const int> d, const StarFamily& family) {
  for (std::size_t r = 0; r < family.size(); ++r) {
    std::int64_t sum = 0;
    for (int c : colors_of(family.subset_at(r))) sum += d[c - 1];
    if (sum >= family.value_at(r)) return false;
  }
  return true;
}

void build_lookahead(Problem& p, const StarFamily& family) {
  const int t = p.t;
  const int max_degree = *std::max_element(p.host_degree.begin(), p.host_degree.end());
  p.bound.assign(t, max_degree);
  for (std::size_t r = 0; r < family.size(); ++r) {
    for (int c : colors_of(family.subset_at(r))) {
      p.bound[c - 1] = static_cast<int>(
          std::min<std::int64_t>(p.bound[c - 1], family.value_at(r) - 1));
    }
  }
  std::size_t states = 1;
  p.stride.assign(t, 0);
  for (int c = 0; c < t; ++c) {
    p.stride[c] = states;
    states *= static_cast<std::size_t>(p.bound[c]) + 1;
    if (states > kMaxLookaheadStates) return;
  }
  p.reach.assign(states, -1);
  std::vector<int> d(t, 0);
  // Walk indices downward so every successor d + e_c is already filled in.
  for (std::size_t idx = states; idx-- > 0;) {
    std::size_t rest = idx;
    int total = 0;
    for (int c = 0; c < t; ++c) {
      d[c] = static_cast<int>(rest % (p.bound[c] + 1));
      rest /= p.bound[c] + 1;
      total += d[c];
    }
    if (!star_free(d, family)) continue;
    int best = total;
    for (int c = 0; c < t; ++c) {
      if (d[c] < p.bound[c]) best = std::max(best, p.reach[idx + p.stride[c]]);
    }
    p.reach[idx] = best;
  }
  p.lookahead = true;
}

Problem make_problem(int n, const StarFamily& family, std::span<const Edge> host_missing,
                     const SearchConfig& config) {
  if (n < 1 || n > kMaxSearchOrder) {
    throw Error(ErrorCode::InvalidInput, "search order must lie in [1, 64]");
  }
  if (config.node_budget < 1) throw Error(ErrorCode::InvalidInput, "node budget must be >= 1");
  if (config.break_color_symmetry && !family.is_uniform()) {
    throw Error(ErrorCode::InvalidInput, "color symmetry breaking needs a uniform family");
  }
  Problem p;
  p.n = n;
  p.t = family.t();
  p.symmetry = config.break_color_symmetry;

  std::set<Edge> absent;
  for (const auto& e : host_missing) {
    if (e.u == e.v || e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::InvalidInput, "host pair out of range");
    }
    absent.insert(Edge(e.u, e.v));
  }
  if (!absent.empty()) {
    // The removed pairs must form a star; its center is their common vertex.
    const Edge first = *absent.begin();
    for (int candidate : {first.u, first.v}) {
      if (std::all_of(absent.begin(), absent.end(), [&](const Edge& e) {
            return e.u == candidate || e.v == candidate;
          })) {
        p.center = candidate;
        break;
      }
    }
    if (!p.center) throw Error(ErrorCode::InvalidInput, "removed pairs do not form a star");
  }

  p.host_degree.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (absent.count(Edge(u, v)) != 0) continue;
      p.edges.emplace_back(u, v);
      ++p.host_degree[u];
      ++p.host_degree[v];
    }
  }

  p.sets_with_color.resize(p.t);
  for (std::size_t r = 0; r < family.size(); ++r) {
    const ColorSet set = family.subset_at(r);
    for (int c : colors_of(set)) p.sets_with_color[c - 1].emplace_back(set, family.value_at(r));
  }
  if (config.degree_lookahead) build_lookahead(p, family);
  return p;
}

// Shared between workers: the node budget and cancellation.
struct Shared {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
};

struct Cancelled {};

// Branch-local search state.
class Search {
 public:
  Search(const Problem& p, Shared& shared, std::size_t task = 0)
      : p_(p),
        shared_(shared),
        task_(task),
        colors_(p.edges.size(), 0),
        degree_(static_cast<std::size_t>(p.n) * p.t, 0),
        index_(p.n, 0) {}

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }

  // Depth-first from `depth`; true when a full coloring was reached.
  bool dfs(std::size_t depth) {
    if (depth == p_.edges.size()) return true;
    const int limit = allowed_colors(depth);
    for (int c = 1; c <= limit; ++c) {
      if (!place(depth, c)) continue;
      count_node();
      if (dfs(depth + 1)) return true;
      unplace(depth);
    }
    return false;
  }

  // Enumerates every surviving assignment of the first `depth` edges in
  // order, calling emit(colors, nodes visited since the previous emit).
  template <typename Emit>
  void enumerate_prefixes(std::size_t at, std::size_t depth, Emit&& emit) {
    if (at == depth) {
      emit(colors_, take_pending_prefix());
      return;
    }
    const int limit = allowed_colors(at);
    for (int c = 1; c <= limit; ++c) {
      if (!place(at, c)) continue;
      count_node();
      ++prefix_pending_;
      enumerate_prefixes(at + 1, depth, emit);
      unplace(at);
    }
  }

  std::uint64_t take_pending_prefix() {
    auto v = prefix_pending_;
    prefix_pending_ = 0;
    return v;
  }

  void replay(std::span<const std::uint8_t> prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (!place(i, prefix[i])) {
        throw Error(ErrorCode::InternalInconsistency, "prefix replay failed");
      }
    }
  }

  void flush() {
    shared_.spent.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

 private:
  int allowed_colors(std::size_t depth) const {
    if (!p_.symmetry) return p_.t;
    int used = 0;
    for (std::size_t i = 0; i < depth; ++i) used = std::max<int>(used, colors_[i]);
    return std::min(p_.t, used + 1);
  }

  void count_node() {
    ++nodes_;
    ++pending_;
    if (shared_.spent.load(std::memory_order_relaxed) + pending_ > shared_.budget) {
      flush();
      shared_.stop.store(true);
      throw Error(ErrorCode::BudgetExhausted, "node budget exhausted");
    }
    if (pending_ >= kFlushEvery) {
      flush();
      if (shared_.stop.load(std::memory_order_relaxed) ||
          task_ > shared_.first_found.load(std::memory_order_relaxed)) {
        throw Cancelled{};
      }
    }
  }

  int& deg(int v, int c) { return degree_[static_cast<std::size_t>(v) * p_.t + c - 1]; }

  bool violates(int v, int c) {
    for (const auto& [set, m] : p_.sets_with_color[c - 1]) {
      std::int64_t sum = 0;
      for (ColorSet rest = set; rest != 0; rest &= rest - 1) {
        sum += deg(v, std::countr_zero(rest) + 1);
      }
      if (sum >= m) return true;
    }
    return false;
  }

  bool place(std::size_t depth, int c) {
    const Edge& e = p_.edges[depth];
    ++deg(e.u, c);
    ++deg(e.v, c);
    bool ok;
    if (p_.lookahead) {
      ok = deg(e.u, c) <= p_.bound[c - 1] && deg(e.v, c) <= p_.bound[c - 1];
      if (ok) {
        index_[e.u] += p_.stride[c - 1];
        index_[e.v] += p_.stride[c - 1];
        ok = p_.reach[index_[e.u]] >= p_.host_degree[e.u] &&
             p_.reach[index_[e.v]] >= p_.host_degree[e.v];
        if (!ok) {
          index_[e.u] -= p_.stride[c - 1];
          index_[e.v] -= p_.stride[c - 1];
        }
      }
    } else {
      ok = !violates(e.u, c) && !violates(e.v, c);
    }
    if (!ok) {
      --deg(e.u, c);
      --deg(e.v, c);
      return false;
    }
    colors_[depth] = static_cast<std::uint8_t>(c);
    return true;
  }

  void unplace(std::size_t depth) {
    const Edge& e = p_.edges[depth];
    const int c = colors_[depth];
    --deg(e.u, c);
    --deg(e.v, c);
    if (p_.lookahead) {
      index_[e.u] -= p_.stride[c - 1];
      index_[e.v] -= p_.stride[c - 1];
    }
    colors_[depth] = 0;
  }

  const Problem& p_;
  Shared& shared_;
  std::size_t task_;
  std::vector<std::uint8_t> colors_;
  std::vector<int> degree_;
  std::vector<std::size_t> index_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  std::uint64_t prefix_pending_ = 0;
};

ColoredGraph to_graph(const Problem& p, std::span<const std::uint8_t> colors) {
  ColoredGraph g(p.n, p.t);
  g.set_center(p.center);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    g.set_color(p.edges[i].u, p.edges[i].v, colors[i]);
  }
  return g;
}

SearchOutcome run_sequential(const Problem& p, Shared& shared) {
  Search search(p, shared);
  bool found = search.dfs(0);
  search.flush();
  SearchOutcome out;
  out.nodes_explored = search.nodes() + 1;  // root
  if (found) out.coloring = to_graph(p, search.colors());
  return out;
}

struct Prefix {
  std::vector<std::uint8_t> colors;
  std::uint64_t nodes_before = 0;  // prefix-level nodes first visited on the way here
};

struct TaskResult {
  bool found = false;
  std::uint64_t nodes = 0;
  std::vector<std::uint8_t> colors;
};

SearchOutcome run_partitioned(const Problem& p, Shared& shared, std::size_t depth,
                              int threads) {
  std::vector<Prefix> prefixes;
  std::uint64_t tail = 0;
  {
    Search splitter(p, shared);
    splitter.enumerate_prefixes(0, depth,
                                [&](const std::vector<std::uint8_t>& colors, std::uint64_t nodes) {
                                  prefixes.push_back({
                                      {colors.begin(), colors.begin() + depth}, nodes});
                                });
    tail = splitter.take_pending_prefix();
    splitter.flush();
  }

  std::vector<TaskResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= prefixes.size() || shared.stop.load()) return;
      if (task > shared.first_found.load()) continue;
      Search search(p, shared, task);
      try {
        search.replay(prefixes[task].colors);
        const bool found = search.dfs(depth);
        search.flush();
        results[task].found = found;
        results[task].nodes = search.nodes();
        if (found) {
          results[task].colors = search.colors();
          std::size_t seen = shared.first_found.load();
          while (task < seen && !shared.first_found.compare_exchange_weak(seen, task)) {
          }
        }
      } catch (const Cancelled&) {
        search.flush();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        shared.stop.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(prefixes.size())));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  // Replay the sequential order: everything up to and including the first
  // prefix whose subtree holds a coloring.
  SearchOutcome out;
  out.nodes_explored = 1;
  for (std::size_t j = 0; j < prefixes.size(); ++j) {
    out.nodes_explored += prefixes[j].nodes_before + results[j].nodes;
    if (results[j].found) {
      out.coloring = to_graph(p, results[j].colors);
      return out;
    }
  }
  out.nodes_explored += tail;
  return out;
}

std::uint64_t remaining(std::uint64_t budget, std::uint64_t used) {
  return used >= budget ? 0 : budget - used;
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("RAMSEY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchOutcome exists_avoidance_coloring(int n, const StarFamily& family,
                                        std::span<const Edge> host_missing,
                                        const SearchConfig& config) {
  const Problem p = make_problem(n, family, host_missing, config);
  Shared shared;
  shared.budget = config.node_budget - 1;  // the root is node 1
  const std::size_t depth =
      std::min<std::size_t>(std::max(config.parallel_width, 0), p.edges.size());
  if (depth == 0 || depth == p.edges.size()) return run_sequential(p, shared);
  const int threads = config.threads > 0 ? config.threads : default_thread_count();
  return run_partitioned(p, shared, depth, threads);
}

OracleResult brute_force_ramsey(const StarFamily& family, const SearchConfig& config) {
  OracleResult result;
  SearchConfig step = config;
  std::optional<ColoredGraph> last;
  for (int n = 1; n <= kMaxSearchOrder; ++n) {
    step.node_budget = remaining(config.node_budget, result.nodes_explored);
    try {
      if (step.node_budget == 0) throw Error(ErrorCode::BudgetExhausted, "node budget exhausted");
      auto outcome = exists_avoidance_coloring(n, family, {}, step);
      result.nodes_explored += outcome.nodes_explored;
      if (!outcome.coloring) {
        result.value = n;
        result.witness_coloring = std::move(last);
        return result;
      }
      last = std::move(outcome.coloring);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
      result.nodes_explored = config.node_budget;
      return result;
    }
  }
  throw Error(ErrorCode::InvalidInput, "Ramsey number exceeds the searchable order 64");
}

OracleResult brute_force_star_critical(std::int64_t m, int s, int t,
                                       const SearchConfig& config) {
  const BigInt ramsey = ramsey_uniform(m, s, t).r;
  if (ramsey > kMaxSearchOrder) {
    throw Error(ErrorCode::InvalidInput, "Ramsey number exceeds the searchable order 64");
  }
  const int n = static_cast<int>(ramsey);
  const int center = n - 1;
  const StarFamily family = StarFamily::uniform(m, s, t);

  OracleResult result;
  SearchConfig step = config;
  std::optional<ColoredGraph> last;
  for (int spokes = 0; spokes <= n - 1; ++spokes) {
    std::vector<Edge> removed;
    for (int j = spokes; j < center; ++j) removed.emplace_back(j, center);
    step.node_budget = remaining(config.node_budget, result.nodes_explored);
    try {
      if (step.node_budget == 0) throw Error(ErrorCode::BudgetExhausted, "node budget exhausted");
      auto outcome = exists_avoidance_coloring(n, family, removed, step);
      result.nodes_explored += outcome.nodes_explored;
      if (!outcome.coloring) {
        result.value = std::max(spokes, 1);
        result.witness_coloring = std::move(last);
        return result;
      }
      last = std::move(outcome.coloring);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExhausted) throw;
      result.nodes_explored = config.node_budget;
      return result;
    }
  }
  throw Error(ErrorCode::InternalInconsistency,
              "K_N admits an avoidance coloring, so N is not the Ramsey number");
}

}  // namespace starramsey
