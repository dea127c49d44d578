#include "starramsey/constructions.hpp"

#include <numeric>

#include "starramsey/decompositions.hpp"
#include "starramsey/error.hpp"
#include "starramsey/verifier.hpp"

namespace starramsey {
namespace {

int checked_order(const BigInt& order) {
  if (order > kMaxConstructionOrder) {
    throw Error(ErrorCode::InvalidInput, "construction order " + order.str() +
                                             " exceeds " +
                                             std::to_string(kMaxConstructionOrder));
  }
  return static_cast<int>(order);
}

// Colors factors in factorization order: the first counts[0] factors get
// color 1, the next counts[1] color 2, and so on.
void paint_factors(ColoredGraph& g, const Factorization& f,
                   const std::vector<std::int64_t>& counts) {
  const auto total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (total != static_cast<std::int64_t>(f.factors.size())) {
    throw Error(ErrorCode::InternalInconsistency,
                "color multiplicities do not match the number of factors");
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    for (std::int64_t j = 0; j < counts[c]; ++j, ++next) {
      for (const auto& e : f.factors[next]) g.set_color(e.u, e.v, static_cast<int>(c) + 1);
    }
  }
}

void self_verify(const ColoredGraph& g, const StarFamily& family, const char* what) {
  g.validate();
  if (auto w = find_star(g, family)) {
    throw Error(ErrorCode::InternalInconsistency,
                std::string(what) + " contains a star centered at " +
                    std::to_string(w->center));
  }
}

}  // namespace

LowerBoundCase lower_bound_case(const EllProfile& profile) {
  if (profile.a == 1 && profile.k >= 1 && profile.k % 2 == 0) {
    return LowerBoundCase::MatchingsOneShort;
  }
  if (profile.a == 1 && profile.k == 0) return LowerBoundCase::TwoFactors;
  if ((profile.ell_sum() + profile.a) % 2 != 0) return LowerBoundCase::ApexOverCore;
  return LowerBoundCase::Matchings;
}

ColoredGraph lower_bound_coloring(const StarFamily& family) {
  const EllProfile profile = ell_profile(family);
  const int t = family.t();
  const int a = profile.a;
  const BigInt sum = profile.ell_sum();
  std::vector<std::int64_t> counts = profile.ell;

  switch (lower_bound_case(profile)) {
    case LowerBoundCase::MatchingsOneShort: {
      // Color t carries the deficit unless ell_t = 0; then the highest odd
      // color (odd implies >= 1) takes its place.
      int deficit = t - 1;
      if (counts[deficit] == 0) {
        while (counts[deficit] % 2 == 0) --deficit;
      }
      --counts[deficit];
      const int n = checked_order(sum);
      ColoredGraph g(n, t);
      paint_factors(g, one_factorization(n), counts);
      self_verify(g, family, "lower-bound coloring");
      return g;
    }
    case LowerBoundCase::TwoFactors: {
      const int n = checked_order(sum + 1);
      ColoredGraph g(n, t);
      if (n > 1) {
        for (auto& c : counts) c /= 2;
        paint_factors(g, two_factorization(n), counts);
      }
      self_verify(g, family, "lower-bound coloring");
      return g;
    }
    case LowerBoundCase::ApexOverCore: {
      const int core = checked_order(sum + a - 1);
      counts[t - 1] += a - 2;
      ColoredGraph g(core + 1, t);
      paint_factors(g, one_factorization(core), counts);
      // Apex spokes: ell_i edges in color i, ell_t + a - 1 in color t.
      const int apex = core;
      int v = 0;
      for (int c = 1; c <= t; ++c) {
        std::int64_t spokes = profile.ell[c - 1] + (c == t ? a - 1 : 0);
        for (std::int64_t j = 0; j < spokes; ++j) g.set_color(apex, v++, c);
      }
      self_verify(g, family, "lower-bound coloring");
      return g;
    }
    case LowerBoundCase::Matchings: {
      const int n = checked_order(sum + a);
      counts[t - 1] += a - 1;
      ColoredGraph g(n, t);
      paint_factors(g, one_factorization(n), counts);
      self_verify(g, family, "lower-bound coloring");
      return g;
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "unhandled lower-bound case");
}

ColoredGraph star_critical_lower_coloring(const BigInt& m, int s, int t) {
  const UniformCase c = classify_uniform(m, s, t);
  if (c.shape != UniformShape::OddMultiplePlusOne || t % 2 != 0) {
    throw Error(ErrorCode::NotApplicable, "needs m = (2k+1)s+1 and t even");
  }
  const int n = checked_order((2 * c.k + 1) * t + 1);
  const int k = static_cast<int>(c.k);
  const int half = t / 2;
  const Factorization cycles = hamiltonian_decomposition(n);

  ColoredGraph g(n, t);
  g.set_center(0);
  std::vector<int> cut_ends(half);
  for (int i = 1; i <= half; ++i) {
    const auto& cycle = cycles.factors[i - 1];
    const auto order = cycle_vertices(cycle);
    cut_ends[i - 1] = order[1];
    std::vector<Edge> path;
    for (const auto& e : cycle) {
      if (e != Edge(0, order[1])) path.push_back(e);
    }
    auto [odd, even] = split_path_into_matchings(path);
    for (const auto& e : odd) g.set_color(e.u, e.v, 2 * i - 1);
    for (const auto& e : even) g.set_color(e.u, e.v, 2 * i);
  }
  for (int i = 1; i <= t; ++i) {
    for (int j = k * (i - 1) + 1 + half; j <= k * i + half; ++j) {
      for (const auto& e : cycles.factors[j - 1]) g.set_color(e.u, e.v, i);
    }
  }
  // Restored spokes take the color of the matching that skips their far end,
  // which is the odd matching of the same path.
  for (int i = 1; i <= s - half; ++i) g.set_color(0, cut_ends[i - 1], 2 * i - 1);

  self_verify(g, StarFamily::uniform(static_cast<std::int64_t>(m), s, t),
              "star-critical coloring");
  return g;
}

}  // namespace starramsey
