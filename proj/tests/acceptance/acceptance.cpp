// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starramsey/constructions.hpp"
#include "starramsey/decompositions.hpp"
#include "starramsey/error.hpp"
#include "starramsey/formulas.hpp"
#include "starramsey/oracle.hpp"
#include "starramsey/verifier.hpp"

using namespace starramsey;

namespace {

constexpr double kFormulaGridSeconds = 5.0;
constexpr double kOracleGridSeconds = 600.0;
constexpr std::uint64_t kOracleBudget = 1'000'000'000;
constexpr int kRandomFamilies = 50;
constexpr std::int64_t kRandomFamilyMax = 40;
constexpr int kDecompositionOrders = 1000;
constexpr int kMaxDecompositionOrder = 101;
constexpr int kDegreeSamples = 10'000;
constexpr std::uint64_t kSeed = 0x5eed5eedULL;

struct Outcome {
  bool pass = true;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      pass = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string point(std::int64_t m, int s, int t) {
  std::ostringstream os;
  os << "(m=" << m << ",s=" << s << ",t=" << t << ")";
  return os.str();
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

bool report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s [%d] %s (%llu cases, %.2fs)\n", out.pass ? "PASS" : "FAIL", id, title.c_str(),
              static_cast<unsigned long long>(out.cases), seconds_since(start));
  for (const auto& f : out.failures) std::printf("       %s\n", f.c_str());
  std::fflush(stdout);
  return out.pass;
}

SearchConfig oracle_config() {
  SearchConfig cfg;
  cfg.node_budget = kOracleBudget;
  cfg.parallel_width = 3;
  cfg.threads = default_thread_count();
  return cfg;
}

Outcome formula_grids() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int t = 2; t <= 6; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int m = s; m <= 15; ++m) {
        const auto u = ramsey_uniform(m, s, t);
        const auto g = ramsey_general(StarFamily::uniform(m, s, t));
        out.expect(u.r == g.r, "grid A " + point(m, s, t) + ": uniform " + str(u.r) +
                                   " vs general " + str(g.r));
      }
    }
  }
  for (int t = 2; t <= 8; ++t) {
    for (int m = std::max(1, t - 1); m <= 30; ++m) {
      const auto u = ramsey_uniform(m, t - 1, t);
      const auto x = ramsey_tminus1_xq(m, t);
      out.expect(u.r == x.r, "grid B " + point(m, t - 1, t) + ": uniform " + str(u.r) +
                                 " vs x,q form " + str(x.r));
      const auto us = star_critical_uniform(m, t - 1, t);
      const auto xs = star_critical_tminus1_xq(m, t);
      out.expect(us.rstar == xs.rstar, "grid B* " + point(m, t - 1, t) + ": uniform " +
                                           str(us.rstar) + " vs x,q form " + str(xs.rstar));
    }
  }
  for (int t = 2; t <= 6; ++t) {
    for (int m = 2; m <= 15; ++m) {
      const std::vector<BigInt> ms(t, m);
      const auto u = ramsey_uniform(m, 1, t);
      const auto c = ramsey_classical(ms);
      out.expect(u.r == c.r, "grid C " + point(m, 1, t) + ": uniform " + str(u.r) +
                                 " vs classical " + str(c.r));
      const auto us = star_critical_uniform(m, 1, t);
      const auto cs = star_critical_classical(ms);
      out.expect(us.rstar == cs.rstar, "grid C* " + point(m, 1, t) + ": uniform " +
                                           str(us.rstar) + " vs classical " + str(cs.rstar));
    }
  }
  const double elapsed = seconds_since(start);
  out.expect(elapsed < kFormulaGridSeconds, "runtime " + str(elapsed) + "s");
  return out;
}

struct GridPoint {
  std::int64_t m;
  int s, t;
};

Outcome oracle_grid() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = oracle_config();
  std::vector<GridPoint> grid;
  for (int m = 1; m <= 5; ++m) grid.push_back({m, 1, 2});
  for (int m = 1; m <= 3; ++m) grid.push_back({m, 1, 3});
  for (int m = 2; m <= 5; ++m) grid.push_back({m, 2, 3});
  grid.push_back({3, 2, 4});
  for (int m = 3; m <= 4; ++m) grid.push_back({m, 3, 4});
  for (const auto& p : grid) {
    const auto f = StarFamily::uniform(p.m, p.s, p.t);
    const auto got = brute_force_ramsey(f, cfg);
    const auto want = ramsey_uniform(p.m, p.s, p.t).r;
    out.expect(got.value && BigInt(*got.value) == want,
               point(p.m, p.s, p.t) + ": oracle " +
                   (got.value ? std::to_string(*got.value) : "budget_exhausted") +
                   " vs formula " + str(want));
    out.expect(got.witness_coloring && verify_no_star(*got.witness_coloring, f),
               point(p.m, p.s, p.t) + ": witness is not star-free");
  }
  const StarFamily weighted(3, 2, {5, 6, 7});
  const auto got = brute_force_ramsey(weighted, cfg);
  const auto want = ramsey_general(weighted).r;
  out.expect(want == 9, "weighted family formula gives " + str(want));
  out.expect(got.value && BigInt(*got.value) == want,
             "weighted (5,6,7): oracle " +
                 (got.value ? std::to_string(*got.value) : "budget_exhausted"));
  out.expect(got.witness_coloring && verify_no_star(*got.witness_coloring, weighted),
             "weighted (5,6,7): witness is not star-free");
  const double elapsed = seconds_since(start);
  out.expect(elapsed < kOracleGridSeconds, "runtime " + str(elapsed) + "s");
  return out;
}

Outcome star_critical_grid() {
  Outcome out;
  const auto cfg = oracle_config();
  std::vector<GridPoint> grid;
  for (int m = 2; m <= 4; ++m) grid.push_back({m, 1, 2});
  for (int m = 2; m <= 4; ++m) grid.push_back({m, 2, 3});
  grid.push_back({3, 2, 4});
  for (const auto& p : grid) {
    const auto got = brute_force_star_critical(p.m, p.s, p.t, cfg);
    const auto want = star_critical_uniform(p.m, p.s, p.t).rstar;
    out.expect(got.value && BigInt(*got.value) == want,
               point(p.m, p.s, p.t) + ": oracle " +
                   (got.value ? std::to_string(*got.value) : "budget_exhausted") +
                   " vs formula " + str(want));
  }
  const auto key = brute_force_star_critical(3, 2, 4, cfg);
  out.expect(key.value == 3, "(m=3,s=2,t=4) must give rstar = 2kt+t/2+1 = 3");
  return out;
}

std::int64_t missing_expected(const StarCriticalAnswer& a) {
  return static_cast<std::int64_t>(a.r - 1 - (a.rstar - 1));
}

Outcome construction_validity() {
  Outcome out;
  for (int t = 2; t <= 6; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int m = s; m <= 15; ++m) {
        const auto f = StarFamily::uniform(m, s, t);
        const auto g = lower_bound_coloring(f);
        out.expect(BigInt(g.n()) == ramsey_uniform(m, s, t).r - 1,
                   "lower " + point(m, s, t) + ": order " + std::to_string(g.n()));
        out.expect(verify_no_star(g, f), "lower " + point(m, s, t) + ": star found");

        const bool applicable = t % 2 == 0 && (m - 1) % s == 0 && ((m - 1) / s) % 2 == 1;
        if (!applicable) continue;
        const auto h = star_critical_lower_coloring(m, s, t);
        const auto answer = star_critical_uniform(m, s, t);
        out.expect(BigInt(h.n()) == answer.r,
                   "star-critical " + point(m, s, t) + ": order " + std::to_string(h.n()));
        out.expect(static_cast<std::int64_t>(h.missing().size()) == missing_expected(answer),
                   "star-critical " + point(m, s, t) + ": " +
                       std::to_string(h.missing().size()) + " missing edges");
        out.expect(verify_no_star(h, f), "star-critical " + point(m, s, t) + ": star found");
      }
    }
  }

  std::mt19937_64 rng(kSeed);
  int made = 0;
  while (made < kRandomFamilies) {
    // Random rational weights x_i = base_i + shift/s, scaled so every m_A <= 40.
    const int t = 2 + static_cast<int>(rng() % 5);
    const int s = 1 + static_cast<int>(rng() % (t - 1));
    const std::int64_t shift = 1 + static_cast<std::int64_t>(rng() % (2 * s));
    const std::int64_t room = (kRandomFamilyMax - shift) / s;
    std::vector<std::int64_t> base(t);
    for (auto& b : base) b = static_cast<std::int64_t>(rng() % (room + 1));
    std::vector<std::int64_t> values;
    for_each_subset(t, s, [&](ColorSet set) {
      std::int64_t v = shift;
      for (int c : colors_of(set)) v += base[c - 1];
      values.push_back(v);
    });
    const StarFamily f(t, s, values);
    const auto profile = ell_profile(f);
    if (std::any_of(profile.ell.begin(), profile.ell.end(), [](auto v) { return v < 0; })) {
      continue;
    }
    ++made;
    const auto g = lower_bound_coloring(f);
    const std::string label = "random family #" + std::to_string(made);
    out.expect(BigInt(g.n()) == ramsey_general(f).r - 1, label + ": wrong order");
    out.expect(verify_no_star(g, f), label + ": star found");
  }
  return out;
}

// Recounts a factorization without using the library validator.
bool independent_check(const Factorization& f, std::string& why) {
  const int n = f.n;
  std::vector<int> uses(static_cast<std::size_t>(n) * n, 0);
  const int degree = f.kind == FactorKind::OneFactor ? 1 : 2;
  const std::size_t expected_factors =
      f.kind == FactorKind::OneFactor ? n - 1 : static_cast<std::size_t>((n - 1) / 2);
  if (f.factors.size() != expected_factors) {
    why = "factor count " + std::to_string(f.factors.size());
    return false;
  }
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : f.factors[i]) {
      if (e.u < 0 || e.v >= n || e.u >= e.v) {
        why = "bad edge";
        return false;
      }
      ++uses[static_cast<std::size_t>(e.u) * n + e.v];
      ++deg[e.u];
      ++deg[e.v];
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (int v = 0; v < n; ++v) {
      if (deg[v] != degree) {
        why = "factor " + std::to_string(i) + " degree " + std::to_string(deg[v]);
        return false;
      }
    }
    if (f.kind == FactorKind::Hamiltonian) {
      std::vector<bool> seen(n, false);
      std::vector<int> stack = {0};
      seen[0] = true;
      int reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
          if (!seen[w]) {
            seen[w] = true;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != n) {
        why = "factor " + std::to_string(i) + " is not a single cycle";
        return false;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uses[static_cast<std::size_t>(u) * n + v] != 1) {
        why = "pair " + std::to_string(u) + "-" + std::to_string(v) + " used " +
              std::to_string(uses[static_cast<std::size_t>(u) * n + v]) + " times";
        return false;
      }
    }
  }
  return true;
}

Outcome decomposition_suite() {
  Outcome out;
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> order(2, kMaxDecompositionOrder);
  for (int trial = 0; trial < kDecompositionOrders; ++trial) {
    const int n = order(rng);
    std::vector<Factorization> made;
    if (n % 2 == 0) {
      made.push_back(one_factorization(n));
    } else {
      made.push_back(hamiltonian_decomposition(n));
      made.push_back(two_factorization(n));
    }
    for (const auto& f : made) {
      std::string why;
      const bool ok = independent_check(f, why);
      out.expect(ok, "n=" + std::to_string(n) + " " + to_string(f.kind) + ": " + why);
      const auto lib = check_factorization(f);
      out.expect(!lib, "n=" + std::to_string(n) + " library validator: " + lib.value_or(""));
    }
  }
  return out;
}

std::vector<std::int64_t> random_vector(std::mt19937_64& rng, int t, std::int64_t sum) {
  std::uniform_int_distribution<std::int64_t> cut(0, sum);
  std::vector<std::int64_t> cuts(t - 1);
  for (auto& c : cuts) c = cut(rng);
  cuts.push_back(0);
  cuts.push_back(sum);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> d(t);
  for (int i = 0; i < t; ++i) d[i] = cuts[i + 1] - cuts[i];
  std::shuffle(d.begin(), d.end(), rng);
  return d;
}

Outcome degree_threshold() {
  Outcome out;
  std::mt19937_64 rng(kSeed + 2);
  for (int t = 2; t <= 6; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int m = s; m <= 15; ++m) {
        std::int64_t b = 0;
        try {
          b = static_cast<std::int64_t>(b_threshold(m, s, t));
        } catch (const Error& e) {
          if (e.code() == ErrorCode::NotApplicable) continue;
          throw;
        }
        const auto f = StarFamily::uniform(m, s, t);
        std::uniform_int_distribution<std::int64_t> extra(0, b + t);
        bool all = true;
        for (int i = 0; i < kDegreeSamples; ++i) {
          const auto d = random_vector(rng, t, b + extra(rng));
          if (!degree_forces_star(d, f)) all = false;
        }
        out.expect(all, point(m, s, t) + ": a vector with sum >= b=" + std::to_string(b) +
                            " does not force a star");

        // Boundary: a vertex of the extremal coloring has degree sum b - 1 and no star.
        const auto g = lower_bound_coloring(f);
        bool boundary = false;
        for (const auto& d : color_degree_vectors(g)) {
          const auto sum = std::accumulate(d.begin(), d.end(), std::int64_t{0});
          if (sum == b - 1 && !degree_forces_star(d, f)) boundary = true;
        }
        out.expect(boundary, point(m, s, t) + ": no boundary vector with sum b-1=" +
                                 std::to_string(b - 1));
      }
    }
  }
  return out;
}

Outcome parity_replication() {
  Outcome out;
  const auto cfg = oracle_config();
  const auto small = exists_avoidance_coloring(3, StarFamily::uniform(2, 1, 2), {}, cfg);
  out.expect(!small.coloring, "K_3 with m=2, s=1, t=2 has an avoidance coloring");

  const StarFamily f(4, 2, {3, 4, 4, 4, 4, 5});
  const auto profile = ell_profile(f);
  out.expect(profile.ell == std::vector<std::int64_t>{1, 1, 2, 2} && profile.a == 1 &&
                 profile.k == 2,
             "family does not have ell=(1,1,2,2), a=1, k=2");
  out.expect(ramsey_general(f).r == 7, "formula value is not 7");
  const auto at7 = exists_avoidance_coloring(7, f, {}, cfg);
  out.expect(!at7.coloring, "oracle found an avoidance coloring of K_7");
  const auto g = lower_bound_coloring(f);
  out.expect(g.n() == 6, "construction order " + std::to_string(g.n()));
  out.expect(verify_no_star(g, f), "construction on K_6 contains a star");
  const auto at6 = exists_avoidance_coloring(6, f, {}, cfg);
  out.expect(at6.coloring.has_value(), "oracle found no avoidance coloring of K_6");
  return out;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "formula cross-agreement grids A/B/C", formula_grids);
  ok &= report(2, "oracle equals formula on the desk grid and weighted family", oracle_grid);
  ok &= report(3, "star-critical oracle equals formula", star_critical_grid);
  ok &= report(4, "lower-bound and star-critical constructions are star-free",
               construction_validity);
  ok &= report(5, "factorization invariants on random orders", decomposition_suite);
  ok &= report(6, "degree threshold forces a star; b-1 boundary does not", degree_threshold);
  ok &= report(7, "parity impossibility replication", parity_replication);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return ok ? 0 : 1;
}
