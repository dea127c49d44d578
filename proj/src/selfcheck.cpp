#include "starramsey/selfcheck.hpp"

#include <random>
#include <sstream>

#include "starramsey/constructions.hpp"
#include "starramsey/error.hpp"
#include "starramsey/formulas.hpp"
#include "starramsey/verifier.hpp"

namespace starramsey {
namespace {

std::string point(std::int64_t m, int s, int t) {
  std::ostringstream os;
  os << "(m=" << m << ",s=" << s << ",t=" << t << ")";
  return os.str();
}

struct OraclePoint {
  int s;
  int t;
  int m_lo;
  int m_hi;
};

}  // namespace

CheckReport check_uniform_vs_general(int max_t, int max_m) {
  CheckReport report{"uniform-vs-general", 0, {}};
  for (int t = 2; t <= max_t; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int m = s; m <= max_m; ++m) {
        ++report.cases;
        const auto uniform = ramsey_uniform(m, s, t);
        const auto general = ramsey_general(StarFamily::uniform(m, s, t));
        if (uniform.r != general.r) {
          report.disagreements.push_back(point(m, s, t) + ": uniform " + uniform.r.str() +
                                         " [" + uniform.branch + "] vs general " +
                                         general.r.str() + " [" + general.branch + "]");
        }
      }
    }
  }
  return report;
}

CheckReport check_tminus1_forms(int max_t, int max_m) {
  CheckReport report{"tminus1-xq-vs-uniform", 0, {}};
  for (int t = 2; t <= max_t; ++t) {
    for (int m = std::max(1, t - 1); m <= max_m; ++m) {
      ++report.cases;
      const auto r_uniform = ramsey_uniform(m, t - 1, t);
      const auto r_xq = ramsey_tminus1_xq(m, t);
      const auto c_uniform = star_critical_uniform(m, t - 1, t);
      const auto c_xq = star_critical_tminus1_xq(m, t);
      if (r_uniform.r != r_xq.r) {
        report.disagreements.push_back(point(m, t - 1, t) + ": r uniform " + r_uniform.r.str() +
                                       " vs x,q form " + r_xq.r.str());
      }
      if (c_uniform.rstar != c_xq.rstar) {
        report.disagreements.push_back(point(m, t - 1, t) + ": rstar uniform " +
                                       c_uniform.rstar.str() + " vs x,q form " +
                                       c_xq.rstar.str());
      }
    }
  }
  return report;
}

CheckReport check_classical_forms(int max_t, int max_m) {
  CheckReport report{"s1-vs-classical", 0, {}};
  for (int t = 2; t <= max_t; ++t) {
    for (int m = 2; m <= max_m; ++m) {
      ++report.cases;
      const std::vector<BigInt> ms(t, m);
      const auto r_uniform = ramsey_uniform(m, 1, t);
      const auto r_classical = ramsey_classical(ms);
      const auto c_uniform = star_critical_uniform(m, 1, t);
      const auto c_classical = star_critical_classical(ms);
      if (r_uniform.r != r_classical.r || c_uniform.rstar != c_classical.rstar) {
        report.disagreements.push_back(point(m, 1, t) + ": (r, rstar) uniform (" +
                                       r_uniform.r.str() + ", " + c_uniform.rstar.str() +
                                       ") vs classical (" + r_classical.r.str() + ", " +
                                       c_classical.rstar.str() + ")");
      }
    }
  }
  return report;
}

CheckReport check_degree_threshold(int max_t, int max_m, int samples_per_point,
                                   std::uint64_t seed) {
  CheckReport report{"degree-threshold", 0, {}};
  std::mt19937_64 rng(seed);
  for (int t = 2; t <= max_t; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int m = s; m <= max_m; ++m) {
        BigInt b;
        try {
          b = b_threshold(m, s, t);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::NotApplicable) continue;
          throw;
        }
        const auto family = StarFamily::uniform(m, s, t);
        const auto threshold = static_cast<std::int64_t>(b);
        std::uniform_int_distribution<int> color(0, t - 1);
        std::uniform_int_distribution<std::int64_t> extra(0, t);
        for (int i = 0; i < samples_per_point; ++i) {
          ++report.cases;
          std::vector<std::int64_t> d(t, 0);
          const auto total = threshold + extra(rng);
          for (std::int64_t j = 0; j < total; ++j) ++d[color(rng)];
          if (!degree_forces_star(d, family)) {
            std::ostringstream os;
            os << point(m, s, t) << ": degrees summing to " << total << " >= b=" << b
               << " force no star";
            report.disagreements.push_back(os.str());
          }
        }
        // Just below the threshold the lower-bound coloring's vertices are
        // star-free, so the bound is tight.
        ++report.cases;
        const auto g = lower_bound_coloring(family);
        const auto degrees = color_degree_vectors(g);
        std::int64_t sum = 0;
        for (auto v : degrees[0]) sum += v;
        if (sum != threshold - 1 || degree_forces_star(degrees[0], family)) {
          report.disagreements.push_back(point(m, s, t) +
                                         ": no star-free degree vector at b-1");
        }
      }
    }
  }
  return report;
}

CheckReport check_constructions(int max_t, int max_m) {
  CheckReport report{"constructions", 0, {}};
  for (int t = 2; t <= max_t; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int m = s; m <= max_m; ++m) {
        ++report.cases;
        const auto family = StarFamily::uniform(m, s, t);
        const BigInt r = ramsey_general(family).r;
        try {
          const auto g = lower_bound_coloring(family);
          if (BigInt(g.n()) != r - 1 || !verify_no_star(g, family)) {
            report.disagreements.push_back(point(m, s, t) + ": lower-bound coloring invalid");
          }
        } catch (const Error& e) {
          report.disagreements.push_back(point(m, s, t) + ": " + e.what());
        }
        if (t % 2 != 0 || (m - 1) % s != 0 || ((m - 1) / s) % 2 == 0) {
          continue;
        }
        ++report.cases;
        try {
          const auto g = star_critical_lower_coloring(m, s, t);
          const auto critical = star_critical_uniform(m, s, t);
          const BigInt missing = static_cast<std::int64_t>(g.missing().size());
          if (BigInt(g.n()) != critical.r || missing != critical.r - critical.rstar ||
              !verify_no_star(g, family)) {
            report.disagreements.push_back(point(m, s, t) + ": star-critical coloring invalid");
          }
        } catch (const Error& e) {
          report.disagreements.push_back(point(m, s, t) + ": " + e.what());
        }
      }
    }
  }
  return report;
}

CheckReport check_oracle(SelfcheckGrid grid, const SearchConfig& config) {
  CheckReport report{"oracle", 0, {}};
  const bool full = grid == SelfcheckGrid::Full;
  const std::vector<OraclePoint> ramsey_points =
      full ? std::vector<OraclePoint>{{1, 2, 1, 5}, {1, 3, 1, 3}, {2, 3, 2, 5}, {2, 4, 3, 3},
                                      {3, 4, 3, 4}}
           : std::vector<OraclePoint>{{1, 2, 1, 4}, {2, 3, 2, 4}, {2, 4, 3, 3}};
  const std::vector<OraclePoint> critical_points =
      full ? std::vector<OraclePoint>{{1, 2, 2, 4}, {2, 3, 2, 4}, {2, 4, 3, 3}}
           : std::vector<OraclePoint>{{1, 2, 2, 3}, {2, 3, 2, 3}, {2, 4, 3, 3}};

  auto compare = [&](const std::string& label, const OracleResult& got, const BigInt& want) {
    ++report.cases;
    if (!got.value) {
      report.disagreements.push_back(label + ": budget exhausted");
    } else if (BigInt(*got.value) != want) {
      report.disagreements.push_back(label + ": oracle " + std::to_string(*got.value) +
                                     " vs formula " + want.str());
    }
  };
  for (const auto& p : ramsey_points) {
    for (int m = p.m_lo; m <= p.m_hi; ++m) {
      compare("ramsey " + point(m, p.s, p.t),
              brute_force_ramsey(StarFamily::uniform(m, p.s, p.t), config),
              ramsey_uniform(m, p.s, p.t).r);
    }
  }
  if (full) {
    const StarFamily weighted(3, 2, {5, 6, 7});
    compare("ramsey weighted (5,6,7)", brute_force_ramsey(weighted, config),
            ramsey_general(weighted).r);
  }
  for (const auto& p : critical_points) {
    for (int m = p.m_lo; m <= p.m_hi; ++m) {
      compare("star-critical " + point(m, p.s, p.t),
              brute_force_star_critical(m, p.s, p.t, config),
              star_critical_uniform(m, p.s, p.t).rstar);
    }
  }
  return report;
}

std::vector<CheckReport> run_selfcheck(SelfcheckGrid grid, const SearchConfig& config) {
  const bool full = grid == SelfcheckGrid::Full;
  std::vector<CheckReport> reports;
  reports.push_back(check_uniform_vs_general(6, 15));
  reports.push_back(check_tminus1_forms(8, 30));
  reports.push_back(check_classical_forms(6, 15));
  reports.push_back(check_degree_threshold(full ? 6 : 4, full ? 15 : 8, full ? 10000 : 200, 1));
  reports.push_back(check_constructions(full ? 6 : 4, full ? 15 : 8));
  reports.push_back(check_oracle(grid, config));
  return reports;
}

}  // namespace starramsey
