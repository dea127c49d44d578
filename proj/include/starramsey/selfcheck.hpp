#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starramsey/oracle.hpp"

namespace starramsey {

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> disagreements;

  bool passed() const { return disagreements.empty(); }
};

enum class SelfcheckGrid { Small, Full };

// Cross-validation grids. Each returns every disagreement it saw rather than
// stopping at the first one.

/// ramsey_uniform against ramsey_general on uniform families.
CheckReport check_uniform_vs_general(int max_t, int max_m);
/// s = t-1 closed forms in x, q against the uniform formulas.
CheckReport check_tminus1_forms(int max_t, int max_m);
/// s = 1 against the classical star formulas.
CheckReport check_classical_forms(int max_t, int max_m);
/// Random degree vectors summing to at least b must force a star.
CheckReport check_degree_threshold(int max_t, int max_m, int samples_per_point,
                                   std::uint64_t seed);
/// Lower-bound and star-critical constructions are star-free at the right
/// order.
CheckReport check_constructions(int max_t, int max_m);
/// Oracle against formulas on the desk grid (Small: quick subset).
CheckReport check_oracle(SelfcheckGrid grid, const SearchConfig& config);

std::vector<CheckReport> run_selfcheck(SelfcheckGrid grid, const SearchConfig& config);

}  // namespace starramsey
