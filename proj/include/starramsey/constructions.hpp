#pragma once

#include "starramsey/colored_graph.hpp"
#include "starramsey/formulas.hpp"

namespace starramsey {

/// Lower-bound colorings; exposed so callers can tell which one was used.
enum class LowerBoundCase {
  MatchingsOneShort,  // a = 1, k >= 1 even: K_{sum ell}
  TwoFactors,         // a = 1, k = 0: K_{sum ell + 1}
  ApexOverCore,       // a >= 2, sum ell + a odd
  Matchings,          // sum ell + a even
};

LowerBoundCase lower_bound_case(const EllProfile& profile);

/// Complete coloring on r - 1 vertices with no target star, r being the
/// family's Ramsey number. Verified before it is returned.
ColoredGraph lower_bound_coloring(const StarFamily& family);

/// Coloring of K_N minus a star at vertex 0 (N the uniform Ramsey number)
/// with no K_{1,m} inside any s colors, keeping rstar - 1 spokes at vertex 0.
/// Requires m = (2k+1)s + 1 and t even; NotApplicable otherwise.
ColoredGraph star_critical_lower_coloring(const BigInt& m, int s, int t);

/// Largest order the constructions will materialize.
inline constexpr int kMaxConstructionOrder = 4096;

}  // namespace starramsey
