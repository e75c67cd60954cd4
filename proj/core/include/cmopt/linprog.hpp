#pragma once

#include <span>

#include "cmopt/geometry.hpp"

namespace cmopt {

// One open halfspace sign * (a . normal) > 0 of a chamber.
struct SignedConstraint {
  Vec normal;
  int sign = +1;  // +1 or -1
};

// Outcome of the strict-feasibility LP; witness stays in the unit box.
struct MarginResult {
  double margin = 0.0;
  Vec witness;
};

// Maximize t subject to sign_i * (a . h_i) >= t and -1 <= a_k <= 1.
// margin > kSignTol certifies a strictly interior point of the cone;
// margin <= kSignTol means infeasible or degenerate. An empty constraint
// sequence returns margin 1 with witness e_1. Throws NumericError on
// numerical failure (distinct from infeasibility).
MarginResult max_margin(std::span<const SignedConstraint> constraints, int d);

}  // namespace cmopt
