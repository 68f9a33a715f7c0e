#pragma once

#include <vector>

#include "chores/rational.hpp"

namespace chores {

/// Result of maximize_packing. `value` and `x` are meaningful only when the
/// program is bounded.
struct PackingSolution {
  bool unbounded = false;
  Rational value;
  std::vector<Rational> x;
};

/// Exact simplex for  max c·x  s.t.  A x <= rhs,  x >= 0,  with rhs >= 0 so
/// the origin is a starting vertex. Dictionary form (one column per
/// nonbasic variable) with Bland's rule, so it terminates on degenerate
/// programs. Rows of A must all have size c.size().
PackingSolution maximize_packing(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& rhs,
                                 const std::vector<Rational>& objective);

}  // namespace chores
