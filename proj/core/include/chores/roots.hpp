#pragma once

#include "chores/rational.hpp"

namespace chores {

/// Smallest scaling cap t in [1.4, 1.6] with (1-t)ln(1-1/t) + t - 1 >= 1,
/// i.e. the integral of the threshold scaling function reaching one. The
/// floating root is rounded up to a multiple of 1e-6 so the returned
/// rational is on the feasible side.
Rational solve_t();

/// Left-hand side of the scaling-cap condition, minus one.
double scaling_cap_residual(double t);

/// Root in [1.5, 1.6] of
///   (r-1)ln(r/(r-1)) + 2r - 3 + 2(r-1)ln(r/(2(r-1))) = 1,
/// the asymptotic lower bound for ridge orders. Rounded up to 1e-6.
Rational solve_rho_star();

double rho_star_residual(double rho);

}  // namespace chores
