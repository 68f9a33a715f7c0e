#include "chores/roots.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>

namespace chores {

namespace {

double bisect(double (*f)(double), double lo, double hi) {
  boost::math::tools::eps_tolerance<double> tol(40);
  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::bisect(f, lo, hi, tol, iterations);
  return 0.5 * (a + b);
}

Rational round_up_micro(double x) {
  return ratio(static_cast<long>(std::ceil(x * 1e6)), 1000000L);
}

}  // namespace

double scaling_cap_residual(double t) { return (1 - t) * std::log(1 - 1 / t) + t - 2; }

double rho_star_residual(double r) {
  return (r - 1) * std::log(r / (r - 1)) + 2 * r - 3 + 2 * (r - 1) * std::log(r / (2 * (r - 1))) -
         1;
}

Rational solve_t() {
  Rational t = round_up_micro(bisect(&scaling_cap_residual, 1.4, 1.6));
  while (scaling_cap_residual(to_double(t)) < 0) t += ratio(1, 1000000);
  return t;
}

Rational solve_rho_star() { return round_up_micro(bisect(&rho_star_residual, 1.5, 1.6)); }

}  // namespace chores
