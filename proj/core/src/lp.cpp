#include "chores/lp.hpp"

#include <stdexcept>

namespace chores {

PackingSolution maximize_packing(const std::vector<std::vector<Rational>>& a,
                                 const std::vector<Rational>& rhs,
                                 const std::vector<Rational>& objective) {
  const std::size_t rows = a.size();
  const std::size_t cols = objective.size();
  if (rhs.size() != rows) throw std::invalid_argument("rhs size does not match constraint rows");
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("constraint row has wrong width");
  }
  for (const auto& r : rhs) {
    if (r < 0) throw std::invalid_argument("packing program needs nonnegative rhs");
  }

  // basic_r = beta[r] - sum_c t[r][c] * x_{nonbasic[c]};  z = z0 + sum_c d[c] * x_{nonbasic[c]}.
  // Variables 0..cols-1 are structural, cols..cols+rows-1 are slacks.
  std::vector<std::vector<Rational>> t = a;
  std::vector<Rational> beta = rhs;
  std::vector<Rational> d = objective;
  Rational z0 = 0;
  std::vector<std::size_t> basic(rows);
  std::vector<std::size_t> nonbasic(cols);
  for (std::size_t r = 0; r < rows; ++r) basic[r] = cols + r;
  for (std::size_t c = 0; c < cols; ++c) nonbasic[c] = c;

  Rational ratio, best_ratio;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (d[c] > 0 && (enter == cols || nonbasic[c] < nonbasic[enter])) enter = c;
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      ratio = beta[r] / t[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basic[r] < basic[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return {true, Rational(0), {}};

    const Rational pivot = t[leave][enter];
    std::vector<Rational>& prow = t[leave];
    beta[leave] /= pivot;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == enter) {
        prow[c] = 1 / pivot;
      } else if (prow[c] != 0) {
        prow[c] /= pivot;
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave) continue;
      const Rational f = t[r][enter];
      if (f == 0) continue;
      beta[r] -= f * beta[leave];
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == enter) {
          t[r][c] = -f * prow[c];
        } else if (prow[c] != 0) {
          t[r][c] -= f * prow[c];
        }
      }
    }
    const Rational g = d[enter];
    z0 += g * beta[leave];
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == enter) {
        d[c] = -g * prow[c];
      } else if (prow[c] != 0) {
        d[c] -= g * prow[c];
      }
    }
    std::swap(basic[leave], nonbasic[enter]);
  }

  PackingSolution out;
  out.value = z0;
  out.x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basic[r] < cols) out.x[basic[r]] = beta[r];
  }
  return out;
}

}  // namespace chores
