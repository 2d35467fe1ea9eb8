#include "plateau/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace plateau {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

void require_nonnegative(std::int64_t n, std::int64_t m, const char* what) {
  if (n < 0 || m < 0)
    throw std::domain_error(std::string(what) + ": arguments must be nonnegative");
}

// Grows to cover every queried (n, m); never shrinks.
class DelannoyMemo {
 public:
  Count get(std::int64_t n, std::int64_t m) {
    {
      std::shared_lock lock(mu_);
      if (n < rows() && m < cols()) return grid_[n][m];
    }
    std::unique_lock lock(mu_);
    grow(std::max(n + 1, rows()), std::max(m + 1, cols()));
    return grid_[n][m];
  }

 private:
  std::int64_t rows() const { return static_cast<std::int64_t>(grid_.size()); }
  std::int64_t cols() const { return grid_.empty() ? 0 : static_cast<std::int64_t>(grid_[0].size()); }

  void grow(std::int64_t nrows, std::int64_t ncols) {
    const std::int64_t old_rows = rows();
    const std::int64_t old_cols = cols();
    if (nrows == old_rows && ncols == old_cols) return;
    grid_.resize(nrows);
    for (std::int64_t n = 0; n < nrows; ++n) {
      auto& row = grid_[n];
      const std::int64_t first = n < old_rows ? old_cols : 0;
      row.resize(ncols);
      for (std::int64_t m = first; m < ncols; ++m) {
        if (n == 0 || m == 0)
          row[m] = 1;
        else
          row[m] = grid_[n - 1][m] + row[m - 1] + grid_[n - 1][m - 1];
      }
    }
  }

  std::shared_mutex mu_;
  std::vector<std::vector<Count>> grid_;
};

DelannoyMemo& delannoy_memo() {
  static DelannoyMemo memo;
  return memo;
}

}  // namespace

Count delannoy_closed(std::int64_t n, std::int64_t m) {
  require_nonnegative(n, m, "delannoy_closed");
  Count sum = 0;
  for (std::int64_t i = 0; i <= m; ++i) sum += binomial(m, i) * binomial(n + m - i, m);
  return sum;
}

Count delannoy_recursive(std::int64_t n, std::int64_t m) {
  require_nonnegative(n, m, "delannoy_recursive");
  return delannoy_memo().get(n, m);
}

TriangleTable tribonacci_triangle(std::int64_t depth) {
  if (depth < 0) throw std::domain_error("tribonacci_triangle: depth must be nonnegative");
  TriangleTable t;
  t.rows.reserve(depth + 1);
  for (std::int64_t s = 0; s <= depth; ++s) {
    auto& row = t.rows.emplace_back();
    row.reserve(s + 1);
    for (std::int64_t i = 0; i <= s; ++i) row.push_back(delannoy_closed(s - i, i));
  }
  return t;
}

std::vector<Count> antidiagonal(std::int64_t k) {
  if (k < 0) throw std::domain_error("antidiagonal: k must be nonnegative");
  std::vector<Count> out;
  out.reserve(k + 1);
  for (std::int64_t i = 0; i <= k; ++i) out.push_back(delannoy_recursive(k - i, i));
  return out;
}

IdentitySides vandermonde_variant(std::int64_t a, std::int64_t m) {
  require_nonnegative(a, m, "vandermonde_variant");
  IdentitySides s{0, binomial(2 * a + m + 1, m)};
  for (std::int64_t j = 0; j <= m; ++j) s.lhs += binomial(j + a, j) * binomial(a + m - j, m - j);
  return s;
}

Count domino_tilings(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || 2 * j > n) return 0;
  return binomial(n - j, j);
}

}  // namespace plateau
