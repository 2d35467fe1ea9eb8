#pragma once

#include <cstdint>
#include <vector>

#include "plateau/bigint.hpp"

namespace plateau {

/// n!/(k!(n-k)!) for 0 <= k <= n, and 0 for every other (n, k), including
/// negative arguments.
Count binomial(std::int64_t n, std::int64_t k);

/// Delannoy number as the finite sum over C(m,i) C(n+m-i, m).
/// Throws std::domain_error on negative input.
Count delannoy_closed(std::int64_t n, std::int64_t m);

/// Delannoy number from D(n,m) = D(n-1,m) + D(n,m-1) + D(n-1,m-1) with unit
/// borders. Backed by a process-wide memo table that grows on demand and is
/// safe to query from several threads.
Count delannoy_recursive(std::int64_t n, std::int64_t m);

/// rows[s][t] = D(s-t, t), 0 <= t <= s.
struct TriangleTable {
  std::vector<std::vector<Count>> rows;

  std::size_t depth() const { return rows.empty() ? 0 : rows.size() - 1; }
};

TriangleTable tribonacci_triangle(std::int64_t depth);

/// [D(k-i, i) for i = 0..k]: row k of the triangle, read as the coefficient
/// list of the column-convex numerator polynomial.
std::vector<Count> antidiagonal(std::int64_t k);

struct IdentitySides {
  Count lhs;
  Count rhs;
};

/// lhs = sum_{j=0..m} C(j+a, j) C(a+m-j, m-j), rhs = C(2a+m+1, m).
IdentitySides vandermonde_variant(std::int64_t a, std::int64_t m);

/// Tilings of a 1 x n strip with exactly j dominoes (the rest squares).
Count domino_tilings(std::int64_t n, std::int64_t j);

}  // namespace plateau
