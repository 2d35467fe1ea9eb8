#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <thread>

#include "plateau/combinatorics.hpp"
#include "plateau/reference_tables.hpp"

using namespace plateau;

namespace {

// Pascal's rule, independent of the multiplicative formula.
std::vector<std::vector<Count>> pascal(int rows) {
  std::vector<std::vector<Count>> p(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    p[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) p[n][k] = p[n - 1][k - 1] + p[n - 1][k];
  }
  return p;
}

// Walks every N / E / NE lattice path to (n, m).
std::uint64_t count_paths(int n, int m) {
  if (n < 0 || m < 0) return 0;
  if (n == 0 && m == 0) return 1;
  return count_paths(n - 1, m) + count_paths(n, m - 1) + count_paths(n - 1, m - 1);
}

// Strips of length n encoded as bit strings: bit i set = a domino starts at i.
std::uint64_t count_tilings(int n, int dominoes) {
  std::uint64_t count = 0;
  std::function<void(int, int)> go = [&](int pos, int used) {
    if (pos == n) {
      if (used == dominoes) ++count;
      return;
    }
    go(pos + 1, used);
    if (pos + 2 <= n) go(pos + 2, used + 1);
  };
  go(0, 0);
  return count;
}

}  // namespace

TEST_CASE("binomial values and out-of-range convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -2) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(100, 50) == Count("100891344545564193334812497256"));

  const auto p = pascal(60);
  for (int n = 0; n <= 60; ++n)
    for (int k = -2; k <= n + 2; ++k) {
      const Count expected = (k < 0 || k > n) ? Count(0) : p[n][k];
      CHECK(binomial(n, k) == expected);
    }
}

TEST_CASE("delannoy closed form and recurrence") {
  CHECK(delannoy_closed(0, 0) == 1);
  CHECK(delannoy_closed(1, 1) == 3);
  CHECK(delannoy_closed(2, 2) == 13);
  CHECK(delannoy_recursive(0, 9) == 1);
  CHECK(delannoy_recursive(3, 1) == 7);
  CHECK(delannoy_recursive(4, 4) == 321);

  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= 12; ++m) {
      CHECK(delannoy_closed(n, m) == delannoy_recursive(n, m));
      CHECK(delannoy_closed(n, m) == delannoy_closed(m, n));
    }
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 7; ++m) CHECK(delannoy_closed(n, m) == count_paths(n, m));

  CHECK_THROWS_AS(delannoy_closed(-1, 2), std::domain_error);
  CHECK_THROWS_AS(delannoy_recursive(2, -1), std::domain_error);
}

TEST_CASE("delannoy memo grows in both directions") {
  // Query a wide then a tall region so previously allocated rows are extended.
  CHECK(delannoy_recursive(2, 30) == delannoy_closed(2, 30));
  CHECK(delannoy_recursive(40, 1) == delannoy_closed(40, 1));
  CHECK(delannoy_recursive(35, 35) == delannoy_closed(35, 35));
}

TEST_CASE("delannoy memo under concurrent queries") {
  std::vector<Count> got(8);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 8; ++t)
      pool.emplace_back([&, t] { got[t] = delannoy_recursive(50 + 3 * t, 60 - 2 * t); });
  }
  for (int t = 0; t < 8; ++t) CHECK(got[t] == delannoy_closed(50 + 3 * t, 60 - 2 * t));
}

TEST_CASE("tribonacci triangle") {
  const auto t2 = tribonacci_triangle(2);
  CHECK(t2.rows == std::vector<std::vector<Count>>{{1}, {1, 1}, {1, 3, 1}});
  CHECK(tribonacci_triangle(0).rows == std::vector<std::vector<Count>>{{1}});
  CHECK(tribonacci_triangle(4).rows[4] == std::vector<Count>{1, 7, 13, 7, 1});

  const auto& printed = reference::delannoy_triangle();
  const auto t = tribonacci_triangle(25);
  for (std::size_t s = 0; s < printed.size(); ++s)
    for (std::size_t i = 0; i < printed[s].size(); ++i) CHECK(t.rows[s][i] == printed[s][i]);
  for (std::size_t s = 0; s < t.rows.size(); ++s) {
    const auto& row = t.rows[s];
    REQUIRE(row.size() == s + 1);
    CHECK(row.front() == 1);
    CHECK(std::equal(row.begin(), row.end(), row.rbegin()));
    CHECK(antidiagonal(static_cast<std::int64_t>(s)) == row);
  }
  CHECK_THROWS_AS(tribonacci_triangle(-1), std::domain_error);
}

TEST_CASE("antidiagonal") {
  CHECK(antidiagonal(0) == std::vector<Count>{1});
  CHECK(antidiagonal(2) == std::vector<Count>{1, 3, 1});
  CHECK(antidiagonal(3) == std::vector<Count>{1, 5, 5, 1});
}

TEST_CASE("vandermonde variant") {
  auto s = vandermonde_variant(0, 0);
  CHECK(s.lhs == 1);
  CHECK(s.rhs == 1);
  s = vandermonde_variant(2, 3);
  CHECK(s.lhs == 56);
  CHECK(s.rhs == 56);
  s = vandermonde_variant(4, 5);
  CHECK(s.lhs == 2002);
  CHECK(s.rhs == 2002);
  for (int a = 0; a <= 30; ++a)
    for (int m = 0; m <= 30; ++m) {
      const auto v = vandermonde_variant(a, m);
      CHECK(v.lhs == v.rhs);
    }
}

TEST_CASE("domino tilings") {
  for (int n = 0; n <= 9; ++n) CHECK(domino_tilings(n, 0) == 1);
  CHECK(domino_tilings(5, 2) == 3);
  CHECK(domino_tilings(4, 2) == 1);
  CHECK(domino_tilings(5, 3) == 0);
  CHECK(domino_tilings(-1, 0) == 0);
  for (int n = 0; n <= 14; ++n)
    for (int j = 0; j <= 7; ++j) CHECK(domino_tilings(n, j) == count_tilings(n, j));
}
