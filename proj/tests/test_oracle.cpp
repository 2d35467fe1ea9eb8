#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "plateau/counting.hpp"
#include "plateau/oracle.hpp"

using namespace plateau;

namespace {

using Cell = std::pair<int, int>;
using Shape = std::set<Cell>;

Shape translate_to_origin(const Shape& s) {
  int mx = s.begin()->first, my = s.begin()->second;
  for (auto [x, y] : s) {
    mx = std::min(mx, x);
    my = std::min(my, y);
  }
  Shape out;
  for (auto [x, y] : s) out.insert({x - mx, y - my});
  return out;
}

// Every fixed polyomino with n cells, grown cell by cell and deduplicated up to
// translation. Shares nothing with the column-interval generator.
std::set<Shape> fixed_polyominoes(int n) {
  std::set<Shape> level{{{0, 0}}};
  for (int size = 1; size < n; ++size) {
    std::set<Shape> next;
    for (const auto& s : level)
      for (auto [x, y] : s)
        for (auto [dx, dy] : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
          Shape t = s;
          if (t.insert({x + dx, y + dy}).second) next.insert(translate_to_origin(t));
        }
    level = std::move(next);
  }
  return level;
}

bool column_convex(const Shape& s) {
  std::map<int, std::vector<int>> cols;
  for (auto [x, y] : s) cols[x].push_back(y);
  for (auto& [x, ys] : cols)
    if (ys.back() - ys.front() + 1 != static_cast<int>(ys.size())) return false;
  return true;
}

int width(const Shape& s) {
  std::set<int> xs;
  for (auto [x, y] : s) xs.insert(x);
  return static_cast<int>(xs.size());
}

}  // namespace

TEST_CASE("enum_cc examples") {
  for (int n = 1; n <= 8; ++n) CHECK(enum_cc(1, n) == 1);
  CHECK(enum_cc(2, 3) == 4);
  CHECK(enum_cc(3, 6) == 85);
  CHECK(enum_cc(3, 2) == 0);
  CHECK_THROWS_AS(enum_cc(0, 3), std::domain_error);
}

TEST_CASE("enum_cc agrees with cell-growth enumeration") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, int> by_width;
    for (const auto& s : fixed_polyominoes(n))
      if (column_convex(s)) ++by_width[width(s)];
    for (int k = 1; k <= n; ++k) CHECK(enum_cc(k, n) == by_width[k]);
  }
}

TEST_CASE("enum_dcc examples") {
  for (int k = 1; k <= 6; ++k) CHECK(enum_dcc(k, k) == 1);
  CHECK(enum_dcc(2, 3) == 3);
  CHECK(enum_dcc(3, 5) == 15);
}

TEST_CASE("polyomino oracles match the formulas") {
  for (int k = 1; k <= 5; ++k)
    for (int n = k; n <= 12; ++n) {
      CHECK(enum_cc(k, n) == count_cc(k, n));
      CHECK(enum_dcc(k, n) == count_dcc(k, n));
    }
}

TEST_CASE("enum_plateau examples") {
  for (int m = 2; m <= 12; ++m) CHECK(enum_plateau(1, m) == m - 1);
  CHECK(enum_plateau(2, 5) == 8);
  CHECK(enum_plateau(3, 7) == 16);
  CHECK(enum_plateau(3, 5) == 0);
}

TEST_CASE("enum_dplateau examples") {
  for (int k = 1; k <= 5; ++k) CHECK(enum_dplateau(k, 2 * k) == 1);
  CHECK(enum_dplateau(2, 5) == 6);
  CHECK(enum_dplateau(3, 14) == s_closed(3, 14));
  CHECK(s_closed(3, 14) == 24310);
}

TEST_CASE("polycube oracles match the formulas") {
  for (int k = 1; k <= 4; ++k)
    for (int m = 2 * k; m <= 14; ++m) CHECK(enum_plateau(k, m) == r_gf(k, m));
  for (int k = 1; k <= 4; ++k)
    for (int m = 2 * k; m <= 12; ++m) CHECK(enum_dplateau(k, m) == s_closed(k, m));
}

TEST_CASE("oracle counts do not depend on the worker count") {
  CHECK(enum_cc(4, 12, 1) == enum_cc(4, 12, 3));
  CHECK(enum_dcc(4, 12, 1) == enum_dcc(4, 12, 5));
  CHECK(enum_plateau(3, 13, 1) == enum_plateau(3, 13, 4));
  CHECK(enum_dplateau(3, 11, 1) == enum_dplateau(3, 11, 2));
}

TEST_CASE("generated objects are valid, normalized and distinct") {
  for (int k = 1; k <= 4; ++k)
    for (int n = k; n <= 10; ++n) {
      std::set<ColumnConvexPoly> seen;
      for_each_cc(k, n, [&](const ColumnConvexPoly& p) {
        CHECK(is_valid(p));
        CHECK(p.columns.front().bottom == 0);
        CHECK(p.width() == k);
        CHECK(p.area() == n);
        CHECK(seen.insert(p).second);
      });
    }
  for (int k = 1; k <= 3; ++k)
    for (int m = 2 * k; m <= 10; ++m) {
      std::set<PlateauPolycube> seen;
      for_each_plateau(k, m, [&](const PlateauPolycube& p) {
        CHECK(is_valid(p));
        CHECK(p == normalized(p));
        CHECK(p.lateral_area() == m);
        CHECK(is_face_connected(voxels(p)));
        CHECK(lateral_area_voxels(voxels(p)) == m);
        CHECK(seen.insert(p).second);
      });
    }
}

TEST_CASE("directed polyominoes are those whose bottoms climb within the previous column") {
  for (int k = 1; k <= 5; ++k)
    for (int n = k; n <= 10; ++n)
      for_each_cc(k, n, [&](const ColumnConvexPoly& p) {
        bool climbs = true;
        for (std::size_t i = 1; i < p.columns.size(); ++i) {
          const auto& a = p.columns[i - 1];
          const auto& b = p.columns[i];
          climbs = climbs && a.bottom <= b.bottom && b.bottom <= a.bottom + a.height - 1;
        }
        CHECK(is_directed(p) == climbs);
      });
}

TEST_CASE("project and unproject") {
  const PlateauPolycube unit{{{0, 1, 0, 1}}};
  const auto [a, b] = project(unit);
  CHECK(a == ColumnConvexPoly{{{0, 1}}});
  CHECK(b == ColumnConvexPoly{{{0, 1}}});
  CHECK(unproject(a, b) == unit);
  CHECK(voxels(unit).cells == std::vector<Voxel>{{0, 0, 0}});

  const PlateauPolycube two{{{0, 2, 0, 1}, {0, 1, 0, 3}}};
  const auto [c, d] = project(two);
  CHECK(c == ColumnConvexPoly{{{0, 2}, {0, 1}}});
  CHECK(d == ColumnConvexPoly{{{0, 1}, {0, 3}}});

  CHECK_THROWS_AS(unproject(ColumnConvexPoly{{{0, 1}, {0, 1}}}, ColumnConvexPoly{{{0, 1}, {0, 1}, {0, 1}}}),
                  std::domain_error);
  CHECK_THROWS_AS(unproject(ColumnConvexPoly{{{0, 1}, {5, 1}}}, ColumnConvexPoly{{{0, 1}, {0, 1}}}),
                  std::domain_error);

  // Round trip over every pair of width <= 3 with total area <= 10.
  for (int k = 1; k <= 3; ++k)
    for (int i = k; i <= 10 - k; ++i)
      for (int j = k; i + j <= 10; ++j)
        for_each_cc(k, i, [&](const ColumnConvexPoly& p) {
          for_each_cc(k, j, [&](const ColumnConvexPoly& q) {
            const auto back = project(unproject(p, q));
            CHECK(back.first == p);
            CHECK(back.second == q);
          });
        });
}

TEST_CASE("lateral area of voxel sets") {
  CHECK(lateral_area_voxels(VoxelSet({{0, 0, 0}})) == 2);
  CHECK(lateral_area_voxels(VoxelSet({{0, 0, 0}, {0, 0, 1}})) == 3);
  CHECK_THROWS_AS(lateral_area_voxels(VoxelSet()), std::domain_error);
  CHECK_THROWS_AS(lateral_area_voxels(VoxelSet({{0, 0, 0}, {0, 0, 2}})), std::domain_error);

  // Same volume, different lateral area: a bent stratum vs. a bar with a
  // foot in the next stratum.
  const VoxelSet bent({{0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 0, 1}});
  const VoxelSet footed({{0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {1, 0, 0}});
  CHECK(bent.cells.size() == footed.cells.size());
  CHECK(lateral_area_voxels(bent) == 5);
  CHECK(lateral_area_voxels(footed) == 6);

  // A width-2 plateau polycube of lateral area 9.
  const PlateauPolycube w2{{{0, 3, 0, 3}, {2, 2, 0, 1}}};
  CHECK(is_valid(w2));
  CHECK(w2.width() == 2);
  CHECK(lateral_area_voxels(voxels(w2)) == 9);
}

TEST_CASE("3D directedness") {
  CHECK(is_directed(voxels(PlateauPolycube{{{0, 2, 0, 2}, {1, 1, 1, 1}}})));
  CHECK_FALSE(is_directed(voxels(PlateauPolycube{{{0, 2, 0, 2}, {-1, 2, 0, 1}}})));
  CHECK_FALSE(is_directed(VoxelSet()));
  // An L whose corner is not a reachable root: needs a step in -j.
  CHECK_FALSE(is_directed(VoxelSet({{0, 1, 0}, {1, 1, 0}, {1, 0, 0}})));
}

TEST_CASE("dump format") {
  CHECK(format_object(ColumnConvexPoly{{{0, 2}, {-1, 3}}}) == "(0,2) (-1,3)");
  CHECK(format_object(PlateauPolycube{{{0, 2, 0, 1}, {1, 1, 0, 3}}}) == "(0,2,0,1) (1,1,0,3)");
}
