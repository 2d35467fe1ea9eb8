#pragma once

// Brute-force enumeration of the four families straight from their geometric
// definitions. Nothing here calls into the closed forms or series.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "plateau/bigint.hpp"

namespace plateau {

struct Column {
  std::int64_t bottom = 0;
  std::int64_t height = 1;
  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

// Column-convex polyomino as its columns left to right. Normalized when the
// first column's bottom is 0.
struct ColumnConvexPoly {
  std::vector<Column> columns;

  std::int64_t width() const { return static_cast<std::int64_t>(columns.size()); }
  std::int64_t area() const;
  friend bool operator==(const ColumnConvexPoly&, const ColumnConvexPoly&) = default;
  friend auto operator<=>(const ColumnConvexPoly&, const ColumnConvexPoly&) = default;
};

// One stratum: the rectangle [y0, y0+h) x [z0, z0+d).
struct Plateau {
  std::int64_t y0 = 0;
  std::int64_t h = 1;
  std::int64_t z0 = 0;
  std::int64_t d = 1;
  friend bool operator==(const Plateau&, const Plateau&) = default;
  friend auto operator<=>(const Plateau&, const Plateau&) = default;
};

struct PlateauPolycube {
  std::vector<Plateau> plateaus;

  std::int64_t width() const { return static_cast<std::int64_t>(plateaus.size()); }
  /// sum of (h + d)
  std::int64_t lateral_area() const;
  friend bool operator==(const PlateauPolycube&, const PlateauPolycube&) = default;
  friend auto operator<=>(const PlateauPolycube&, const PlateauPolycube&) = default;
};

using Voxel = std::array<std::int64_t, 3>;  // (i, j, k)

// Sorted, duplicate-free set of unit cubes.
struct VoxelSet {
  std::vector<Voxel> cells;

  VoxelSet() = default;
  explicit VoxelSet(std::vector<Voxel> c);
  bool contains(const Voxel& v) const;
};

bool is_valid(const ColumnConvexPoly& p);
bool is_valid(const PlateauPolycube& p);
ColumnConvexPoly normalized(ColumnConvexPoly p);
PlateauPolycube normalized(PlateauPolycube p);

/// Every cell reachable from the bottom cell of the leftmost column by North
/// and East unit steps.
bool is_directed(const ColumnConvexPoly& p);

/// Some cell with minimal i reaches every cell by East/North/Ahead unit steps.
/// Returns false for an empty set.
bool is_directed(const VoxelSet& v);

/// Stratum i occupies x-coordinate i.
VoxelSet voxels(const PlateauPolycube& p);

bool is_face_connected(const VoxelSet& v);

/// |{(i,j)}| + |{(i,k)}| over the cells. Throws std::domain_error for an empty
/// or disconnected set.
Count lateral_area_voxels(const VoxelSet& v);

/// Projections onto the (i,j) and (i,k) planes, both normalized.
std::pair<ColumnConvexPoly, ColumnConvexPoly> project(const PlateauPolycube& p);

/// Inverse of project. Throws std::domain_error on width mismatch or invalid
/// input.
PlateauPolycube unproject(const ColumnConvexPoly& a, const ColumnConvexPoly& b);

using PolyVisitor = std::function<void(const ColumnConvexPoly&)>;
using PolycubeVisitor = std::function<void(const PlateauPolycube&)>;

/// Visits every normalized column-convex polyomino with k columns and area n,
/// in lexicographic order of the column list.
void for_each_cc(std::int64_t k, std::int64_t n, const PolyVisitor& visit);

/// Visits every normalized plateau polycube with k plateaus and lateral area m.
void for_each_plateau(std::int64_t k, std::int64_t m, const PolycubeVisitor& visit);

// Exhaustive counts. Work is split by the first column/plateau across
// `workers` threads; the sum does not depend on the split.
Count enum_cc(std::int64_t k, std::int64_t n, int workers = 1);
Count enum_dcc(std::int64_t k, std::int64_t n, int workers = 1);
Count enum_plateau(std::int64_t k, std::int64_t m, int workers = 1);
Count enum_dplateau(std::int64_t k, std::int64_t m, int workers = 1);

// Plain-text dump format, one object per line:
//   polyomino: "(b1,h1) (b2,h2) ..."
//   polycube:  "(y1,h1,z1,d1) (y2,h2,z2,d2) ..."
std::string format_object(const ColumnConvexPoly& p);
std::string format_object(const PlateauPolycube& p);

}  // namespace plateau
