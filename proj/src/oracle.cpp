#include "plateau/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace plateau {

std::int64_t ColumnConvexPoly::area() const {
  std::int64_t a = 0;
  for (const auto& c : columns) a += c.height;
  return a;
}

std::int64_t PlateauPolycube::lateral_area() const {
  std::int64_t a = 0;
  for (const auto& p : plateaus) a += p.h + p.d;
  return a;
}

VoxelSet::VoxelSet(std::vector<Voxel> c) : cells(std::move(c)) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

bool VoxelSet::contains(const Voxel& v) const {
  return std::binary_search(cells.begin(), cells.end(), v);
}

namespace {

bool intervals_overlap(std::int64_t b1, std::int64_t h1, std::int64_t b2, std::int64_t h2) {
  return std::max(b1, b2) < std::min(b1 + h1, b2 + h2);
}

// Dense occupancy over the bounding box of a voxel set; cell index or -1.
class DenseGrid {
 public:
  explicit DenseGrid(const VoxelSet& v) {
    lo_ = hi_ = v.cells.front();
    for (const auto& c : v.cells)
      for (int a = 0; a < 3; ++a) {
        lo_[a] = std::min(lo_[a], c[a]);
        hi_[a] = std::max(hi_[a], c[a]);
      }
    for (int a = 0; a < 3; ++a) dim_[a] = hi_[a] - lo_[a] + 1;
    slot_.assign(dim_[0] * dim_[1] * dim_[2], -1);
    for (std::size_t i = 0; i < v.cells.size(); ++i) slot_[offset(v.cells[i])] = static_cast<int>(i);
  }

  int find(const Voxel& c) const {
    for (int a = 0; a < 3; ++a)
      if (c[a] < lo_[a] || c[a] > hi_[a]) return -1;
    return slot_[offset(c)];
  }

 private:
  std::size_t offset(const Voxel& c) const {
    return static_cast<std::size_t>(((c[0] - lo_[0]) * dim_[1] + (c[1] - lo_[1])) * dim_[2] +
                                    (c[2] - lo_[2]));
  }

  Voxel lo_{}, hi_{};
  std::array<std::int64_t, 3> dim_{};
  std::vector<int> slot_;
};

// Number of cells reached from `root` using the given unit steps.
template <std::size_t N>
std::size_t reach(const VoxelSet& v, const DenseGrid& grid, int root,
                  const std::array<Voxel, N>& steps) {
  std::vector<char> seen(v.cells.size(), 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Voxel c = v.cells[stack.back()];
    stack.pop_back();
    for (const auto& s : steps) {
      const int nb = grid.find({c[0] + s[0], c[1] + s[1], c[2] + s[2]});
      if (nb >= 0 && !seen[nb]) {
        seen[nb] = 1;
        ++count;
        stack.push_back(nb);
      }
    }
  }
  return count;
}

constexpr std::array<Voxel, 3> kForwardSteps{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
constexpr std::array<Voxel, 6> kFaceSteps{
    {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

// Generates the remaining columns after `cols`, which already holds a prefix.
void extend_cc(std::int64_t k, std::int64_t remaining, ColumnConvexPoly& cur,
               const PolyVisitor& visit) {
  const std::int64_t left = k - cur.width();
  if (left == 0) {
    if (remaining == 0) visit(cur);
    return;
  }
  const Column prev = cur.columns.back();
  const std::int64_t h_lo = left == 1 ? remaining : 1;
  const std::int64_t h_hi = remaining - (left - 1);
  for (std::int64_t h = h_lo; h <= h_hi; ++h) {
    for (std::int64_t b = prev.bottom - h + 1; b <= prev.bottom + prev.height - 1; ++b) {
      cur.columns.push_back({b, h});
      extend_cc(k, remaining - h, cur, visit);
      cur.columns.pop_back();
    }
  }
}

void extend_plateau(std::int64_t k, std::int64_t remaining, PlateauPolycube& cur,
                    const PolycubeVisitor& visit) {
  const std::int64_t left = k - cur.width();
  if (left == 0) {
    if (remaining == 0) visit(cur);
    return;
  }
  const Plateau prev = cur.plateaus.back();
  // Each later plateau needs h + d >= 2.
  const std::int64_t budget = remaining - 2 * (left - 1);
  for (std::int64_t h = 1; h < budget; ++h) {
    const std::int64_t d_lo = left == 1 ? budget - h : 1;
    for (std::int64_t d = d_lo; d <= budget - h; ++d)
      for (std::int64_t y = prev.y0 - h + 1; y <= prev.y0 + prev.h - 1; ++y)
        for (std::int64_t z = prev.z0 - d + 1; z <= prev.z0 + prev.d - 1; ++z) {
          cur.plateaus.push_back({y, h, z, d});
          extend_plateau(k, remaining - h - d, cur, visit);
          cur.plateaus.pop_back();
        }
  }
}

// First-column / first-plateau shapes the enumeration is partitioned by.
std::vector<std::int64_t> first_heights(std::int64_t k, std::int64_t n) {
  std::vector<std::int64_t> hs;
  const std::int64_t lo = k == 1 ? n : 1;
  for (std::int64_t h = lo; h <= n - (k - 1); ++h) hs.push_back(h);
  return hs;
}

std::vector<std::pair<std::int64_t, std::int64_t>> first_rectangles(std::int64_t k, std::int64_t m) {
  std::vector<std::pair<std::int64_t, std::int64_t>> rs;
  const std::int64_t budget = m - 2 * (k - 1);
  for (std::int64_t h = 1; h < budget; ++h) {
    const std::int64_t d_lo = k == 1 ? budget - h : 1;
    for (std::int64_t d = d_lo; d <= budget - h; ++d) rs.emplace_back(h, d);
  }
  return rs;
}

// Sums task(i) over i in [0, n) using up to `workers` threads.
template <typename Task>
Count parallel_count(std::size_t n, int workers, Task task) {
  std::vector<std::uint64_t> partial(n, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) partial[i] = task(i);
  };
  const int threads = std::clamp<int>(workers, 1, std::max<int>(1, static_cast<int>(n)));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(work);
    work();
  }
  Count total = 0;
  for (auto p : partial) total += p;
  return total;
}

template <typename Pred>
Count count_cc_where(std::int64_t k, std::int64_t n, int workers, Pred pred) {
  if (k < 1) throw std::domain_error("enum_cc: k must be >= 1");
  if (n < k) return 0;
  const auto hs = first_heights(k, n);
  return parallel_count(hs.size(), workers, [&](std::size_t i) {
    std::uint64_t c = 0;
    ColumnConvexPoly cur{{{0, hs[i]}}};
    extend_cc(k, n - hs[i], cur, [&](const ColumnConvexPoly& p) {
      if (pred(p)) ++c;
    });
    return c;
  });
}

template <typename Pred>
Count count_plateau_where(std::int64_t k, std::int64_t m, int workers, Pred pred) {
  if (k < 1) throw std::domain_error("enum_plateau: k must be >= 1");
  if (m < 2 * k) return 0;
  const auto rs = first_rectangles(k, m);
  return parallel_count(rs.size(), workers, [&](std::size_t i) {
    std::uint64_t c = 0;
    const auto [h, d] = rs[i];
    PlateauPolycube cur{{{0, h, 0, d}}};
    extend_plateau(k, m - h - d, cur, [&](const PlateauPolycube& p) {
      if (pred(p)) ++c;
    });
    return c;
  });
}

}  // namespace

bool is_valid(const ColumnConvexPoly& p) {
  if (p.columns.empty()) return false;
  for (std::size_t i = 0; i < p.columns.size(); ++i) {
    if (p.columns[i].height < 1) return false;
    if (i > 0 && !intervals_overlap(p.columns[i - 1].bottom, p.columns[i - 1].height,
                                    p.columns[i].bottom, p.columns[i].height))
      return false;
  }
  return true;
}

bool is_valid(const PlateauPolycube& p) {
  if (p.plateaus.empty()) return false;
  for (std::size_t i = 0; i < p.plateaus.size(); ++i) {
    const auto& c = p.plateaus[i];
    if (c.h < 1 || c.d < 1) return false;
    if (i == 0) continue;
    const auto& b = p.plateaus[i - 1];
    if (!intervals_overlap(b.y0, b.h, c.y0, c.h) || !intervals_overlap(b.z0, b.d, c.z0, c.d))
      return false;
  }
  return true;
}

ColumnConvexPoly normalized(ColumnConvexPoly p) {
  if (p.columns.empty()) return p;
  const std::int64_t shift = p.columns.front().bottom;
  for (auto& c : p.columns) c.bottom -= shift;
  return p;
}

PlateauPolycube normalized(PlateauPolycube p) {
  if (p.plateaus.empty()) return p;
  const std::int64_t dy = p.plateaus.front().y0;
  const std::int64_t dz = p.plateaus.front().z0;
  for (auto& s : p.plateaus) {
    s.y0 -= dy;
    s.z0 -= dz;
  }
  return p;
}

bool is_directed(const ColumnConvexPoly& p) {
  if (!is_valid(p)) return false;
  std::vector<Voxel> cells;
  for (std::size_t i = 0; i < p.columns.size(); ++i)
    for (std::int64_t y = 0; y < p.columns[i].height; ++y)
      cells.push_back({static_cast<std::int64_t>(i), p.columns[i].bottom + y, 0});
  const VoxelSet v(std::move(cells));
  const DenseGrid grid(v);
  const int root = grid.find({0, p.columns.front().bottom, 0});
  constexpr std::array<Voxel, 2> steps{{{1, 0, 0}, {0, 1, 0}}};
  return reach(v, grid, root, steps) == v.cells.size();
}

bool is_directed(const VoxelSet& v) {
  if (v.cells.empty()) return false;
  const DenseGrid grid(v);
  const std::int64_t first_i = v.cells.front()[0];  // cells are sorted by i first
  for (std::size_t r = 0; r < v.cells.size() && v.cells[r][0] == first_i; ++r)
    if (reach(v, grid, static_cast<int>(r), kForwardSteps) == v.cells.size()) return true;
  return false;
}

VoxelSet voxels(const PlateauPolycube& p) {
  std::vector<Voxel> cells;
  for (std::size_t i = 0; i < p.plateaus.size(); ++i) {
    const auto& s = p.plateaus[i];
    for (std::int64_t y = s.y0; y < s.y0 + s.h; ++y)
      for (std::int64_t z = s.z0; z < s.z0 + s.d; ++z)
        cells.push_back({static_cast<std::int64_t>(i), y, z});
  }
  return VoxelSet(std::move(cells));
}

bool is_face_connected(const VoxelSet& v) {
  if (v.cells.empty()) return false;
  const DenseGrid grid(v);
  return reach(v, grid, 0, kFaceSteps) == v.cells.size();
}

Count lateral_area_voxels(const VoxelSet& v) {
  if (v.cells.empty()) throw std::domain_error("lateral_area_voxels: empty voxel set");
  if (!is_face_connected(v)) throw std::domain_error("lateral_area_voxels: voxel set is not face-connected");
  std::vector<std::pair<std::int64_t, std::int64_t>> ij, ik;
  for (const auto& c : v.cells) {
    ij.emplace_back(c[0], c[1]);
    ik.emplace_back(c[0], c[2]);
  }
  for (auto* s : {&ij, &ik}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  return Count(ij.size() + ik.size());
}

std::pair<ColumnConvexPoly, ColumnConvexPoly> project(const PlateauPolycube& p) {
  ColumnConvexPoly a, b;
  for (const auto& s : p.plateaus) {
    a.columns.push_back({s.y0, s.h});
    b.columns.push_back({s.z0, s.d});
  }
  return {normalized(std::move(a)), normalized(std::move(b))};
}

PlateauPolycube unproject(const ColumnConvexPoly& a, const ColumnConvexPoly& b) {
  if (a.width() != b.width()) throw std::domain_error("unproject: projections have different widths");
  if (!is_valid(a) || !is_valid(b)) throw std::domain_error("unproject: invalid column-convex polyomino");
  PlateauPolycube p;
  for (std::size_t i = 0; i < a.columns.size(); ++i)
    p.plateaus.push_back({a.columns[i].bottom, a.columns[i].height, b.columns[i].bottom,
                          b.columns[i].height});
  return normalized(std::move(p));
}

void for_each_cc(std::int64_t k, std::int64_t n, const PolyVisitor& visit) {
  if (k < 1) throw std::domain_error("for_each_cc: k must be >= 1");
  if (n < k) return;
  for (std::int64_t h : first_heights(k, n)) {
    ColumnConvexPoly cur{{{0, h}}};
    extend_cc(k, n - h, cur, visit);
  }
}

void for_each_plateau(std::int64_t k, std::int64_t m, const PolycubeVisitor& visit) {
  if (k < 1) throw std::domain_error("for_each_plateau: k must be >= 1");
  if (m < 2 * k) return;
  for (const auto& [h, d] : first_rectangles(k, m)) {
    PlateauPolycube cur{{{0, h, 0, d}}};
    extend_plateau(k, m - h - d, cur, visit);
  }
}

Count enum_cc(std::int64_t k, std::int64_t n, int workers) {
  return count_cc_where(k, n, workers, [](const ColumnConvexPoly&) { return true; });
}

Count enum_dcc(std::int64_t k, std::int64_t n, int workers) {
  return count_cc_where(k, n, workers, [](const ColumnConvexPoly& p) { return is_directed(p); });
}

Count enum_plateau(std::int64_t k, std::int64_t m, int workers) {
  return count_plateau_where(k, m, workers, [](const PlateauPolycube&) { return true; });
}

Count enum_dplateau(std::int64_t k, std::int64_t m, int workers) {
  return count_plateau_where(k, m, workers,
                             [](const PlateauPolycube& p) { return is_directed(voxels(p)); });
}

std::string format_object(const ColumnConvexPoly& p) {
  std::string out;
  for (const auto& c : p.columns) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(c.bottom) + "," + std::to_string(c.height) + ")";
  }
  return out;
}

std::string format_object(const PlateauPolycube& p) {
  std::string out;
  for (const auto& s : p.plateaus) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(s.y0) + "," + std::to_string(s.h) + "," + std::to_string(s.z0) +
           "," + std::to_string(s.d) + ")";
  }
  return out;
}

}  // namespace plateau
