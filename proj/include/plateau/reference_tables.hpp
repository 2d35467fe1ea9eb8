#pragma once

// Values as printed in the published tables and triangle, including their
// typographical errors. Used only for comparison.

#include <cstdint>
#include <vector>

namespace plateau::reference {

struct PrintedRow {
  std::int64_t label;                 // row label as printed
  std::vector<std::uint64_t> values;  // k = 1, 2, ...
};

/// h_{k,n}, n = 1..10 (rows), k = 1..10.
const std::vector<PrintedRow>& column_convex_table();

/// r_{k,m}, k = 1..7; 24 printed rows. The rows after m = 15 carry wrong
/// labels (16, 17, 16, 17, 18, ..., 23); row i of the table is m = i + 2.
const std::vector<PrintedRow>& plateau_table();

/// Delannoy triangle rows 0..9.
const std::vector<std::vector<std::uint64_t>>& delannoy_triangle();

}  // namespace plateau::reference
