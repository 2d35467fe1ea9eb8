#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "plateau/bigint.hpp"
#include "plateau/ratpoly.hpp"

namespace plateau {

enum class Family {
  dcc,       // directed column-convex polyominoes, by width and area
  cc,        // column-convex polyominoes, by width and area
  dplateau,  // directed plateau polycubes, by width and lateral area
  plateau,   // plateau polycubes, by width and lateral area
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view s);

/// Smallest nonzero size for width k: k for polyominoes, 2k for polycubes.
std::int64_t min_size(Family f, std::int64_t k);

// Counts of one family for 1 <= k <= k_max, 0 <= size <= size_max.
struct FamilyTable {
  Family family = Family::cc;
  std::int64_t k_max = 0;
  std::int64_t size_max = 0;
  std::vector<std::vector<Count>> by_width;  // by_width[k-1][size]

  /// Zero outside the stored range.
  Count at(std::int64_t k, std::int64_t size) const;
};

// Directed column-convex polyominoes: C(n+k-2, n-k).
Count count_dcc(std::int64_t k, std::int64_t n);

// Directed plateau polycubes.
Count s_conv(std::int64_t k, std::int64_t n);
Count s_closed(std::int64_t k, std::int64_t n);

/// The published triple-binomial sum for column-convex polyominoes, evaluated
/// exactly as written. It does not agree with the true counts (it gives 2 at
/// k=2, u=3 where there are 4); kept to make the disagreement reproducible.
Count alpha_lemma(std::int64_t k, std::int64_t u);

/// Column-convex polyominoes with k columns and area n (coefficient of p^n in
/// C_{k-1}).
Count count_cc(std::int64_t k, std::int64_t n);

/// First upto+1 values of count_cc(k, .) in one series expansion.
std::vector<Count> cc_row(std::int64_t k, std::int64_t upto);

// Plateau polycubes.
Count r_conv(std::int64_t k, std::int64_t m);
Count r_gf(std::int64_t k, std::int64_t m);

/// h_{k,k+offset} for offset 0..2 from the exact small-offset formulas.
Count h_special(std::int64_t k, int offset);
/// r_{k,2k+offset} for offset 0..2.
Count r_special(std::int64_t k, int offset);

/// h_{k,k+offset} / r_{k,2k+offset} for offset 0..2 as polynomials in k.
const RatPoly& printed_special(Family f, int offset);

/// The published degree-`offset` polynomial (offset 3..6) for h_{k,k+offset}
/// (Family::cc) or r_{k,2k+offset} (Family::plateau).
const RatPoly& printed_corollary(Family f, int offset);
/// Smallest k for which the printed corollary is stated to hold.
std::int64_t corollary_min_k(int offset);
Rational corollary_poly(Family f, int offset, const Rational& k);

/// Authoritative table per family: dcc closed form, cc by series, dplateau
/// closed form, plateau by the squared series. `workers` > 1 splits the
/// widths across threads; the result does not depend on it.
FamilyTable build_table(Family f, std::int64_t k_max, std::int64_t size_max, int workers = 1);

}  // namespace plateau
