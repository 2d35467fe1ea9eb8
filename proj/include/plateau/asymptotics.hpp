#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plateau/bigint.hpp"
#include "plateau/counting.hpp"
#include "plateau/ratpoly.hpp"

namespace plateau {

// Raised when sample points do not fit a polynomial of the requested degree.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SamplePoint = std::pair<std::int64_t, BigInt>;

/// Exact Newton interpolation through the first degree+1 points; every further
/// point must lie on the result or FitError is thrown. The result has degree
/// <= `degree`. Throws FitError on too few points or repeated k.
RatPoly interpolate(std::span<const SamplePoint> points, std::int64_t degree);

/// Smallest k at which h_{k,k+i} (cc) or r_{k,2k+i} (plateau) is polynomial.
std::int64_t fit_min_k(Family f, int offset);

/// Fits h_{k,k+offset} or r_{k,2k+offset} on k = k_min .. k_min+k_count-1
/// with degree offset. k_count must be >= offset+2 so the fit is
/// over-determined. Throws std::domain_error on bad ranges and FitError when
/// the values are not on a degree-offset polynomial.
RatPoly fit_family(Family f, int offset, std::int64_t k_min, std::int64_t k_count,
                   int workers = 1);

/// 4^i / i! for cc, 8^i / i! for plateau.
Rational leading_coeff_expected(Family f, int offset);

struct CoefficientCheck {
  std::int64_t power = 0;
  Rational printed;
  Rational fitted;
  bool match = false;
};

struct CorollaryCheck {
  Family family = Family::cc;
  int offset = 0;
  RatPoly fitted;
  std::vector<CoefficientCheck> coefficients;
  bool all_match() const;
};

/// Fits every cc and plateau offset in 3..max_offset and compares
/// coefficient-by-coefficient with the printed corollaries (plateau read as
/// r_{k,2k+i}). Mismatches are recorded, not thrown.
std::vector<CorollaryCheck> verify_corollaries(int max_offset, int workers = 1);

}  // namespace plateau
