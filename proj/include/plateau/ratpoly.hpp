#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plateau/bigint.hpp"

namespace plateau {

// Polynomial in k with exact rational coefficients; coeffs[i] multiplies k^i.
// The leading coefficient is nonzero (the zero polynomial is empty).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational coeff(std::int64_t i) const;
  Rational operator()(const Rational& k) const;

  /// "8k^2 - 19k + 16", "32/3k^3 - ...", "0" for the zero polynomial.
  std::string to_string(const std::string& var = "k") const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace plateau
