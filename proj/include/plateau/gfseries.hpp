#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "plateau/bigint.hpp"

namespace plateau {

// Dense univariate polynomial over the integers; coeffs[i] multiplies t^i.
// Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and equality is coefficient-vector equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long long> coeffs);

  static Poly monomial(std::int64_t exponent, BigInt coeff = 1);
  /// (1 - t)^e
  static Poly one_minus_t_pow(std::int64_t e);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Coefficient of t^i, zero beyond the degree.
  BigInt operator[](std::int64_t i) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& base, std::int64_t e);
Poly poly_neg(const Poly& a);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

// num/den as a formal power series. The denominator's constant term is kept
// positive (sign moved into the numerator); extraction requires it to be 1.
class RationalGF {
 public:
  /// The zero series.
  RationalGF();
  /// Throws std::domain_error when den has a zero constant term.
  RationalGF(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

 private:
  Poly num_;
  Poly den_;
};

/// First upto+1 Taylor coefficients via the linear recurrence
/// c_n = num_n - sum_{i>=1} den_i c_{n-i}. Throws std::domain_error unless the
/// denominator's constant term is exactly 1.
std::vector<BigInt> gf_coeffs(const RationalGF& gf, std::int64_t upto);

/// t^k / (1-t)^(2k-1): directed column-convex polyominoes with k columns.
RationalGF gf_dcc_width(std::int64_t k);

/// t^(2k) / (1-t)^(4k-2): directed plateau polycubes of width k by lateral
/// area. k = 0 gives the zero series.
RationalGF gf_S_k(std::int64_t k);

/// t^2 (1-t)^2 / ((1-t)^4 - t^2): directed plateau polycubes of any width.
RationalGF gf_S();

/// Coefficient of x^k t^n in x t^2 (1-t)^2 / ((1-t)^4 - x t^2), obtained by
/// expanding in x (the x^k term is t^(2k) (1-t)^2 / (1-t)^(4k)) without
/// cancelling the common (1-t)^2 factor.
Count gf_S_xt_coeff(std::int64_t k, std::int64_t n);

/// p^(k+1) sum_i D(k-i, i) p^i / (1-p)^(2k+1): column-convex polyominoes
/// with k+1 columns by area.
RationalGF gf_C(std::int64_t k);

/// C_{k-1}(p)^2: plateau polycubes of width k by lateral area.
RationalGF gf_R(std::int64_t k);

}  // namespace plateau
