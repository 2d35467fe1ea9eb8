#include "plateau/gfseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "plateau/combinatorics.hpp"

namespace plateau {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::monomial(std::int64_t exponent, BigInt coeff) {
  if (exponent < 0) throw std::domain_error("Poly::monomial: negative exponent");
  std::vector<BigInt> c(exponent + 1);
  c[exponent] = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::one_minus_t_pow(std::int64_t e) {
  if (e < 0) throw std::domain_error("Poly::one_minus_t_pow: negative exponent");
  std::vector<BigInt> c(e + 1);
  for (std::int64_t i = 0; i <= e; ++i) c[i] = (i % 2 == 0) ? binomial(e, i) : BigInt(-binomial(e, i));
  return Poly(std::move(c));
}

BigInt Poly::operator[](std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[i];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return Poly(std::move(c));
}

Poly poly_neg(const Poly& a) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<BigInt> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return Poly(std::move(c));
}

Poly poly_pow(const Poly& base, std::int64_t e) {
  if (e < 0) throw std::domain_error("poly_pow: negative exponent");
  Poly result{1};
  Poly b = base;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, b);
    e >>= 1;
    if (e > 0) b = poly_mul(b, b);
  }
  return result;
}

RationalGF::RationalGF() : num_(), den_{1} {}

RationalGF::RationalGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_[0] == 0) throw std::domain_error("RationalGF: denominator has zero constant term");
  if (den_[0] < 0) {
    num_ = poly_neg(num_);
    den_ = poly_neg(den_);
  }
}

std::vector<BigInt> gf_coeffs(const RationalGF& gf, std::int64_t upto) {
  if (upto < 0) throw std::domain_error("gf_coeffs: upto must be nonnegative");
  const auto& den = gf.den().coeffs();
  if (den.front() != 1)
    throw std::domain_error("gf_coeffs: denominator constant term must be 1, got " +
                            den.front().str());
  const std::int64_t order = gf.den().degree();
  std::vector<BigInt> c(upto + 1);
  for (std::int64_t n = 0; n <= upto; ++n) {
    BigInt v = gf.num()[n];
    const std::int64_t lim = std::min(order, n);
    for (std::int64_t i = 1; i <= lim; ++i) v -= den[i] * c[n - i];
    c[n] = std::move(v);
  }
  return c;
}

RationalGF gf_dcc_width(std::int64_t k) {
  if (k < 1) throw std::domain_error("gf_dcc_width: k must be >= 1");
  return {Poly::monomial(k), Poly::one_minus_t_pow(2 * k - 1)};
}

RationalGF gf_S_k(std::int64_t k) {
  if (k < 0) throw std::domain_error("gf_S_k: k must be >= 0");
  if (k == 0) return {};
  return {Poly::monomial(2 * k), Poly::one_minus_t_pow(4 * k - 2)};
}

RationalGF gf_S() {
  const Poly t2 = Poly::monomial(2);
  return {t2 * Poly::one_minus_t_pow(2), Poly::one_minus_t_pow(4) - t2};
}

Count gf_S_xt_coeff(std::int64_t k, std::int64_t n) {
  if (k < 1) throw std::domain_error("gf_S_xt_coeff: k must be >= 1");
  if (n < 0) return 0;
  // x A / (1 - x B) with A = t^2 (1-t)^2 / (1-t)^4 and B = t^2 / (1-t)^4
  // contributes A B^(k-1) at x^k.
  const Poly a_num = Poly::monomial(2) * Poly::one_minus_t_pow(2);
  const Poly quartic = Poly::one_minus_t_pow(4);
  const Poly num = a_num * poly_pow(Poly::monomial(2), k - 1);
  const Poly den = quartic * poly_pow(quartic, k - 1);
  return gf_coeffs(RationalGF(num, den), n)[n];
}

RationalGF gf_C(std::int64_t k) {
  if (k < 0) throw std::domain_error("gf_C: k must be >= 0");
  std::vector<BigInt> num(2 * k + 2);
  const auto diag = antidiagonal(k);
  for (std::int64_t i = 0; i <= k; ++i) num[k + 1 + i] = diag[i];
  return {Poly(std::move(num)), Poly::one_minus_t_pow(2 * k + 1)};
}

RationalGF gf_R(std::int64_t k) {
  if (k < 1) throw std::domain_error("gf_R: k must be >= 1");
  const RationalGF c = gf_C(k - 1);
  return {c.num() * c.num(), c.den() * c.den()};
}

}  // namespace plateau
