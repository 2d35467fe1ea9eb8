#include "plateau/ratpoly.hpp"

namespace plateau {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational RatPoly::operator()(const Rational& k) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::int64_t p = degree(); p >= 0; --p) {
    const Rational& c = coeffs_[p];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool integral = denominator(mag) == 1;
    if (p == 0 || mag != 1)
      out += integral || p == 0 ? plateau::to_string(mag) : "(" + plateau::to_string(mag) + ")";
    if (p >= 1) out += var;
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out;
}

}  // namespace plateau
