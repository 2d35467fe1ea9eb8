#include "plateau/asymptotics.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace plateau {

namespace {

// c * (k - root) for c given low-to-high.
std::vector<Rational> times_linear(const std::vector<Rational>& c, const Rational& root) {
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i + 1] += c[i];
    out[i] -= c[i] * root;
  }
  return out;
}

void require_fit_family(Family f) {
  if (f != Family::cc && f != Family::plateau)
    throw std::domain_error("asymptotics: family must be cc or plateau");
}

}  // namespace

RatPoly interpolate(std::span<const SamplePoint> points, std::int64_t degree) {
  if (degree < 0) throw FitError("interpolate: negative degree");
  const auto need = static_cast<std::size_t>(degree + 1);
  if (points.size() < need)
    throw FitError("interpolate: need " + std::to_string(need) + " points for degree " +
                   std::to_string(degree) + ", got " + std::to_string(points.size()));
  std::set<std::int64_t> ks;
  for (const auto& p : points)
    if (!ks.insert(p.first).second) throw FitError("interpolate: repeated k = " + std::to_string(p.first));

  // Newton divided differences, in place.
  std::vector<Rational> dd(need);
  for (std::size_t i = 0; i < need; ++i) dd[i] = Rational(points[i].second);
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);

  std::vector<Rational> poly{dd[need - 1]};
  for (std::size_t i = need - 1; i-- > 0;) {
    poly = times_linear(poly, Rational(points[i].first));
    poly[0] += dd[i];
  }
  RatPoly fitted(std::move(poly));

  for (std::size_t i = need; i < points.size(); ++i) {
    const Rational at = fitted(Rational(points[i].first));
    if (at != Rational(points[i].second))
      throw FitError("interpolate: point k = " + std::to_string(points[i].first) + " has value " +
                     points[i].second.str() + " but the degree-" + std::to_string(degree) +
                     " fit gives " + to_string(at));
  }
  return fitted;
}

std::int64_t fit_min_k(Family f, int offset) {
  require_fit_family(f);
  if (offset < 0) throw std::domain_error("fit_min_k: offset must be >= 0");
  return offset + 1;
}

RatPoly fit_family(Family f, int offset, std::int64_t k_min, std::int64_t k_count, int workers) {
  require_fit_family(f);
  if (offset < 0) throw std::domain_error("fit_family: offset must be >= 0");
  if (k_min < fit_min_k(f, offset))
    throw std::domain_error("fit_family: k_min must be >= " + std::to_string(fit_min_k(f, offset)));
  if (k_count < offset + 2)
    throw std::domain_error("fit_family: need at least " + std::to_string(offset + 2) + " sample widths");

  const std::int64_t k_max = k_min + k_count - 1;
  const auto size_of = [&](std::int64_t k) { return (f == Family::cc ? k : 2 * k) + offset; };
  const FamilyTable table = build_table(f, k_max, size_of(k_max), workers);
  std::vector<SamplePoint> points;
  for (std::int64_t k = k_min; k <= k_max; ++k) points.emplace_back(k, table.at(k, size_of(k)));
  return interpolate(points, offset);
}

Rational leading_coeff_expected(Family f, int offset) {
  require_fit_family(f);
  if (offset < 0) throw std::domain_error("leading_coeff_expected: offset must be >= 0");
  const BigInt base = f == Family::cc ? 4 : 8;
  BigInt num = 1, fact = 1;
  for (int i = 1; i <= offset; ++i) {
    num *= base;
    fact *= i;
  }
  return Rational(num, fact);
}

bool CorollaryCheck::all_match() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const CoefficientCheck& c) { return c.match; });
}

std::vector<CorollaryCheck> verify_corollaries(int max_offset, int workers) {
  if (max_offset < 3 || max_offset > 6)
    throw std::domain_error("verify_corollaries: max_offset must be in 3..6");
  std::vector<CorollaryCheck> out;
  for (Family f : {Family::cc, Family::plateau}) {
    for (int offset = 3; offset <= max_offset; ++offset) {
      CorollaryCheck check{f, offset, fit_family(f, offset, fit_min_k(f, offset), offset + 6, workers), {}};
      const RatPoly& printed = printed_corollary(f, offset);
      const std::int64_t top = std::max(printed.degree(), check.fitted.degree());
      for (std::int64_t p = top; p >= 0; --p) {
        CoefficientCheck c{p, printed.coeff(p), check.fitted.coeff(p), false};
        c.match = c.printed == c.fitted;
        check.coefficients.push_back(std::move(c));
      }
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace plateau
