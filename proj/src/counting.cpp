#include "plateau/counting.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "plateau/combinatorics.hpp"
#include "plateau/gfseries.hpp"

namespace plateau {

namespace {

void require_width(std::int64_t k, const char* what) {
  if (k < 1) throw std::domain_error(std::string(what) + ": k must be >= 1");
}

RatPoly rat_poly(std::initializer_list<Rational> high_to_low) {
  std::vector<Rational> c(high_to_low.begin(), high_to_low.end());
  std::reverse(c.begin(), c.end());
  return RatPoly(std::move(c));
}

Rational q(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::dcc: return "dcc";
    case Family::cc: return "cc";
    case Family::dplateau: return "dplateau";
    case Family::plateau: return "plateau";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::dcc, Family::cc, Family::dplateau, Family::plateau})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::int64_t min_size(Family f, std::int64_t k) {
  return (f == Family::dcc || f == Family::cc) ? k : 2 * k;
}

Count FamilyTable::at(std::int64_t k, std::int64_t size) const {
  if (k < 1 || k > k_max || size < 0 || size > size_max) return 0;
  return by_width[k - 1][size];
}

Count count_dcc(std::int64_t k, std::int64_t n) {
  require_width(k, "count_dcc");
  if (n < k) return 0;
  return binomial(n + k - 2, n - k);
}

Count s_conv(std::int64_t k, std::int64_t n) {
  require_width(k, "s_conv");
  Count sum = 0;
  for (std::int64_t i = k; i <= n - k; ++i)
    sum += binomial(i + k - 2, i - k) * binomial(n - i + k - 2, n - i - k);
  return sum;
}

Count s_closed(std::int64_t k, std::int64_t n) {
  require_width(k, "s_closed");
  if (n < 2 * k) return 0;
  return binomial(n + 2 * k - 3, n - 2 * k);
}

Count alpha_lemma(std::int64_t k, std::int64_t u) {
  require_width(k, "alpha_lemma");
  Count sum = 0;
  // C(k-i-1, i) vanishes once 2i > k-1, C(2k-j-2, j) once 2j > 2k-2.
  for (std::int64_t i = 0; 2 * i <= k - 1; ++i)
    for (std::int64_t j = 0; 2 * j <= 2 * k - 2; ++j)
      sum += binomial(k - i - 1, i) * binomial(2 * k - j - 2, j) *
             binomial(k - 2 * i - 1, u - k - i - j);
  return sum;
}

std::vector<Count> cc_row(std::int64_t k, std::int64_t upto) {
  require_width(k, "cc_row");
  if (upto < 0) return {};
  return gf_coeffs(gf_C(k - 1), upto);
}

Count count_cc(std::int64_t k, std::int64_t n) {
  require_width(k, "count_cc");
  if (n < k) return 0;
  return cc_row(k, n)[n];
}

Count r_conv(std::int64_t k, std::int64_t m) {
  require_width(k, "r_conv");
  if (m < 2 * k) return 0;
  const auto row = cc_row(k, m);
  Count sum = 0;
  for (std::int64_t i = k; i <= m - k; ++i) sum += row[i] * row[m - i];
  return sum;
}

Count r_gf(std::int64_t k, std::int64_t m) {
  require_width(k, "r_gf");
  if (m < 0) return 0;
  return gf_coeffs(gf_R(k), m)[m];
}

Count h_special(std::int64_t k, int offset) {
  if (offset < 0 || offset > 2) throw std::domain_error("h_special: offset must be 0, 1 or 2");
  if (k < offset + 1) throw std::domain_error("h_special: k below the formula's range");
  switch (offset) {
    case 0: return 1;
    case 1: return 4 * Count(k) - 4;
    default: return 8 * Count(k) * k - 19 * Count(k) + 16;
  }
}

Count r_special(std::int64_t k, int offset) {
  if (offset < 0 || offset > 2) throw std::domain_error("r_special: offset must be 0, 1 or 2");
  if (k < offset + 1) throw std::domain_error("r_special: k below the formula's range");
  switch (offset) {
    case 0: return 1;
    case 1: return 8 * Count(k) - 8;
    default: return 32 * Count(k) * k - 70 * Count(k) + 48;
  }
}

const RatPoly& printed_special(Family f, int offset) {
  static const std::vector<RatPoly> cc = {
      rat_poly({q(1)}), rat_poly({q(4), q(-4)}), rat_poly({q(8), q(-19), q(16)})};
  static const std::vector<RatPoly> plateau = {
      rat_poly({q(1)}), rat_poly({q(8), q(-8)}), rat_poly({q(32), q(-70), q(48)})};
  if (offset < 0 || offset > 2) throw std::domain_error("special: offset must be in 0..2");
  switch (f) {
    case Family::cc: return cc[offset];
    case Family::plateau: return plateau[offset];
    default: throw std::domain_error("special: family must be cc or plateau");
  }
}

const RatPoly& printed_corollary(Family f, int offset) {
  static const std::vector<RatPoly> cc = {
      rat_poly({q(32, 3), q(-44), q(268, 3), q(-76)}),
      rat_poly({q(32, 3), q(-200, 3), q(1403, 6), q(-2717, 6), q(384)}),
      rat_poly({q(128, 15), q(-224, 3), q(1174, 3), q(-3784, 3), q(35522, 15), q(-2004)}),
      rat_poly({q(256, 45), q(-992, 15), q(4292, 9), q(-13427, 6), q(617753, 90), q(-189503, 15),
                q(10672)}),
  };
  static const std::vector<RatPoly> plateau = {
      rat_poly({q(256, 3), q(-304), q(1376, 3), q(-280)}),
      rat_poly({q(512, 3), q(-2624, 3), q(6454, 3), q(-8509, 3), q(1632)}),
      rat_poly({q(4096, 15), q(-5632, 3), q(19888, 3), q(-42104, 3), q(85888, 5), q(-9512)}),
      rat_poly({q(16384, 45), q(-48128, 15), q(136256, 9), q(-45444), q(3971986, 45),
                q(-1543582, 15), q(55440)}),
  };
  if (offset < 3 || offset > 6) throw std::domain_error("corollary: offset must be in 3..6");
  switch (f) {
    case Family::cc: return cc[offset - 3];
    case Family::plateau: return plateau[offset - 3];
    default: throw std::domain_error("corollary: family must be cc or plateau");
  }
}

std::int64_t corollary_min_k(int offset) { return offset + 1; }

Rational corollary_poly(Family f, int offset, const Rational& k) {
  return printed_corollary(f, offset)(k);
}

namespace {

std::vector<Count> table_row(Family f, std::int64_t k, std::int64_t size_max) {
  std::vector<Count> row;
  switch (f) {
    case Family::dcc:
      row.resize(size_max + 1);
      for (std::int64_t n = 0; n <= size_max; ++n) row[n] = count_dcc(k, n);
      break;
    case Family::cc:
      row = cc_row(k, size_max);
      break;
    case Family::dplateau:
      row.resize(size_max + 1);
      for (std::int64_t n = 0; n <= size_max; ++n) row[n] = s_closed(k, n);
      break;
    case Family::plateau:
      row = gf_coeffs(gf_R(k), size_max);
      break;
  }
  return row;
}

}  // namespace

FamilyTable build_table(Family f, std::int64_t k_max, std::int64_t size_max, int workers) {
  if (k_max < 1 || size_max < 1) throw std::domain_error("build_table: bounds must be >= 1");
  FamilyTable t{f, k_max, size_max, std::vector<std::vector<Count>>(k_max)};
  std::atomic<std::int64_t> next{1};
  auto work = [&] {
    for (std::int64_t k = next++; k <= k_max; k = next++) t.by_width[k - 1] = table_row(f, k, size_max);
  };
  const int n = std::clamp<int>(workers, 1, static_cast<int>(k_max));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < n; ++w) pool.emplace_back(work);
    work();
  }
  return t;
}

}  // namespace plateau
