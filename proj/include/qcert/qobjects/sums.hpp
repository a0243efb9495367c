#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/polyring/int_poly.hpp"
#include "qcert/polyring/laurent_poly.hpp"
#include "qcert/qcore/number_theory.hpp"
#include "qcert/qcore/q_binomial.hpp"

namespace qcert {

/// 1 + 2 sum_{k=1}^{n-1} (-1)^k q^{-binom(k,2)} [2k-1 choose k]_q.
inline LaurentPoly gk_lhs(std::int64_t n) {
  if (n < 1) throw InvalidArgument("gk_lhs: n must be positive");
  LaurentPoly acc = LaurentPoly::constant(1);
  QBinomialCursor c(1, 1);
  for (std::int64_t k = 1; k < n; ++k) {
    c.move_to(2 * k - 1, k);
    acc.add_term(c.value(), (k % 2 == 0) ? 2 : -2, -binom2(k));
  }
  return acc;
}

/// 1 + 2 sum_{k=1}^{n-1} q^k [2k-1 choose k]_q.
inline IntPoly dual_lhs(std::int64_t n) {
  if (n < 1) throw InvalidArgument("dual_lhs: n must be positive");
  IntPoly acc{1};
  QBinomialCursor c(1, 1);
  for (std::int64_t k = 1; k < n; ++k) {
    c.move_to(2 * k - 1, k);
    acc.add_multiple_shifted(c.value(), 2, static_cast<std::size_t>(k));
  }
  return acc;
}

/// G(n) = sum_k (-1)^k q^{binom(k,2)} [n-k choose k]_q.
inline IntPoly g_sum(std::int64_t n) {
  if (n < 0) throw InvalidArgument("g_sum: n must be nonnegative");
  IntPoly acc;
  QBinomialCursor c(n, 0);
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    c.move_to(n - k, k);
    acc.add_scaled_shifted(c.value(), (k % 2 == 0) ? 1 : -1, static_cast<std::size_t>(binom2(k)));
  }
  return acc;
}

/// H(n) = (-1)^n (n+1 / 3) q^{binom(n,2)/3}; zero when the symbol vanishes.
inline IntPoly h_closed(std::int64_t n) {
  if (n < 0) throw InvalidArgument("h_closed: n must be nonnegative");
  const int sym = legendre3(n + 1);
  if (sym == 0) return {};
  const std::int64_t e = integral_exponent(binom2(n), 3, "h_closed");
  const int sign = ((n % 2 == 0) ? 1 : -1) * sym;
  return IntPoly::monomial(sign, static_cast<std::size_t>(e));
}

/// S(n,d) = sum_{k=0}^{n-1} q^k [2k choose k+d]_q.
inline IntPoly s_sum(std::int64_t n, std::int64_t d) {
  if (n < 1) throw InvalidArgument("s_sum: n must be positive");
  IntPoly acc;
  const std::int64_t k0 = std::abs(d);
  if (k0 >= n) return acc;
  QBinomialCursor c(2 * k0, k0 + d);
  for (std::int64_t k = k0; k < n; ++k) {
    c.move_to(2 * k, k + d);
    acc.add_scaled_shifted(c.value(), 1, static_cast<std::size_t>(k));
  }
  return acc;
}

/**
 * All S(n,d) for 0 <= n <= n_max and |d| <= d_max, built incrementally as
 * S(n+1,d) = S(n,d) + q^n [2n choose n+d]_q from one row per n.
 * Index as table[n][d + d_max]; row n = 0 is all zero.
 */
inline std::vector<std::vector<IntPoly>> s_sum_table(std::int64_t n_max, std::int64_t d_max) {
  const auto width = static_cast<std::size_t>(2 * d_max + 1);
  std::vector<std::vector<IntPoly>> t(static_cast<std::size_t>(n_max) + 1, std::vector<IntPoly>(width));
  for (std::int64_t n = 0; n < n_max; ++n) {
    const std::vector<IntPoly> row = q_binomial_row(2 * n);
    auto& next = t[static_cast<std::size_t>(n) + 1];
    next = t[static_cast<std::size_t>(n)];
    for (std::int64_t d = -d_max; d <= d_max; ++d) {
      const std::int64_t k = n + d;
      if (k < 0 || k > 2 * n) continue;
      next[static_cast<std::size_t>(d + d_max)].add_scaled_shifted(row[static_cast<std::size_t>(k)], 1,
                                                                  static_cast<std::size_t>(n));
    }
  }
  return t;
}

/// Which residue the leading Legendre factor of the MT right side reads.
enum class LeadingSymbol {
  Printed,   // (n - d - k / 3)
  Absolute,  // (n - |d| - k / 3)
};

/**
 * Right side of Theorem MT from a precomputed row [2n choose 0..2n]_q:
 *   sum_{k=0}^{n-|d|} (lead / 3) q^{(2(n-k)^2 - (n-k)(n-|d|-k / 3) - 2d^2 - 1)/3} [2n choose k]_q.
 * Terms whose leading symbol vanishes are skipped; a surviving term with a
 * fractional exponent throws NonIntegralExponent.
 */
inline LaurentPoly t_sum_from_row(std::int64_t n, std::int64_t d, const std::vector<IntPoly>& row,
                                  LeadingSymbol lead = LeadingSymbol::Printed) {
  const std::int64_t ad = std::abs(d);
  if (n < ad) throw InvalidArgument("t_sum: requires n >= |d|");
  LaurentPoly acc;
  for (std::int64_t k = 0; k <= n - ad; ++k) {
    const int sym = legendre3(lead == LeadingSymbol::Printed ? n - d - k : n - ad - k);
    if (sym == 0) continue;
    const std::int64_t m = n - k;
    const std::int64_t e = integral_exponent(2 * m * m - m * legendre3(n - ad - k) - 2 * d * d - 1, 3, "t_sum");
    acc.add_term(row[static_cast<std::size_t>(k)], sym, e);
  }
  return acc;
}

inline LaurentPoly t_sum(std::int64_t n, std::int64_t d, LeadingSymbol lead = LeadingSymbol::Printed) {
  const std::int64_t ad = std::abs(d);
  if (n < ad) throw InvalidArgument("t_sum: requires n >= |d|");
  std::vector<IntPoly> row(static_cast<std::size_t>(n - ad) + 1);
  QBinomialCursor c(2 * n, 0);
  for (std::int64_t k = 0; k <= n - ad; ++k) {
    c.move_to(2 * n, k);
    row[static_cast<std::size_t>(k)] = c.value();
  }
  return t_sum_from_row(n, d, row, lead);
}

}  // namespace qcert
