#pragma once

#include <cstdint>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/polyring/int_poly.hpp"
#include "qcert/qcore/q_binomial.hpp"

namespace qcert {

/// [2n choose n]_q / [n+1]_q, computed as ([2n choose n]_q (1 - q)) / (1 - q^{n+1}).
inline IntPoly q_catalan_by_division(std::int64_t n) {
  if (n < 0) throw InvalidArgument("q_catalan: n must be nonnegative");
  IntPoly v = q_binomial(2 * n, n);
  v.mul_one_minus_q_pow(1);
  v.div_one_minus_q_pow(static_cast<std::size_t>(n + 1));
  return v;
}

namespace detail {

// C_n = [2n, n] - q [2n, n+1], with the cursor sitting at (2n, n).
inline IntPoly catalan_from_cursor(QBinomialCursor& c, std::int64_t n) {
  c.move_to(2 * n, n);
  IntPoly central = c.value();
  IntPoly quotient = central;
  quotient.mul_one_minus_q_pow(1);
  quotient.div_one_minus_q_pow(static_cast<std::size_t>(n + 1));
  c.move_to(2 * n, n + 1);
  central.add_scaled_shifted(c.value(), -1, 1);
  if (!(central == quotient)) throw Error("q_catalan: difference and quotient forms disagree at n=" + std::to_string(n));
  return central;
}

}  // namespace detail

/// q-Catalan number by the difference form, checked against the quotient form.
inline IntPoly q_catalan(std::int64_t n) {
  if (n < 0) throw InvalidArgument("q_catalan: n must be nonnegative");
  QBinomialCursor c(2 * n, n);
  return detail::catalan_from_cursor(c, n);
}

/// C_0^q, ..., C_{n_max}^q.
inline std::vector<IntPoly> q_catalan_sequence(std::int64_t n_max) {
  std::vector<IntPoly> out;
  if (n_max < 0) return out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  QBinomialCursor c(0, 0);
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(detail::catalan_from_cursor(c, n));
  return out;
}

}  // namespace qcert
