#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qcert/congruences/report.hpp"
#include "qcert/qcore/gauss.hpp"
#include "qcert/qcore/number_theory.hpp"
#include "qcert/qobjects/catalan.hpp"
#include "qcert/qobjects/fibonacci.hpp"

// Congruences for partial sums of q-Catalan numbers modulo Phi_n(q).

namespace qcert {

/// plain = sum_{k<n} q^k C_k^q, alternating = sum_{k<n} (-1)^k q^{-binom(k,2)} C_k^q.
struct CatalanPartialSums {
  IntPoly plain;
  LaurentPoly alternating;
};

/// Partial sums for n = 0..n_max, index n.
inline std::vector<CatalanPartialSums> catalan_partial_sums(std::int64_t n_max) {
  std::vector<CatalanPartialSums> out(static_cast<std::size_t>(n_max) + 1);
  if (n_max < 1) return out;
  const std::vector<IntPoly> cat = q_catalan_sequence(n_max - 1);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t k = n - 1;
    CatalanPartialSums next = out[static_cast<std::size_t>(k)];
    next.plain.add_scaled_shifted(cat[static_cast<std::size_t>(k)], 1, static_cast<std::size_t>(k));
    next.alternating.add_term(cat[static_cast<std::size_t>(k)], k % 2 ? -1 : 1, -binom2(k));
    out[static_cast<std::size_t>(n)] = std::move(next);
  }
  return out;
}

/// q^{floor(n/3)} when n == 0, 1 (mod 3); -1 - q^{(2n-1)/3} when n == 2 (mod 3).
inline LaurentPoly c3_rhs(std::int64_t n) {
  if (n % 3 != 2) return LaurentPoly::monomial(1, n / 3);
  return LaurentPoly::constant(-1) + LaurentPoly::monomial(-1, integral_exponent(2 * n - 1, 3, "c3"));
}

/// Five-case closed form of F_n^q(q) + F_{n+2}^q(1) mod Phi_n(q), r = round(n/5).
inline LaurentPoly c5_table_rhs(std::int64_t n) {
  const std::int64_t r = floor_div(2 * n + 5, 10);
  const int s = (r % 2 == 0) ? 1 : -1;
  auto term = [&](std::int64_t shift) {
    return LaurentPoly::monomial(s, integral_exponent(r * (n + shift), 2, "c5 table"));
  };
  const std::int64_t c = n % 5;
  if (c == 0 || c == 2 || c == 3) return term(-1) + term(1);
  return term(-2) + term(0) + term(2);
}

/// F_n^q(q) + F_{n+2}^q(1).
inline IntPoly c5_fib_sum(std::int64_t n) {
  return q_fibonacci_sequence(n, 1).back() + q_fibonacci_sequence(n + 2, 0).back();
}

inline CongruenceReport check_c3(std::int64_t n, const IntPoly& lhs) {
  if (n < 1) throw InvalidArgument("check_c3: n must be positive");
  return compare_mod_cyclotomic("c3", n, {}, lhs, c3_rhs(n));
}

inline CongruenceReport check_c3(std::int64_t n) { return check_c3(n, catalan_partial_sums(n).back().plain); }

/// Alternating sum == F_n^q(q) + F_{n+2}^q(1) - 2.
inline CongruenceReport check_c5(std::int64_t n, const LaurentPoly& lhs, const IntPoly& fib_sum) {
  if (n < 1) throw InvalidArgument("check_c5: n must be positive");
  return compare_mod_cyclotomic("c5", n, {}, lhs, LaurentPoly(fib_sum) - LaurentPoly::constant(2));
}

inline CongruenceReport check_c5(std::int64_t n) {
  return check_c5(n, catalan_partial_sums(n).back().alternating, c5_fib_sum(n));
}

inline CongruenceReport check_c5_table(std::int64_t n, const IntPoly& fib_sum) {
  if (n < 1) throw InvalidArgument("check_c5_table: n must be positive");
  return compare_mod_cyclotomic("c5-table", n, {}, fib_sum, c5_table_rhs(n));
}

inline CongruenceReport check_c5_table(std::int64_t n) { return check_c5_table(n, c5_fib_sum(n)); }

/// 3 | n:  2 sum q^k C_k^q + 1 == gauss_poly(n, 3).
inline CongruenceReport check_catalan_root3(std::int64_t n, const IntPoly& plain) {
  if (n % 3 != 0 || n < 3) throw InvalidArgument("check_catalan_root3: need 3 | n");
  IntPoly doubled = plain * Integer(2) + IntPoly{1};
  return compare_mod_cyclotomic("catalan-root-3", n, {}, doubled, gauss_poly(n, 3));
}

/// 5 | n:  2 sum (-1)^k q^{-binom(k,2)} C_k^q + 3 == gauss_poly(n, 5).
inline CongruenceReport check_catalan_root5(std::int64_t n, const LaurentPoly& alternating) {
  if (n % 5 != 0 || n < 5) throw InvalidArgument("check_catalan_root5: need 5 | n");
  LaurentPoly doubled = alternating * Integer(2) + LaurentPoly::constant(3);
  return compare_mod_cyclotomic("catalan-root-5", n, {}, doubled, gauss_poly(n, 5));
}

/// Value (i sqrt 3 (m/3) - 1)/2 at every primitive root.
inline CongruenceReport check_catalan_root3_numeric(std::int64_t n, double tolerance, const IntPoly& plain) {
  if (n % 3 != 0 || n < 3) throw InvalidArgument("check_catalan_root3_numeric: need 3 | n");
  auto expected = [](std::int64_t m) -> std::complex<double> { return {-0.5, legendre3(m) * std::sqrt(3.0) / 2}; };
  return compare_at_roots("catalan-root-3-numeric", n, {}, plain, expected, tolerance);
}

/// Value (sqrt 5 (m/5) - 3)/2 at every primitive root.
inline CongruenceReport check_catalan_root5_numeric(std::int64_t n, double tolerance, const LaurentPoly& alternating) {
  if (n % 5 != 0 || n < 5) throw InvalidArgument("check_catalan_root5_numeric: need 5 | n");
  auto expected = [](std::int64_t m) -> std::complex<double> { return {(legendre5(m) * std::sqrt(5.0) - 3) / 2, 0.0}; };
  return compare_at_roots("catalan-root-5-numeric", n, {}, alternating, expected, tolerance);
}

}  // namespace qcert
