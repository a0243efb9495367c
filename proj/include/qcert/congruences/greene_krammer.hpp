#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "qcert/congruences/report.hpp"
#include "qcert/qcore/gauss.hpp"
#include "qcert/qcore/number_theory.hpp"
#include "qcert/qobjects/sums.hpp"

// The Greene-Krammer sum and its dual at primitive n-th roots of unity.
// Exactly: the sum is congruent mod Phi_n(q) to the Gauss polynomial when
// p | n and to the constant (n / p) otherwise (p = 5 and p = 3).

namespace qcert {

namespace detail {

inline LaurentPoly root_constant(std::int64_t n, std::int64_t p) {
  if (n % p == 0) return LaurentPoly(gauss_poly(n, p));
  return LaurentPoly::constant(legendre(n, p).value);
}

}  // namespace detail

inline CongruenceReport check_gk(std::int64_t n, const LaurentPoly& lhs) {
  if (n < 2) throw InvalidArgument("check_gk: n must be at least 2");
  return compare_mod_cyclotomic("gk", n, {}, lhs, detail::root_constant(n, 5));
}

inline CongruenceReport check_gk(std::int64_t n) { return check_gk(n, gk_lhs(n)); }

/// Value (m/5) sqrt 5 when 5 | n, else (n/5), at every primitive root.
inline CongruenceReport check_gk_numeric(std::int64_t n, double tolerance, const LaurentPoly& lhs) {
  if (n < 2) throw InvalidArgument("check_gk_numeric: n must be at least 2");
  auto expected = [n](std::int64_t m) -> std::complex<double> {
    if (n % 5 == 0) return {legendre5(m) * std::sqrt(5.0), 0.0};
    return {static_cast<double>(legendre5(n)), 0.0};
  };
  return compare_at_roots("gk-numeric", n, {}, lhs, expected, tolerance);
}

inline CongruenceReport check_gk_numeric(std::int64_t n, double tolerance) {
  return check_gk_numeric(n, tolerance, gk_lhs(n));
}

inline CongruenceReport check_dual(std::int64_t n, const IntPoly& lhs) {
  if (n < 2) throw InvalidArgument("check_dual: n must be at least 2");
  return compare_mod_cyclotomic("dual", n, {}, lhs, detail::root_constant(n, 3));
}

inline CongruenceReport check_dual(std::int64_t n) { return check_dual(n, dual_lhs(n)); }

/// Value (m/3) i sqrt 3 when 3 | n, else (n/3), at every primitive root.
inline CongruenceReport check_dual_numeric(std::int64_t n, double tolerance, const IntPoly& lhs) {
  if (n < 2) throw InvalidArgument("check_dual_numeric: n must be at least 2");
  auto expected = [n](std::int64_t m) -> std::complex<double> {
    if (n % 3 == 0) return {0.0, legendre3(m) * std::sqrt(3.0)};
    return {static_cast<double>(legendre3(n)), 0.0};
  };
  return compare_at_roots("dual-numeric", n, {}, lhs, expected, tolerance);
}

inline CongruenceReport check_dual_numeric(std::int64_t n, double tolerance) {
  return check_dual_numeric(n, tolerance, dual_lhs(n));
}

}  // namespace qcert
