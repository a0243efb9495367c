#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "qcert/congruences/binomial_lemmas.hpp"
#include "qcert/congruences/report.hpp"
#include "qcert/qobjects/sums.hpp"

namespace qcert {

/// Right side of the S(n,d) congruence: (n-|d| / 3) q^{3r(r+1)/2 + |d|(2r+1)}
/// with r = floor(2(n-|d|)/3).
inline LaurentPoly qc1_rhs(std::int64_t n, std::int64_t d) {
  const std::int64_t ad = std::abs(d);
  const std::int64_t r = (2 * (n - ad)) / 3;
  const std::int64_t e = integral_exponent(3 * r * (r + 1), 2, "qc1") + ad * (2 * r + 1);
  return LaurentPoly::monomial(legendre3(n - ad), e);
}

/// S(n,d) == qc1_rhs(n,d) mod Phi_n(q), with S supplied by the caller.
inline CongruenceReport check_qc1(std::int64_t n, std::int64_t d, const IntPoly& s) {
  if (n < 1 || std::abs(d) > n) throw InvalidArgument("check_qc1: need n >= 1 and |d| <= n");
  return compare_mod_cyclotomic("qc1", n, {{"d", d}}, s, qc1_rhs(n, d));
}

inline CongruenceReport check_qc1(std::int64_t n, std::int64_t d) { return check_qc1(n, d, s_sum(n, d)); }

/// sum_{k=0}^{p^a-1} binom(2k, k+d) == (p^a - |d| / 3) (mod p).
inline CongruenceReport check_p_binomial(std::int64_t p, std::int64_t a, std::int64_t d) {
  if (!is_prime(p) || a < 1) throw InvalidArgument("check_p_binomial: need a prime p and a >= 1");
  Integer pa;
  mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(a));
  if (!pa.fits_slong_p()) throw InvalidArgument("check_p_binomial: p^a too large");
  const std::int64_t n = pa.get_si();
  if (std::abs(d) > n) throw InvalidArgument("check_p_binomial: need |d| <= p^a");
  Integer sum = 0;
  for (std::int64_t k = 0; k < n; ++k) sum += detail::binomial(2 * k, k + d);
  return compare_mod_integer("p-binomial", n, {{"p", p}, {"a", a}, {"d", d}}, sum, legendre3(n - std::abs(d)), p);
}

}  // namespace qcert
