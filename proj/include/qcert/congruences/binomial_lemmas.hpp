#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcert/congruences/report.hpp"
#include "qcert/qcore/number_theory.hpp"
#include "qcert/qcore/q_binomial.hpp"

// Residues of q-binomial coefficients modulo Phi_n(q).

namespace qcert {

namespace detail {

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline LaurentPoly signed_monomial_times(int sign, std::int64_t e, const IntPoly& p) {
  LaurentPoly r;
  r.add_term(p, sign, e);
  return r;
}

inline void require_n(std::int64_t n, const char* what) {
  if (n < 2) throw InvalidArgument(std::string(what) + ": n must be at least 2");
}

inline CongruenceReport bc1_report(std::int64_t n, std::int64_t a, std::int64_t k, const IntPoly& qbin) {
  const Integer rhs = (k % n == 0) ? binomial(a, k / n) : Integer(0);
  return compare_mod_cyclotomic("bc1", n, {{"a", a}, {"k", k}}, qbin, LaurentPoly::constant(rhs));
}

inline CongruenceReport bc3_report(std::int64_t n, std::int64_t k, const IntPoly& lhs, const IntPoly& inner) {
  const std::int64_t e = integral_exponent(3 * k * k - k, 2, "bc3");
  return compare_mod_cyclotomic("bc3", n, {{"k", k}}, lhs, signed_monomial_times(k % 2 ? -1 : 1, e, inner));
}

inline CongruenceReport bc4_report(std::int64_t n, std::int64_t k, const IntPoly& lhs, const IntPoly& inner) {
  const std::int64_t e = integral_exponent(3 * k * k + k, 2, "bc4");
  return compare_mod_cyclotomic("bc4", n, {{"k", k}}, lhs, signed_monomial_times(k % 2 ? -1 : 1, e, inner));
}

inline CongruenceReport bc5_report(std::int64_t n, std::int64_t k, const IntPoly& lhs, const IntPoly& inner) {
  LaurentPoly rhs;
  if (k == n - 1) {
    rhs = LaurentPoly::constant(1);
  } else {
    const std::int64_t e = integral_exponent(3 * k * k + 3 * k, 2, "bc5");
    rhs = signed_monomial_times(k % 2 ? 1 : -1, e, inner);
  }
  return compare_mod_cyclotomic("bc5", n, {{"k", k}}, lhs, rhs);
}

}  // namespace detail

/// [an choose k]_q == binom(a, k/n) if n | k, else 0.
inline CongruenceReport check_bc1(std::int64_t n, std::int64_t a, std::int64_t k) {
  detail::require_n(n, "check_bc1");
  if (a < 1 || k < 0 || k > a * n) throw InvalidArgument("check_bc1: need a >= 1 and 0 <= k <= a n");
  return detail::bc1_report(n, a, k, q_binomial(a * n, k));
}

/// check_bc1 for every k in 0..an, walking one row.
inline std::vector<CongruenceReport> check_bc1_row(std::int64_t n, std::int64_t a) {
  detail::require_n(n, "check_bc1");
  if (a < 1) throw InvalidArgument("check_bc1: a must be positive");
  std::vector<CongruenceReport> out;
  QBinomialCursor c(a * n, 0);
  for (std::int64_t k = 0; k <= a * n; ++k) {
    c.move_to(a * n, k);
    out.push_back(detail::bc1_report(n, a, k, c.value()));
  }
  return out;
}

/// [n+1 choose k]_q == 1 for k in {0, 1, n, n+1}, else 0.
inline CongruenceReport check_bc2(std::int64_t n, std::int64_t k) {
  detail::require_n(n, "check_bc2");
  if (k < 0 || k > n + 1) throw InvalidArgument("check_bc2: need 0 <= k <= n+1");
  const bool one = (k == 0 || k == 1 || k == n || k == n + 1);
  return compare_mod_cyclotomic("bc2", n, {{"k", k}}, q_binomial(n + 1, k), LaurentPoly::constant(one ? 1 : 0));
}

inline std::vector<CongruenceReport> check_bc2_row(std::int64_t n) {
  detail::require_n(n, "check_bc2");
  std::vector<CongruenceReport> out;
  QBinomialCursor c(n + 1, 0);
  for (std::int64_t k = 0; k <= n + 1; ++k) {
    c.move_to(n + 1, k);
    const bool one = (k == 0 || k == 1 || k == n || k == n + 1);
    out.push_back(compare_mod_cyclotomic("bc2", n, {{"k", k}}, c.value(), LaurentPoly::constant(one ? 1 : 0)));
  }
  return out;
}

/// [2k-1 choose k]_q == (-1)^k q^{(3k^2-k)/2} [n-k choose k]_q, 1 <= k <= n-1.
inline CongruenceReport check_bc3(std::int64_t n, std::int64_t k) {
  detail::require_n(n, "check_bc3");
  if (k < 1 || k > n - 1) throw InvalidArgument("check_bc3: need 1 <= k <= n-1");
  return detail::bc3_report(n, k, q_binomial(2 * k - 1, k), q_binomial(n - k, k));
}

/// [2k choose k]_q == (-1)^k q^{(3k^2+k)/2} [n-1-k choose k]_q, 0 <= k <= n-1.
inline CongruenceReport check_bc4(std::int64_t n, std::int64_t k) {
  detail::require_n(n, "check_bc4");
  if (k < 0 || k > n - 1) throw InvalidArgument("check_bc4: need 0 <= k <= n-1");
  return detail::bc4_report(n, k, q_binomial(2 * k, k), q_binomial(n - 1 - k, k));
}

/// [2k choose k+1]_q == (-1)^{k+1} q^{(3k^2+3k)/2} [n-k choose k+1]_q for
/// k <= n-2, and == 1 at k = n-1.
inline CongruenceReport check_bc5(std::int64_t n, std::int64_t k) {
  detail::require_n(n, "check_bc5");
  if (k < 0 || k > n - 1) throw InvalidArgument("check_bc5: need 0 <= k <= n-1");
  return detail::bc5_report(n, k, q_binomial(2 * k, k + 1), q_binomial(n - k, k + 1));
}

/// bc3, bc4 and bc5 over their full k ranges for one n.
inline std::vector<CongruenceReport> check_bc345_row(std::int64_t n) {
  detail::require_n(n, "check_bc345_row");
  std::vector<CongruenceReport> out;
  QBinomialCursor odd(1, 1), inner3(n - 1, 1);
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    odd.move_to(2 * k - 1, k);
    inner3.move_to(n - k, k);
    out.push_back(detail::bc3_report(n, k, odd.value(), inner3.value()));
  }
  QBinomialCursor central(0, 0), upper(0, 1), inner4(n - 1, 0), inner5(n, 1);
  for (std::int64_t k = 0; k <= n - 1; ++k) {
    central.move_to(2 * k, k);
    upper.move_to(2 * k, k + 1);
    inner4.move_to(n - 1 - k, k);
    inner5.move_to(n - k, k + 1);
    out.push_back(detail::bc4_report(n, k, central.value(), inner4.value()));
    out.push_back(detail::bc5_report(n, k, upper.value(), inner5.value()));
  }
  return out;
}

/**
 * Divisibility criterion behind bc1: Phi_n(q) divides [m choose k]_q iff
 * (k mod n) > (m mod n). One report per (n, m) covering k = 0..m; lhs lists
 * the k with Phi_n | [m, k], rhs the k the criterion predicts.
 */
inline CongruenceReport check_bc_fractional(std::int64_t n, std::int64_t m) {
  detail::require_n(n, "check_bc_fractional");
  if (m < 0) throw InvalidArgument("check_bc_fractional: m must be nonnegative");
  std::string divisible, predicted;
  auto append = [](std::string& s, std::int64_t k) { s += (s.empty() ? "" : ",") + std::to_string(k); };
  QBinomialCursor c(m, 0);
  for (std::int64_t k = 0; k <= m; ++k) {
    c.move_to(m, k);
    if (reduce_mod_cyclotomic(c.value(), n).rep().is_zero()) append(divisible, k);
    if (k % n > m % n) append(predicted, k);
  }
  CongruenceReport rep;
  rep.claim = "bc-fractional";
  rep.n = n;
  rep.params = {{"m", m}};
  rep.holds = (divisible == predicted);
  rep.lhs = "{" + divisible + "}";
  rep.rhs = "{" + predicted + "}";
  return rep;
}

}  // namespace qcert
