#pragma once

#include <cstdint>
#include <vector>

#include "qcert/congruences/binomial_lemmas.hpp"
#include "qcert/congruences/report.hpp"
#include "qcert/qcore/number_theory.hpp"

// q = 1, n = p^a specializations: congruences of integer sums modulo p.

namespace qcert {

/// Row of the p-congruence table: the integer sum, its residue, the predicted value.
struct PrimePowerRow {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t d = 0;
  Integer sum;
  Integer residue;    // sum mod modulus
  Integer predicted;  // prediction mod modulus
  Integer modulus;    // p, or 4 for the doubled halved forms at p = 2
  bool holds = false;
};

namespace detail {

inline std::int64_t checked_prime_power(std::int64_t p, std::int64_t a) {
  if (!is_prime(p) || a < 1) throw InvalidArgument("need a prime p and a >= 1");
  Integer pa;
  mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(a));
  if (!pa.fits_slong_p() || pa > 1000000) throw InvalidArgument("p^a too large");
  return pa.get_si();
}

inline Integer catalan_number(std::int64_t k) { return binomial(2 * k, k) / (k + 1); }

// Compares sum == num / 2: modulo p via the inverse of 2 for odd p, and as
// 2 sum == num modulo 4 for p = 2, where 2 has no inverse.
inline CongruenceReport compare_halved(std::string claim, std::int64_t n, std::vector<Param> params,
                                       const Integer& sum, std::int64_t num, std::int64_t p) {
  if (p == 2) {
    CongruenceReport r = compare_mod_integer(std::move(claim), n, std::move(params), Integer(2 * sum), num, 4);
    r.note = "halved form checked as doubled congruence mod 2p = 4";
    return r;
  }
  return compare_mod_integer(std::move(claim), n, std::move(params), sum, Integer(num * ((p + 1) / 2)), p);
}

inline CongruenceReport with_note(CongruenceReport r, std::string note) {
  r.note = std::move(note);
  return r;
}

}  // namespace detail

/**
 * The four prime-power congruences with sums up to p^a - 1:
 *   p-catalan      sum C_k            == (3 (p^a/3) - 1)/2
 *   p-catalan-alt  sum (-1)^k C_k     == (5 (p^a/5) - 3)/2
 *   p-gk           1 + 2 sum_{k>=1} (-1)^k binom(2k-1,k) == (p^a/5)
 *   p-dual         1 + 2 sum_{k>=1} binom(2k-1,k)        == (p^a/3)
 * all mod p. For p = 2 the halved forms are compared doubled modulo 4.
 */
inline std::vector<CongruenceReport> check_p_catalan(std::int64_t p, std::int64_t a) {
  const std::int64_t n = detail::checked_prime_power(p, a);
  Integer cat = 0, alt = 0, gk = 1, dual = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    const Integer c = detail::catalan_number(k);
    cat += c;
    if (k % 2) {
      alt -= c;
    } else {
      alt += c;
    }
    if (k >= 1) {
      const Integer b2 = 2 * detail::binomial(2 * k - 1, k);
      if (k % 2) {
        gk -= b2;
      } else {
        gk += b2;
      }
      dual += b2;
    }
  }
  const std::vector<Param> params{{"p", p}, {"a", a}};
  std::vector<CongruenceReport> out;
  out.push_back(detail::compare_halved("p-catalan", n, params, cat, 3 * legendre3(n) - 1, p));
  out.push_back(detail::compare_halved("p-catalan-alt", n, params, alt, 5 * legendre5(n) - 3, p));
  out.push_back(compare_mod_integer("p-gk", n, params, gk, legendre5(n), Integer(p)));
  out.push_back(compare_mod_integer("p-dual", n, params, dual, legendre3(n), Integer(p)));
  return out;
}

/// Rows for the p-binomial table: sum_{k<p^a} binom(2k, k+d) against (p^a-|d| / 3) mod p.
inline PrimePowerRow p_binomial_row(std::int64_t p, std::int64_t a, std::int64_t d) {
  const std::int64_t n = detail::checked_prime_power(p, a);
  PrimePowerRow row{p, a, d, 0, 0, 0, p, false};
  for (std::int64_t k = 0; k < n; ++k) row.sum += detail::binomial(2 * k, k + d);
  mpz_fdiv_r(row.residue.get_mpz_t(), row.sum.get_mpz_t(), row.modulus.get_mpz_t());
  const Integer pred = legendre3(n - std::abs(d));
  mpz_fdiv_r(row.predicted.get_mpz_t(), pred.get_mpz_t(), row.modulus.get_mpz_t());
  row.holds = row.residue == row.predicted;
  return row;
}

/// Rows for the p-catalan table: sum_{k<p^a} C_k against (3 (p^a/3) - 1)/2
/// mod p, or both doubled mod 4 when p = 2 (d is reported as 0).
inline PrimePowerRow p_catalan_row(std::int64_t p, std::int64_t a) {
  const std::int64_t n = detail::checked_prime_power(p, a);
  PrimePowerRow row{p, a, 0, 0, 0, 0, p == 2 ? 4 : p, false};
  for (std::int64_t k = 0; k < n; ++k) row.sum += detail::catalan_number(k);
  const std::int64_t num = 3 * legendre3(n) - 1;
  const Integer lhs = p == 2 ? Integer(2 * row.sum) : row.sum;
  const Integer pred = p == 2 ? Integer(num) : Integer(num * ((p + 1) / 2));
  mpz_fdiv_r(row.residue.get_mpz_t(), lhs.get_mpz_t(), row.modulus.get_mpz_t());
  mpz_fdiv_r(row.predicted.get_mpz_t(), pred.get_mpz_t(), row.modulus.get_mpz_t());
  row.holds = row.residue == row.predicted;
  return row;
}

}  // namespace qcert
