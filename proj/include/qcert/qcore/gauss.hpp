#pragma once

#include <cstdint>

#include "qcert/polyring/int_poly.hpp"
#include "qcert/qcore/number_theory.hpp"

namespace qcert {

/**
 * sum_{t=1}^{p-1} (t/p) q^{t n / p}. At q = e^{2 pi i m/n} this is the
 * quadratic Gauss sum (m/p) sqrt(p*) with p* = (-1)^{(p-1)/2} p, i.e.
 * (m/3) i sqrt(3) for p = 3 and (m/5) sqrt(5) for p = 5.
 */
inline IntPoly gauss_poly(std::int64_t n, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw NotOddPrime("gauss_poly: p must be an odd prime");
  if (n < 1 || n % p != 0) throw PNotDividingN("gauss_poly: p does not divide n");
  const std::int64_t step = n / p;
  std::vector<Integer> coeffs(static_cast<std::size_t>(step * (p - 1) + 1));
  for (std::int64_t t = 1; t < p; ++t) coeffs[static_cast<std::size_t>(t * step)] = legendre(t, p).value;
  return IntPoly(std::move(coeffs));
}

}  // namespace qcert
