#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcert/errors.hpp"

namespace qcert {

/// Legendre symbol value in {-1, 0, +1}; zero iff the prime divides the argument.
struct LegendreSymbol {
  int value = 0;

  friend bool operator==(LegendreSymbol, LegendreSymbol) = default;
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Deterministic trial division; the inputs here are at most a few thousand.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base = floor_mod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % mod);
    base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

/// Euler's criterion.
inline LegendreSymbol legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw NotOddPrime("legendre: modulus " + std::to_string(p) + " is not an odd prime");
  const std::int64_t r = pow_mod(a, (p - 1) / 2, p);
  if (r == 0) return {0};
  return {r == 1 ? 1 : -1};
}

inline int legendre3(std::int64_t a) { return legendre(a, 3).value; }
inline int legendre5(std::int64_t a) { return legendre(a, 5).value; }

struct PrimePower {
  std::int64_t p = 0;
  int a = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// (p, a) with n = p^a, or nothing. Requires n >= 2.
inline std::optional<PrimePower> prime_power(std::int64_t n) {
  if (n < 2) throw InvalidArgument("prime_power: n must be at least 2");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  int a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, a};
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// n choose 2 for any integer n.
constexpr std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

/// Exact quotient of an exponent that the identities assert to be integral.
inline std::int64_t integral_exponent(std::int64_t numerator, std::int64_t denominator, const char* where) {
  if (numerator % denominator != 0) {
    throw NonIntegralExponent(std::string(where) + ": exponent " + std::to_string(numerator) + "/" +
                              std::to_string(denominator) + " is not an integer");
  }
  return numerator / denominator;
}

}  // namespace qcert
