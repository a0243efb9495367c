#pragma once

#include <cstdint>

#include "qcert/polyring/rational_fn.hpp"

namespace qcert {

/// [m]_q = (1 - q^m) / (1 - q). A polynomial for m >= 1, -q^m [-m]_q for m <= -1.
inline RationalFn q_int(std::int64_t m) {
  return RationalFn(LaurentPoly::one_minus_q_pow(m), LaurentPoly::one_minus_q_pow(1));
}

/// (q;q)_n = (1 - q)(1 - q^2)...(1 - q^n).
inline IntPoly q_pochhammer(std::int64_t n) {
  if (n < 0) throw InvalidArgument("q_pochhammer: n must be non-negative");
  IntPoly r{1};
  for (std::int64_t j = 1; j <= n; ++j) r.mul_one_minus_q_pow(static_cast<std::size_t>(j));
  return r;
}

}  // namespace qcert
