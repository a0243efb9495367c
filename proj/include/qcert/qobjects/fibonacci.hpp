#pragma once

#include <cstdint>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/polyring/int_poly.hpp"
#include "qcert/polyring/laurent_poly.hpp"
#include "qcert/qcore/number_theory.hpp"
#include "qcert/qcore/q_binomial.hpp"

namespace qcert {

/// F_n^q(t) with t specialized to q^a.
struct QFibSpec {
  std::int64_t n = 0;
  std::int64_t a = 0;
};

/// F_0, ..., F_{n_max} from F_m = F_{m-1} + q^{m-2+a} F_{m-2}, F_0 = 0, F_1 = 1.
inline std::vector<IntPoly> q_fibonacci_sequence(std::int64_t n_max, std::int64_t a) {
  if (n_max < 0 || a < 0) throw InvalidArgument("q_fibonacci: n and a must be nonnegative");
  std::vector<IntPoly> f(static_cast<std::size_t>(n_max) + 1);
  if (n_max >= 1) f[1] = IntPoly{1};
  for (std::int64_t m = 2; m <= n_max; ++m) {
    IntPoly v = f[static_cast<std::size_t>(m - 1)];
    v.add_scaled_shifted(f[static_cast<std::size_t>(m - 2)], 1, static_cast<std::size_t>(m - 2 + a));
    f[static_cast<std::size_t>(m)] = std::move(v);
  }
  return f;
}

inline IntPoly q_fibonacci_rec(const QFibSpec& spec) { return q_fibonacci_sequence(spec.n, spec.a).back(); }

/// sum_k q^{k^2 + a k} [n-1-k choose k]_q, walking the anti-diagonal.
inline IntPoly q_fibonacci_explicit(const QFibSpec& spec) {
  if (spec.n < 0 || spec.a < 0) throw InvalidArgument("q_fibonacci: n and a must be nonnegative");
  IntPoly acc;
  if (spec.n == 0) return acc;
  QBinomialCursor c(spec.n - 1, 0);
  for (std::int64_t k = 0; 2 * k <= spec.n - 1; ++k) {
    c.move_to(spec.n - 1 - k, k);
    acc.add_scaled_shifted(c.value(), 1, static_cast<std::size_t>(k * k + spec.a * k));
  }
  return acc;
}

/**
 * Alternating side of the finite Rogers-Ramanujan form:
 *   sum_j (-1)^j q^{j(5j+1-4a)/2} [n choose floor((n+2a-5j)/2)]_q.
 * Only j with the lower index in [0, n] contribute; that range lies inside
 * |j| <= n + 1.
 */
inline IntPoly rr_rhs(std::int64_t n, std::int64_t a) {
  if (n < 0) throw InvalidArgument("rr_rhs: n must be nonnegative");
  if (a != 0 && a != 1) throw InvalidArgument("rr_rhs: a must be 0 or 1");
  LaurentPoly acc;
  QBinomialCursor c(n, n);
  // k decreases as j increases, so the cursor only ever walks down the row.
  for (std::int64_t j = -n - 1; j <= n + 1; ++j) {
    const std::int64_t k = floor_div(n + 2 * a - 5 * j, 2);
    if (k < 0 || k > n) continue;
    c.move_to(n, k);
    const std::int64_t e = integral_exponent(j * (5 * j + 1 - 4 * a), 2, "rr_rhs");
    acc.add_term(c.value(), (j % 2 == 0) ? 1 : -1, e);
  }
  return acc.to_int_poly();
}

/// The other side of the same identity: sum_k q^{k^2 + a k} [n-a-k choose k]_q.
inline IntPoly rr_lhs(std::int64_t n, std::int64_t a) {
  if (n < 0) throw InvalidArgument("rr_lhs: n must be nonnegative");
  if (a != 0 && a != 1) throw InvalidArgument("rr_lhs: a must be 0 or 1");
  return q_fibonacci_explicit({n + 1 - a, a});
}

}  // namespace qcert
