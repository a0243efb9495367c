#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qcert/polyring/laurent_poly.hpp"

namespace qcert {

namespace detail {

using WideFloat = boost::multiprecision::cpp_bin_float_50;

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline WideFloat to_wide(const Integer& z) {
  // Exact for any size the library produces: the decimal string round trip
  // is correctly rounded at 50 digits.
  return WideFloat(z.get_str());
}

}  // namespace detail

/**
 * Numeric value of p at the root of unity e^{2 pi i m / n}.
 *
 * Monomials are first folded exactly with q^n = 1, which holds at every n-th
 * root of unity; the n folded integer coefficients are then summed in 50
 * digit binary floating point and the result rounded to double.
 * Trust radius: absolute error below 1e-9 while folded coefficients stay
 * under 10^35 (the n <= 30 sums checked here stay under 10^20).
 *
 * Intended only as an independent numeric oracle.
 */
inline std::complex<double> eval_root_of_unity(const LaurentPoly& p, std::int64_t m, std::int64_t n) {
  if (n < 1) throw InvalidArgument("eval_root_of_unity: n must be positive");
  if (std::gcd(m, n) != 1) throw InvalidArgument("eval_root_of_unity: gcd(m, n) must be 1");
  if (p.is_zero()) return {0.0, 0.0};
  std::vector<Integer> folded(static_cast<std::size_t>(n));
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const auto e = detail::floor_mod(p.min_exp() + static_cast<std::int64_t>(i), n);
    folded[static_cast<std::size_t>(e)] += c[i];
  }
  using detail::WideFloat;
  const WideFloat two_pi = 2 * boost::math::constants::pi<WideFloat>();
  WideFloat re = 0;
  WideFloat im = 0;
  for (std::int64_t r = 0; r < n; ++r) {
    const Integer& f = folded[static_cast<std::size_t>(r)];
    if (f == 0) continue;
    const WideFloat angle = two_pi * WideFloat(detail::floor_mod(m * r, n)) / WideFloat(n);
    const WideFloat w = detail::to_wide(f);
    re += w * cos(angle);
    im += w * sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace qcert
