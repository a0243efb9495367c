#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcert/congruences/report.hpp"
#include "qcert/qobjects/sums.hpp"
#include "qcert/wz/certificate.hpp"

// Per-instance checks of the recurrence, its telescoped forms, the shift
// lemma and the final identity. Everything is exact.

namespace qcert {

namespace detail {

inline std::vector<Param> spec_params(const CertificateSpec& spec) { return {{"a", spec.a()}, {"b", spec.b()}}; }

// Holds iff diff is zero; lhs renders the reduced residual.
inline CongruenceReport residual_report(std::string claim, std::int64_t n, std::vector<Param> params,
                                        const ProductFraction& diff, CertificateForm form) {
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.n = n;
  rep.params = std::move(params);
  rep.holds = diff.is_zero();
  rep.lhs = rep.holds ? "0" : to_string(diff.simplified());
  rep.rhs = "0";
  if (form == CertificateForm::Amended) rep.note = "amended certificate";
  return rep;
}

inline CongruenceReport degenerate_report(std::string claim, std::int64_t n, std::vector<Param> params,
                                          const DegenerateDenominator& e) {
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.n = n;
  rep.params = std::move(params);
  rep.lhs = "degenerate";
  rep.rhs = "0";
  rep.note = e.what();
  return rep;
}

// sum_j a_j(n) s(n+j, k).
inline LaurentPoly recurrence_lhs(std::int64_t n, std::int64_t k, const CertificateSpec& spec,
                                  const std::array<LaurentPoly, 5>& coeffs) {
  LaurentPoly acc;
  for (std::int64_t j = 0; j < 5; ++j) {
    const IntPoly s = s_term({n + j, k, spec});
    if (!s.is_zero()) acc += coeffs[static_cast<std::size_t>(j)] * LaurentPoly(s);
  }
  return acc;
}

}  // namespace detail

/// Half width ceil((n+4)/3) of the k window of the recurrence sweep.
inline std::int64_t wz_k_window(std::int64_t n) { return (n + 4 + 2) / 3; }

/// sum_j a_j(n) s(n+j,k) == g(n,k+1) - g(n,k).
inline CongruenceReport check_wz_recurrence(std::int64_t n, std::int64_t k, const CertificateSpec& spec,
                                            CertificateForm form = CertificateForm::Printed) {
  std::vector<Param> params = detail::spec_params(spec);
  params.push_back({"k", k});
  try {
    const LaurentPoly lhs = detail::recurrence_lhs(n, k, spec, recurrence_coeffs(n, spec));
    const ProductFraction diff =
        ProductFraction(lhs) - (g_fraction({n, k + 1, spec}, form) - g_fraction({n, k, spec}, form));
    return detail::residual_report("wz-recurrence", n, std::move(params), diff, form);
  } catch (const DegenerateDenominator& e) {
    return detail::degenerate_report("wz-recurrence", n, std::move(params), e);
  }
}

/// sum_{k >= k0} sum_j a_j(n) s(n+j,k) == -g(n,k0), the k sum running past the support.
inline CongruenceReport check_wz_tail_sum(std::int64_t n, std::int64_t k0, const CertificateSpec& spec,
                                          CertificateForm form = CertificateForm::Printed) {
  std::vector<Param> params = detail::spec_params(spec);
  params.push_back({"k0", k0});
  try {
    const auto coeffs = recurrence_coeffs(n, spec);
    LaurentPoly lhs;
    for (std::int64_t k = k0; k <= wz_k_window(n) + 1; ++k) lhs += detail::recurrence_lhs(n, k, spec, coeffs);
    const ProductFraction diff = ProductFraction(lhs) + g_fraction({n, k0, spec}, form);
    return detail::residual_report("wz-tail-sum", n, std::move(params), diff, form);
  } catch (const DegenerateDenominator& e) {
    return detail::degenerate_report("wz-tail-sum", n, std::move(params), e);
  }
}

/// a_j(n,3,1) == a_j(n,-3,-1) for every j.
inline CongruenceReport check_aj_invariance(std::int64_t n) {
  const auto x = recurrence_coeffs(n, CertificateSpec::plus());
  const auto y = recurrence_coeffs(n, CertificateSpec::minus());
  for (std::size_t j = 0; j < 5; ++j) {
    if (!(x[j] == y[j])) {
      CongruenceReport rep = compare_exact("aj-invariance", n, {}, x[j], y[j]);
      rep.note = "a_" + std::to_string(j) + " differs";
      return rep;
    }
  }
  return compare_exact("aj-invariance", n, {}, {}, {});
}

/// c_0(n,3,1) = sum_j a_j(n,3,1) == 0.
inline CongruenceReport check_c0_zero(std::int64_t n) {
  LaurentPoly c0;
  for (const auto& a : recurrence_coeffs(n, CertificateSpec::plus())) c0 += a;
  return compare_exact("c0-zero", n, {}, c0, {});
}

/**
 * S(n,d) - q^{4d+6} S(n,d+3) == q^d [2d+3]_q/[2n+1]_q [2n+1 choose n+d+2]_q
 *                               - [d=-1] q^{-1} + [d=-2] q^{-3},
 * compared after multiplying through by 1 - q^{2n+1}.
 */
inline CongruenceReport check_shift_lemma(std::int64_t n, std::int64_t d, const IntPoly& s_d, const IntPoly& s_d3) {
  if (n < 1 || n < std::abs(d)) throw InvalidArgument("check_shift_lemma: need n >= max(1, |d|)");
  LaurentPoly left = LaurentPoly(s_d) - LaurentPoly(s_d3).shifted(4 * d + 6);
  if (d == -1) left += LaurentPoly::monomial(1, -1);
  if (d == -2) left -= LaurentPoly::monomial(1, -3);
  left.mul_one_minus_q_pow(2 * n + 1);
  const LaurentPoly right =
      (LaurentPoly::one_minus_q_pow(2 * d + 3) * LaurentPoly(q_binomial(2 * n + 1, n + d + 2))).shifted(d);
  return compare_exact("shift-lemma", n, {{"d", d}}, left, right);
}

inline CongruenceReport check_shift_lemma(std::int64_t n, std::int64_t d) {
  if (n < 1 || n < std::abs(d)) throw InvalidArgument("check_shift_lemma: need n >= max(1, |d|)");
  return check_shift_lemma(n, d, s_sum(n, d), s_sum(n, d + 3));
}

/// -g(n,0,3,1) + g(n,1,-3,-1).
inline ProductFraction telescoped_rhs(std::int64_t n, CertificateForm form) {
  return g_fraction({n, 1, CertificateSpec::minus()}, form) - g_fraction({n, 0, CertificateSpec::plus()}, form);
}

/// sum_j a_j(n,3,1) T(n+j,0) == -g(n,0,3,1) + g(n,1,-3,-1).
inline CongruenceReport check_telescoped(std::int64_t n, CertificateForm form = CertificateForm::Printed) {
  if (n < 1) throw InvalidArgument("check_telescoped: n must be positive");
  try {
    const auto coeffs = recurrence_coeffs(n, CertificateSpec::plus());
    LaurentPoly lhs;
    for (std::int64_t j = 0; j < 5; ++j) lhs += coeffs[static_cast<std::size_t>(j)] * t_sum(n + j, 0);
    return detail::residual_report("telescoped", n, {}, ProductFraction(lhs) - telescoped_rhs(n, form), form);
  } catch (const DegenerateDenominator& e) {
    return detail::degenerate_report("telescoped", n, {}, e);
  }
}

/// S(n,0) == T(n,0), checked directly.
inline CongruenceReport check_initial_case(std::int64_t n) {
  return compare_exact("initial-cases", n, {}, LaurentPoly(s_sum(n, 0)), t_sum(n, 0));
}

/**
 * sum_{i=0}^{3} c_{i+1}(n) q^{n+i} [2(n+i) choose n+i]_q == -g(n,0,3,1) + g(n,1,-3,-1)
 * with c_i = sum_{j>=i} a_j(n,3,1). Fails as well if c_0 is not zero.
 */
inline CongruenceReport check_final_identity(std::int64_t n, CertificateForm form = CertificateForm::Printed) {
  if (n < 2) throw InvalidArgument("check_final_identity: need n >= 2");
  const auto a = recurrence_coeffs(n, CertificateSpec::plus());
  std::array<LaurentPoly, 6> c;  // c[5] = 0
  for (std::int64_t i = 4; i >= 0; --i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i) + 1] + a[static_cast<std::size_t>(i)];
  LaurentPoly lhs;
  for (std::int64_t i = 0; i < 4; ++i)
    lhs += c[static_cast<std::size_t>(i) + 1] * LaurentPoly(q_binomial(2 * (n + i), n + i)).shifted(n + i);
  try {
    CongruenceReport rep =
        detail::residual_report("final-identity", n, {}, ProductFraction(lhs) - telescoped_rhs(n, form), form);
    if (!c[0].is_zero()) {
      rep.holds = false;
      rep.note = "c_0 = " + to_string(c[0]);
    }
    return rep;
  } catch (const DegenerateDenominator& e) {
    return detail::degenerate_report("final-identity", n, {}, e);
  }
}

}  // namespace qcert
