#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/polyring/rational_fn.hpp"
#include "qcert/qcore/q_binomial.hpp"
#include "qcert/wz/product_fraction.hpp"

// The q-Zeilberger data for s(n,k,a,b) = q^{6k^2+ak} [2n choose n+3k+b]_q.

namespace qcert {

/// Term parameters (a, b); only (3, 1) and (-3, -1) are accepted.
class CertificateSpec {
 public:
  CertificateSpec(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    if (!((a == 3 && b == 1) || (a == -3 && b == -1)))
      throw InvalidArgument("certificate parameters must be (3,1) or (-3,-1)");
  }
  static CertificateSpec plus() { return {3, 1}; }
  static CertificateSpec minus() { return {-3, -1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

 private:
  std::int64_t a_;
  std::int64_t b_;
};

struct WZInstance {
  std::int64_t n = 0;
  std::int64_t k = 0;
  CertificateSpec spec = CertificateSpec::plus();
};

/**
 * Printed: the certificate denominator as displayed, and g = 0 outside the
 * support |3k+b| <= n.
 * Amended: one extra denominator factor (1 - q^{n-3k-b+2}), and g continued
 * across the support boundary by cancelling the vanishing factor of
 * 1/(q;q)_{-m} against the matching pole of r.
 */
enum class CertificateForm { Printed, Amended };

inline const char* to_string(CertificateForm f) { return f == CertificateForm::Printed ? "printed" : "amended"; }

inline bool in_support(const WZInstance& w) {
  const std::int64_t t = 3 * w.k + w.spec.b();
  return t <= w.n && -t <= w.n;
}

/// 6k^2 + ak, nonnegative for both accepted specs.
inline std::int64_t s_exponent(const WZInstance& w) { return 6 * w.k * w.k + w.spec.a() * w.k; }

inline IntPoly s_term(const WZInstance& w) {
  if (w.n < 0 || !in_support(w)) return {};
  return q_binomial(2 * w.n, w.n + 3 * w.k + w.spec.b()).shifted(static_cast<std::size_t>(s_exponent(w)));
}

/// a_0 .. a_4 at (n, a, b).
inline std::array<LaurentPoly, 5> recurrence_coeffs(std::int64_t n, const CertificateSpec& spec) {
  const std::int64_t a = spec.a(), b = spec.b();
  auto mono = [](std::int64_t c, std::int64_t e) { return LaurentPoly::monomial(c, e); };
  std::array<LaurentPoly, 5> out;
  out[0] = (LaurentPoly::one_minus_q_pow(2 * n + 1) * LaurentPoly::one_minus_q_pow(2 * n + 2)).shifted(6);
  out[1] = -(mono(1, 4 * n + 7 + a - 4 * b) + mono(1, 4 * n + 7 - a + 4 * b) - mono(1, 2 * n + 4) -
             mono(1, 2 * n + 3) + LaurentPoly(IntPoly{1, 1, 1, 1}))
                .shifted(3);
  out[2] = (mono(1, 4 * n + 10) + mono(1, 2 * n + 7) + mono(1, 2 * n + 6) + LaurentPoly(IntPoly{1, 1, 2, 1, 1}))
               .shifted(1);
  out[3] = -((mono(1, 2 * n + 6) + LaurentPoly(IntPoly{1, 0, 1})) * LaurentPoly(IntPoly{1, 1}));
  out[4] = LaurentPoly::constant(1);
  return out;
}

/// The sixteen signed monomials of h(n,k,a,b).
inline LaurentPoly cert_h(const WZInstance& w) {
  const std::int64_t n = w.n, k = w.k, a = w.spec.a(), b = w.spec.b();
  const std::array<std::pair<int, std::int64_t>, 16> terms{{
      {+1, 3 * n + 9 * k + 3 * b + a + 6},
      {-1, 3 * n + 3 * k + 5 * b + 9},
      {-1, 2 * n + 6 * k + 2 * b + a + 7},
      {+1, 2 * n + 6 * k + 6 * b + 7},
      {-1, 2 * n + 6 * k + 2 * b + a + 6},
      {+1, 2 * n + 6 * k + 6 * b + 6},
      {+1, n + 3 * k + b + a + 7},
      {+1, n + 3 * k + b + a + 6},
      {-1, 2 * n + 6 * k + 2 * b + a + 5},
      {+1, 2 * n + 6 * k + 5 + 6 * b},
      {-1, n + 9 * k + 7 * b + 4},
      {+1, n + 3 * k + b + a + 5},
      {-1, n + 9 * k + 7 * b + 3},
      {-1, n + 9 * k + 7 * b + 2},
      {+1, 12 * k + 8 * b},
      {-1, a + 6},
  }};
  LaurentPoly h;
  for (const auto& [c, e] : terms) h += LaurentPoly::monomial(c, e);
  return h;
}

/// Offsets c of the denominator factors (1 - q^{n-3k-b+c}).
inline std::vector<std::int64_t> cert_offsets(CertificateForm form) {
  if (form == CertificateForm::Printed) return {3, 4, 1};
  return {3, 4, 1, 2};
}

/// h (1-q^{2n+1})(1-q^{2n+2}) q^{4n-12k+10-a-4b}.
inline LaurentPoly cert_numerator(const WZInstance& w) {
  LaurentPoly num = cert_h(w).shifted(4 * w.n - 12 * w.k + 10 - w.spec.a() - 4 * w.spec.b());
  if (num.is_zero()) return num;
  num.mul_one_minus_q_pow(2 * w.n + 1);
  num.mul_one_minus_q_pow(2 * w.n + 2);
  return num;
}

/// Exponents e of the denominator factors (1 - q^e), in display order.
inline std::vector<std::int64_t> cert_den_exponents(const WZInstance& w, CertificateForm form) {
  const std::int64_t hi = w.n - 3 * w.k - w.spec.b();
  std::vector<std::int64_t> out;
  for (std::int64_t c : cert_offsets(form)) out.push_back(hi + c);
  out.push_back(w.n + 3 * w.k + w.spec.b() + 1);
  return out;
}

/// r as a product fraction. Throws DegenerateDenominator on a zero exponent.
inline ProductFraction cert_r_fraction(const WZInstance& w, CertificateForm form = CertificateForm::Printed) {
  ProductFraction r(cert_numerator(w));
  for (std::int64_t e : cert_den_exponents(w, form)) {
    if (e == 0)
      throw DegenerateDenominator("certificate factor 1 - q^0 at n=" + std::to_string(w.n) +
                                  ", k=" + std::to_string(w.k));
    r.div_factor(e);
  }
  return r;
}

inline RationalFn cert_r(const WZInstance& w, CertificateForm form = CertificateForm::Printed) {
  return cert_r_fraction(w, form).to_rational();
}

/**
 * g = r s. Inside the support this is the plain product. Outside it the
 * printed form is zero. The amended form keeps r s with the zero factor of
 * 1/(q;q)_{-m} removed whenever r has the matching pole; s is then
 *   q^{6k^2+ak} (q;q)_{2n} / (q;q)_L * prod_{j=1}^{m-1} (1 - q^{-j})
 * with L the nonnegative bottom index.
 */
inline ProductFraction g_fraction(const WZInstance& w, CertificateForm form = CertificateForm::Printed) {
  if (in_support(w)) {
    const IntPoly s = s_term(w);
    if (s.is_zero()) return {};
    ProductFraction g = cert_r_fraction(w, form);
    g.mul(LaurentPoly(s));
    return g;
  }
  if (form == CertificateForm::Printed) return {};

  const std::int64_t hi = w.n - 3 * w.k - w.spec.b();
  const std::int64_t lo = w.n + 3 * w.k + w.spec.b();
  const std::int64_t m = hi < 0 ? -hi : -lo;
  const std::int64_t bottom = hi < 0 ? lo : hi;
  std::vector<std::int64_t> dens;
  bool cancelled = false;
  if (hi < 0) {
    for (std::int64_t c : cert_offsets(form)) {
      if (c == m && !cancelled) {
        cancelled = true;
      } else {
        dens.push_back(hi + c);
      }
    }
    dens.push_back(lo + 1);
  } else {
    for (std::int64_t c : cert_offsets(form)) dens.push_back(hi + c);
    cancelled = (m == 1);  // the pole 1 - q^{lo+1}
  }
  if (!cancelled) return {};

  ProductFraction g(cert_numerator(w).shifted(s_exponent(w)));
  for (std::int64_t e : dens) g.div_factor(e);
  // (q;q)_{2n} / (q;q)_bottom with bottom = 2n + m > 2n.
  for (std::int64_t j = 2 * w.n + 1; j <= bottom; ++j) g.div_factor(j);
  for (std::int64_t j = 1; j < m; ++j) g.mul_factor(-j);
  return g;
}

inline RationalFn g_fn(const WZInstance& w, CertificateForm form = CertificateForm::Printed) {
  return g_fraction(w, form).to_rational();
}

}  // namespace qcert
