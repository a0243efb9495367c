#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qcert/errors.hpp"

namespace qcert {

using Integer = mpz_class;

/**
 * Dense univariate polynomial in q with arbitrary-precision integer
 * coefficients. coeffs()[i] is the coefficient of q^i.
 *
 * The highest stored coefficient is always nonzero; the zero polynomial has
 * no coefficients at all. Multiplication is schoolbook convolution, which is
 * adequate up to degree ~10^4; beyond that an FFT/Kronecker product would be
 * the next step.
 */
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

  static IntPoly monomial(const Integer& c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Integer> v(exponent + 1);
    v[exponent] = c;
    return IntPoly(std::move(v));
  }

  /// 1 - q^e for e >= 1.
  static IntPoly one_minus_q_pow(std::size_t e) {
    if (e == 0) return {};
    std::vector<Integer> v(e + 1);
    v[0] = 1;
    v[e] = -1;
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
    return i == coeffs_.size() ? 0 : i;
  }

  IntPoly& operator+=(const IntPoly& o) {
    add_scaled_shifted(o, 1, 0);
    return *this;
  }

  IntPoly& operator-=(const IntPoly& o) {
    add_scaled_shifted(o, -1, 0);
    return *this;
  }

  IntPoly& operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
  }

  IntPoly& operator*=(const Integer& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  /// this += sign * q^shift * o, with sign in {+1, -1}.
  void add_scaled_shifted(const IntPoly& o, int sign, std::size_t shift) {
    if (o.is_zero()) return;
    if (coeffs_.size() < o.size() + shift) coeffs_.resize(o.size() + shift);
    auto* dst = coeffs_.data() + shift;
    if (sign >= 0) {
      for (std::size_t i = 0; i < o.size(); ++i) mpz_add(dst[i].get_mpz_t(), dst[i].get_mpz_t(), o.coeffs_[i].get_mpz_t());
    } else {
      for (std::size_t i = 0; i < o.size(); ++i) mpz_sub(dst[i].get_mpz_t(), dst[i].get_mpz_t(), o.coeffs_[i].get_mpz_t());
    }
    trim();
  }

  /// this += c * q^shift * o.
  void add_multiple_shifted(const IntPoly& o, const Integer& c, std::size_t shift) {
    if (o.is_zero() || c == 0) return;
    if (coeffs_.size() < o.size() + shift) coeffs_.resize(o.size() + shift);
    auto* dst = coeffs_.data() + shift;
    for (std::size_t i = 0; i < o.size(); ++i) mpz_addmul(dst[i].get_mpz_t(), o.coeffs_[i].get_mpz_t(), c.get_mpz_t());
    trim();
  }

  IntPoly shifted(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Integer> v(coeffs_.size() + e);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(e));
    IntPoly r;
    r.coeffs_ = std::move(v);
    return r;
  }

  /// Divides by q^e; the low e coefficients must be zero.
  IntPoly unshifted(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    for (std::size_t i = 0; i < e && i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) throw NotDivisible("unshifted: polynomial not divisible by q^e");
    }
    IntPoly r;
    if (e < coeffs_.size()) r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.end());
    return r;
  }

  /// In place multiplication by (1 - q^e), e >= 1.
  void mul_one_minus_q_pow(std::size_t e) {
    if (is_zero() || e == 0) {
      coeffs_.clear();
      return;
    }
    const std::size_t n = coeffs_.size();
    coeffs_.resize(n + e);
    for (std::size_t i = n + e; i-- > e;) {
      mpz_sub(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), coeffs_[i - e].get_mpz_t());
    }
    trim();
  }

  /// In place exact division by (1 - q^e), e >= 1. Throws NotDivisible.
  void div_one_minus_q_pow(std::size_t e) {
    if (e == 0) throw NotDivisible("division by 1 - q^0 = 0");
    if (is_zero()) return;
    const std::size_t n = coeffs_.size();
    if (n <= e) throw NotDivisible("div_one_minus_q_pow: degree too small");
    // p = (1 - q^e) c  gives  c_i = p_i + c_{i-e}.
    for (std::size_t i = e; i < n; ++i) {
      mpz_add(coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), coeffs_[i - e].get_mpz_t());
    }
    for (std::size_t i = n - e; i < n; ++i) {
      if (coeffs_[i] != 0) throw NotDivisible("div_one_minus_q_pow: nonzero remainder");
    }
    coeffs_.resize(n - e);
    trim();
  }

  bool is_palindromic() const {
    for (std::size_t i = 0, j = coeffs_.size(); i < j--; ++i) {
      if (coeffs_[i] != coeffs_[j]) return false;
    }
    return true;
  }

  /// Non-negative gcd of all coefficients (0 for the zero polynomial).
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Divides every coefficient by c, which must divide each exactly.
  void divexact(const Integer& c) {
    for (auto& x : coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Outer loop over the sparser factor: the q-factors used here are often
    // short or mostly zero.
    const IntPoly* outer = &a;
    const IntPoly* inner = &b;
    if (a.nonzero_count() > b.nonzero_count()) std::swap(outer, inner);
    std::vector<Integer> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < outer->size(); ++i) {
      const auto& c = outer->coeffs_[i];
      if (c == 0) continue;
      auto* dst = r.data() + i;
      for (std::size_t j = 0; j < inner->size(); ++j) {
        mpz_addmul(dst[j].get_mpz_t(), inner->coeffs_[j].get_mpz_t(), c.get_mpz_t());
      }
    }
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Value at q = 1 (coefficient sum).
inline Integer eval_one(const IntPoly& p) {
  Integer s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

/// Euclidean division by a polynomial whose leading coefficient divides every
/// intermediate leading term. Returns {quotient, remainder}.
/// Throws NotDivisible when an integer quotient step is not exact.
inline std::pair<IntPoly, IntPoly> div_rem_integral(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.degree() < d.degree()) return {IntPoly{}, p};
  std::vector<Integer> rem = p.coeffs();
  const std::size_t dn = d.size();
  const std::size_t qn = p.size() - dn + 1;
  std::vector<Integer> quot(qn);
  const Integer& lc = d.leading();
  const bool unit = (lc == 1 || lc == -1);
  Integer t;
  for (std::size_t i = qn; i-- > 0;) {
    Integer& top = rem[i + dn - 1];
    if (top == 0) continue;
    if (unit) {
      t = (lc == 1) ? top : Integer(-top);
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) throw NotDivisible("non-integral quotient coefficient");
      mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    }
    for (std::size_t j = 0; j < dn; ++j) {
      if (d.coeffs()[j] != 0) mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), d.coeffs()[j].get_mpz_t());
    }
    quot[i] = t;
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

/// Remainder of p modulo a monic polynomial m of degree >= 1.
inline IntPoly poly_rem(const IntPoly& p, const IntPoly& m) {
  if (m.degree() < 1 || m.leading() != 1) throw NonMonicModulus("poly_rem requires a monic modulus of degree >= 1");
  if (p.degree() < m.degree()) return p;
  std::vector<Integer> rem = p.coeffs();
  const std::size_t dn = m.size();
  for (std::size_t i = rem.size() - dn + 1; i-- > 0;) {
    const Integer t = rem[i + dn - 1];
    if (t == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) {
      if (m.coeffs()[j] != 0) mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), m.coeffs()[j].get_mpz_t());
    }
  }
  rem.resize(dn - 1);
  return IntPoly(std::move(rem));
}

/// Exact quotient p / d in Z[q]. Throws NotDivisible on a nonzero remainder.
inline IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
  auto [quot, rem] = div_rem_integral(p, d);
  if (!rem.is_zero()) throw NotDivisible("exact_div: nonzero remainder");
  return quot;
}

inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.leading() < 0) c = -c;
  IntPoly r = p;
  r.divexact(c);
  return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, skipping the
/// scaling when lc(b) is a unit.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (a.degree() < b.degree()) return a;
  const Integer& lc = b.leading();
  if (lc == 1 || lc == -1) return div_rem_integral(a, b).second;
  std::vector<Integer> rem = a.coeffs();
  const std::size_t dn = b.size();
  for (std::size_t top = rem.size(); top-- >= dn;) {
    const Integer t = rem[top];
    for (auto& x : rem) x *= lc;
    if (t != 0) {
      const std::size_t off = top - (dn - 1);
      for (std::size_t j = 0; j < dn; ++j) mpz_submul(rem[off + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    rem.resize(top);
    if (top == dn - 1) break;
  }
  return IntPoly(std::move(rem));
}

/**
 * Greatest common divisor in Z[q], normalized to a positive leading
 * coefficient. Integer contents are included, so gcd(2q, 4) = 2.
 * Primitive polynomial remainder sequence.
 */
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b) * b.content();
  if (b.is_zero()) return primitive_part(a) * a.content();
  Integer cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  // Common power of q.
  const std::size_t vq = std::min(x.valuation(), y.valuation());
  x = x.unshifted(x.valuation());
  y = y.unshifted(y.valuation());
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = IntPoly{1};
      break;
    }
    IntPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x).shifted(vq) * cont;
}

}  // namespace qcert
