#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qcert/polyring/int_poly.hpp"

namespace qcert {

/**
 * Polynomial in q and 1/q, stored as q^min_exp * body where body is an
 * IntPoly with a nonzero constant term. The zero polynomial has min_exp 0
 * and an empty body.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;

  LaurentPoly(const IntPoly& p) : body_(p) { normalize(); }  // NOLINT: implicit widening is intended
  LaurentPoly(IntPoly&& p) : body_(std::move(p)) { normalize(); }  // NOLINT

  LaurentPoly(std::int64_t min_exp, std::vector<Integer> coeffs) : min_exp_(min_exp), body_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly constant(const Integer& c) { return LaurentPoly(IntPoly::constant(c)); }

  static LaurentPoly monomial(const Integer& c, std::int64_t e) {
    if (c == 0) return {};
    LaurentPoly r;
    r.min_exp_ = e;
    r.body_ = IntPoly::constant(c);
    return r;
  }

  /// 1 - q^e for any integer e (zero when e = 0).
  static LaurentPoly one_minus_q_pow(std::int64_t e) {
    if (e == 0) return {};
    if (e > 0) return LaurentPoly(IntPoly::one_minus_q_pow(static_cast<std::size_t>(e)));
    return LaurentPoly(e, {Integer(-1)}) + LaurentPoly::constant(1);
  }

  bool is_zero() const { return body_.is_zero(); }
  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t max_exp() const { return is_zero() ? 0 : min_exp_ + body_.degree(); }
  const IntPoly& body() const { return body_; }
  const std::vector<Integer>& coeffs() const { return body_.coeffs(); }

  Integer coeff(std::int64_t e) const {
    if (is_zero() || e < min_exp_) return 0;
    return body_.coeff(static_cast<std::size_t>(e - min_exp_));
  }

  /// Lossless when min_exp >= 0.
  bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }

  IntPoly to_int_poly() const {
    if (!is_polynomial()) throw InvalidArgument("Laurent polynomial has negative exponents");
    return body_.shifted(static_cast<std::size_t>(min_exp_));
  }

  /// Multiply by q^e.
  LaurentPoly shifted(std::int64_t e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += e;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    add_signed(o, 1);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    add_signed(o, -1);
    return *this;
  }

  /// In place multiplication by (1 - q^e), e >= 1. The constant term of the
  /// body is unchanged, so no renormalization is needed.
  void mul_one_minus_q_pow(std::int64_t e) { body_.mul_one_minus_q_pow(static_cast<std::size_t>(e)); }

  /// In place exact division by (1 - q^e), e >= 1. Throws NotDivisible.
  void div_one_minus_q_pow(std::int64_t e) { body_.div_one_minus_q_pow(static_cast<std::size_t>(e)); }

  /// this += c * q^shift * p without materializing the shifted term.
  void add_term(const IntPoly& p, const Integer& c, std::int64_t shift) {
    if (p.is_zero() || c == 0) return;
    if (is_zero()) {
      body_ = p * c;
      min_exp_ = shift;
      normalize();
      return;
    }
    if (shift < min_exp_) {
      body_ = body_.shifted(static_cast<std::size_t>(min_exp_ - shift));
      min_exp_ = shift;
    }
    const auto off = static_cast<std::size_t>(shift - min_exp_);
    if (c == 1 || c == -1) {
      body_.add_scaled_shifted(p, c == 1 ? 1 : -1, off);
    } else {
      body_.add_multiple_shifted(p, c, off);
    }
    normalize();
  }

  LaurentPoly& operator*=(const Integer& c) {
    body_ *= c;
    if (body_.is_zero()) min_exp_ = 0;
    return *this;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    r.body_ = -r.body_;
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.body_ = a.body_ * b.body_;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.body_ == b.body_;
  }

 private:
  void add_signed(const LaurentPoly& o, int sign) {
    if (o.is_zero()) return;
    if (is_zero()) {
      *this = (sign > 0) ? o : -o;
      return;
    }
    if (o.min_exp_ >= min_exp_) {
      body_.add_scaled_shifted(o.body_, sign, static_cast<std::size_t>(o.min_exp_ - min_exp_));
    } else {
      IntPoly b = body_.shifted(static_cast<std::size_t>(min_exp_ - o.min_exp_));
      b.add_scaled_shifted(o.body_, sign, 0);
      body_ = std::move(b);
      min_exp_ = o.min_exp_;
    }
    normalize();
  }

  void normalize() {
    if (body_.is_zero()) {
      min_exp_ = 0;
      return;
    }
    const std::size_t v = body_.valuation();
    if (v > 0) {
      body_ = body_.unshifted(v);
      min_exp_ += static_cast<std::int64_t>(v);
    }
  }

  std::int64_t min_exp_ = 0;
  IntPoly body_;
};

/// Exact quotient in the Laurent ring. Throws NotDivisible.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.is_zero()) return {};
  // Both bodies have a nonzero constant term, so the quotient body does too.
  IntPoly quot = exact_div(p.body(), d.body());
  return LaurentPoly(quot).shifted(p.min_exp() - d.min_exp());
}

/// Exact value at a nonzero integer point.
inline mpq_class eval_int(const LaurentPoly& p, const Integer& x) {
  if (x == 0) throw InvalidArgument("eval_int: evaluation point must be nonzero");
  if (p.is_zero()) return 0;
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  mpq_class r(acc);
  Integer xp;
  const std::int64_t e = p.min_exp();
  mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) {
    r *= mpq_class(xp);
  } else {
    r /= mpq_class(xp);
  }
  r.canonicalize();
  return r;
}

}  // namespace qcert
