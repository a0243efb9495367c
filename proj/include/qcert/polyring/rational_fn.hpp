#pragma once

#include <utility>

#include "qcert/polyring/laurent_poly.hpp"

namespace qcert {

/**
 * Exact quotient num/den of Laurent polynomials in canonical form:
 *  - den has min_exp 0, a nonzero constant term and a positive leading
 *    coefficient;
 *  - the integer polynomials underlying num and den are coprime in Z[q]
 *    (contents included);
 *  - zero is 0/1.
 * With this form equality is structural.
 */
class RationalFn {
 public:
  RationalFn() : den_(IntPoly{1}) {}
  RationalFn(const LaurentPoly& p) : num_(p), den_(IntPoly{1}) {}  // NOLINT: implicit widening is intended
  RationalFn(const IntPoly& p) : num_(p), den_(IntPoly{1}) {}      // NOLINT

  RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw NotDivisible("rational function with zero denominator");
    if (num.is_zero()) {
      den_ = LaurentPoly(IntPoly{1});
      return;
    }
    IntPoly n = num.body();
    IntPoly d = den.body();
    const IntPoly g = gcd(n, d);
    if (!(g == IntPoly{1})) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
    if (d.leading() < 0) {
      n = -n;
      d = -d;
    }
    num_ = LaurentPoly(std::move(n)).shifted(num.min_exp() - den.min_exp());
    den_ = LaurentPoly(std::move(d));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_poly() const { return den_.body() == IntPoly{1}; }

  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFn operator*(const RationalFn& x, const RationalFn& y) {
    if (x.is_zero() || y.is_zero()) return {};
    // Cross cancellation keeps the product canonical given canonical inputs.
    const IntPoly g1 = gcd(x.num_.body(), y.den_.body());
    const IntPoly g2 = gcd(y.num_.body(), x.den_.body());
    const LaurentPoly xn = LaurentPoly(exact_div(x.num_.body(), g1)).shifted(x.num_.min_exp());
    const LaurentPoly yn = LaurentPoly(exact_div(y.num_.body(), g2)).shifted(y.num_.min_exp());
    const IntPoly xd = exact_div(x.den_.body(), g2);
    const IntPoly yd = exact_div(y.den_.body(), g1);
    RationalFn r;
    r.num_ = xn * yn;
    r.den_ = LaurentPoly(xd * yd);
    r.fix_sign();
    return r;
  }

  friend RationalFn operator+(const RationalFn& x, const RationalFn& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.is_laurent_poly() && y.is_laurent_poly()) return RationalFn(x.num_ + y.num_);
    const IntPoly& b = x.den_.body();
    const IntPoly& d = y.den_.body();
    const IntPoly g = gcd(b, d);
    const IntPoly bg = exact_div(b, g);
    const IntPoly dg = exact_div(d, g);
    const LaurentPoly t = x.num_ * LaurentPoly(dg) + y.num_ * LaurentPoly(bg);
    if (t.is_zero()) return {};
    const IntPoly g2 = gcd(t.body(), g);
    RationalFn r;
    r.num_ = LaurentPoly(exact_div(t.body(), g2)).shifted(t.min_exp());
    r.den_ = LaurentPoly(bg * exact_div(d, g2));
    r.fix_sign();
    return r;
  }

  friend RationalFn operator-(const RationalFn& x, const RationalFn& y) { return x + (-y); }

  friend bool operator==(const RationalFn& x, const RationalFn& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

 private:
  void fix_sign() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(IntPoly{1});
      return;
    }
    if (den_.body().leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qcert
