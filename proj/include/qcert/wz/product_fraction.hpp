#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "qcert/errors.hpp"
#include "qcert/polyring/io.hpp"
#include "qcert/polyring/laurent_poly.hpp"
#include "qcert/polyring/rational_fn.hpp"

namespace qcert {

/**
 * num / prod_{e in den} (1 - q^e) with every e >= 1, den kept sorted.
 * Every denominator in the certificate machinery is such a product, so sums
 * and equality tests need only O(degree) factor multiplications and no
 * polynomial gcd. The representation is not canonical; compare with ==.
 */
class ProductFraction {
 public:
  ProductFraction() = default;
  ProductFraction(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT: implicit widening is intended

  const LaurentPoly& num() const { return num_; }
  const std::vector<std::int64_t>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Multiply by (1 - q^e) for any integer e.
  void mul_factor(std::int64_t e) {
    if (e == 0) {
      num_ = LaurentPoly{};
      den_.clear();
      return;
    }
    if (num_.is_zero()) return;
    if (e > 0) {
      num_.mul_one_minus_q_pow(e);
    } else {  // 1 - q^e = -q^e (1 - q^{-e})
      num_.mul_one_minus_q_pow(-e);
      num_ = -num_.shifted(e);
    }
  }

  /// Divide by (1 - q^e); e = 0 throws DegenerateDenominator.
  void div_factor(std::int64_t e) {
    if (e == 0) throw DegenerateDenominator("division by the factor 1 - q^0 = 0");
    if (e < 0) {  // 1 / (1 - q^e) = -q^{-e} / (1 - q^{-e})
      num_ = -num_.shifted(-e);
      e = -e;
    }
    den_.insert(std::upper_bound(den_.begin(), den_.end(), e), e);
  }

  void mul(const LaurentPoly& p) { num_ = num_ * p; }

  /// Drops denominator factors that divide the numerator exactly.
  ProductFraction simplified() const {
    ProductFraction r;
    r.num_ = num_;
    if (num_.is_zero()) return r;
    for (std::int64_t e : den_) {
      LaurentPoly trial = r.num_;
      try {
        trial.div_one_minus_q_pow(e);
        r.num_ = std::move(trial);
      } catch (const NotDivisible&) {
        r.den_.push_back(e);
      }
    }
    return r;
  }

  RationalFn to_rational() const {
    IntPoly d{1};
    for (std::int64_t e : den_) d.mul_one_minus_q_pow(static_cast<std::size_t>(e));
    return RationalFn(num_, LaurentPoly(d));
  }

  friend ProductFraction operator*(ProductFraction x, const ProductFraction& y) {
    x.num_ = x.num_ * y.num_;
    std::vector<std::int64_t> merged;
    std::merge(x.den_.begin(), x.den_.end(), y.den_.begin(), y.den_.end(), std::back_inserter(merged));
    x.den_ = std::move(merged);
    return x;
  }

  friend ProductFraction operator+(const ProductFraction& x, const ProductFraction& y) { return combine(x, y, 1); }
  friend ProductFraction operator-(const ProductFraction& x, const ProductFraction& y) { return combine(x, y, -1); }

  ProductFraction operator-() const {
    ProductFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  /// Equality as elements of the field of rational functions.
  friend bool operator==(const ProductFraction& x, const ProductFraction& y) { return (x - y).is_zero(); }

 private:
  // Over the multiset union of the two denominators.
  static ProductFraction combine(const ProductFraction& x, const ProductFraction& y, int sign) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return sign > 0 ? y : -y;
    std::vector<std::int64_t> common;
    std::vector<std::int64_t> x_missing;  // factors of common absent from x
    std::vector<std::int64_t> y_missing;
    std::size_t i = 0, j = 0;
    while (i < x.den_.size() || j < y.den_.size()) {
      if (j == y.den_.size() || (i < x.den_.size() && x.den_[i] < y.den_[j])) {
        common.push_back(x.den_[i]);
        y_missing.push_back(x.den_[i++]);
      } else if (i == x.den_.size() || y.den_[j] < x.den_[i]) {
        common.push_back(y.den_[j]);
        x_missing.push_back(y.den_[j++]);
      } else {
        common.push_back(x.den_[i]);
        ++i;
        ++j;
      }
    }
    LaurentPoly a = x.num_;
    for (std::int64_t e : x_missing) a.mul_one_minus_q_pow(e);
    LaurentPoly b = y.num_;
    for (std::int64_t e : y_missing) b.mul_one_minus_q_pow(e);
    ProductFraction r;
    r.num_ = sign > 0 ? a + b : a - b;
    if (!r.num_.is_zero()) r.den_ = std::move(common);
    return r;
  }

  LaurentPoly num_;
  std::vector<std::int64_t> den_;
};

inline std::string to_string(const ProductFraction& f) {
  if (f.den().empty()) return to_string(f.num());
  std::string d;
  for (std::int64_t e : f.den()) d += "(1 - q" + (e == 1 ? std::string() : "^" + std::to_string(e)) + ")";
  return "(" + to_string(f.num()) + ") / " + d;
}

}  // namespace qcert
