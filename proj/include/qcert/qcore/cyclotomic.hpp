#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qcert/polyring/laurent_poly.hpp"
#include "qcert/qcore/number_theory.hpp"

namespace qcert {

namespace detail {

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  IntPoly get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    // Compute outside the lock; divisors recurse through get().
    IntPoly num = IntPoly::monomial(1, static_cast<std::size_t>(n)) - IntPoly{1};
    for (std::int64_t d : divisors(n)) {
      if (d == n) break;
      num = exact_div(num, get(d));
    }
    std::unique_lock lock(mutex_);
    return cache_.emplace(n, std::move(num)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::int64_t, IntPoly> cache_;
};

}  // namespace detail

/// n-th cyclotomic polynomial: (q^n - 1) divided by Phi_d(q) for every proper divisor d.
inline IntPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw InvalidArgument("cyclotomic: n must be positive");
  return detail::CyclotomicCache::instance().get(n);
}

/// Residue class of a polynomial modulo Phi_n(q): rep has degree < phi(n).
class CyclotomicResidue {
 public:
  CyclotomicResidue(std::int64_t n, IntPoly rep) : n_(n), rep_(std::move(rep)) {}

  std::int64_t n() const { return n_; }
  const IntPoly& rep() const { return rep_; }

  friend bool operator==(const CyclotomicResidue& a, const CyclotomicResidue& b) {
    return a.n_ == b.n_ && a.rep_ == b.rep_;
  }

 private:
  std::int64_t n_;
  IntPoly rep_;
};

/// Folds every exponent into [0, n) using q^n = 1 (valid since Phi_n divides
/// q^n - 1), then takes the Euclidean remainder by Phi_n(q).
/// For n = 1 this is evaluation at q = 1.
inline CyclotomicResidue reduce_mod_cyclotomic(const LaurentPoly& p, std::int64_t n) {
  if (n < 1) throw InvalidArgument("reduce_mod_cyclotomic: n must be positive");
  std::vector<Integer> folded(static_cast<std::size_t>(n));
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const auto e = floor_mod(p.min_exp() + static_cast<std::int64_t>(i), n);
    folded[static_cast<std::size_t>(e)] += c[i];
  }
  return {n, poly_rem(IntPoly(std::move(folded)), cyclotomic(n))};
}

}  // namespace qcert
