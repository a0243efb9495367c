#pragma once

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "qcert/polyring/int_poly.hpp"
#include "qcert/polyring/laurent_poly.hpp"
#include "qcert/qcore/q_integer.hpp"

namespace qcert {

namespace detail {

/// Multiplicative route: prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i) with
/// k replaced by min(k, n-k). Every partial product is the q-binomial
/// [n-k+i choose i], so each division is exact.
inline IntPoly q_binomial_product(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return {};
  const std::int64_t kk = std::min(k, n - k);
  IntPoly r{1};
  for (std::int64_t i = 1; i <= kk; ++i) {
    r.mul_one_minus_q_pow(static_cast<std::size_t>(n - kk + i));
    r.div_one_minus_q_pow(static_cast<std::size_t>(i));
  }
  return r;
}

/**
 * Rows 0..N of the q-Pascal triangle built with
 *   [n, k] = [n-1, k-1] + q^k [n-1, k].
 * Rows are appended under a unique lock and never modified afterwards; the
 * deque keeps references to published rows stable.
 */
class QBinomialTable {
 public:
  static constexpr std::int64_t kMaxRow = 80;

  static QBinomialTable& instance() {
    static QBinomialTable table;
    return table;
  }

  const IntPoly& get(std::int64_t n, std::int64_t k) { return row(n)[static_cast<std::size_t>(k)]; }

  const std::vector<IntPoly>& row(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<std::int64_t>(rows_.size())) return rows_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) append_row();
    return rows_[static_cast<std::size_t>(n)];
  }

 private:
  QBinomialTable() { rows_.push_back({IntPoly{1}}); }

  void append_row() {
    const auto& prev = rows_.back();
    const std::size_t n = prev.size();
    std::vector<IntPoly> row(n + 1);
    row[0] = IntPoly{1};
    row[n] = IntPoly{1};
    for (std::size_t k = 1; k < n; ++k) {
      IntPoly v = prev[k - 1];
      v.add_scaled_shifted(prev[k], 1, k);
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::deque<std::vector<IntPoly>> rows_;
};

}  // namespace detail

/**
 * Gaussian binomial coefficient [n choose k]_q; zero outside 0 <= k <= n.
 * Rows up to QBinomialTable::kMaxRow come from the memoized q-Pascal
 * recurrence; larger rows are computed on demand by the multiplicative
 * formula (a full memo of those rows does not fit in memory).
 */
inline IntPoly q_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (n <= detail::QBinomialTable::kMaxRow) return detail::QBinomialTable::instance().get(n, k);
  return detail::q_binomial_product(n, k);
}

/// The whole row [n choose 0..n]_q. Beyond the memo each entry costs one
/// multiplication and one exact division of its predecessor.
inline std::vector<IntPoly> q_binomial_row(std::int64_t n) {
  if (n < 0) return {};
  if (n <= detail::QBinomialTable::kMaxRow) return detail::QBinomialTable::instance().row(n);
  std::vector<IntPoly> row(static_cast<std::size_t>(n) + 1);
  row[0] = IntPoly{1};
  for (std::int64_t k = 0; k < n; ++k) {
    IntPoly v = row[static_cast<std::size_t>(k)];
    v.mul_one_minus_q_pow(static_cast<std::size_t>(n - k));
    v.div_one_minus_q_pow(static_cast<std::size_t>(k + 1));
    row[static_cast<std::size_t>(k) + 1] = std::move(v);
  }
  return row;
}

/// Product-definition oracle: (q;q)_n / ((q;q)_k (q;q)_{n-k}) by long division.
inline IntPoly q_binomial_by_division(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return {};
  return exact_div(q_pochhammer(n), q_pochhammer(k) * q_pochhammer(n - k));
}

/**
 * Holds [n choose k]_q and moves to neighbouring (n, k) with one
 * multiplication and one exact division by factors (1 - q^e), O(degree)
 * each. Leaving the support gives zero; re-entering recomputes directly.
 */
class QBinomialCursor {
 public:
  QBinomialCursor(std::int64_t n, std::int64_t k) : n_(n), k_(k), value_(q_binomial(n, k)) {}

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }
  const IntPoly& value() const { return value_; }

  void move_to(std::int64_t n, std::int64_t k) {
    const std::int64_t dn = n - n_;
    const std::int64_t dk = k - k_;
    if (dn == 0 && dk == 0) return;
    if (!in_support(n, k)) {
      set(n, k, IntPoly{});
      return;
    }
    if (!in_support(n_, k_) || std::abs(dn) + std::abs(dk) > kMaxWalk) {
      set(n, k, q_binomial(n, k));
      return;
    }
    // Diagonal steps first, then the remaining axis; every intermediate
    // point must stay in the support.
    while (n_ != n || k_ != k) {
      std::int64_t sn = (n > n_) - (n < n_);
      std::int64_t sk = (k > k_) - (k < k_);
      if (sn != 0 && sk != 0 && sn != sk) sk = 0;
      if (!in_support(n_ + sn, k_ + sk)) {
        set(n, k, q_binomial(n, k));
        return;
      }
      step(sn, sk);
    }
  }

 private:
  static constexpr std::int64_t kMaxWalk = 8;

  static bool in_support(std::int64_t n, std::int64_t k) { return n >= 0 && k >= 0 && k <= n; }

  void set(std::int64_t n, std::int64_t k, IntPoly v) {
    n_ = n;
    k_ = k;
    value_ = std::move(v);
  }

  void mul(std::int64_t e) { value_.mul_one_minus_q_pow(static_cast<std::size_t>(e)); }
  void div(std::int64_t e) { value_.div_one_minus_q_pow(static_cast<std::size_t>(e)); }

  // One unit step inside the support.
  void step(std::int64_t sn, std::int64_t sk) {
    const std::int64_t n = n_;
    const std::int64_t k = k_;
    if (sn == 1 && sk == 1) {  // [n+1, k+1] = [n, k] (1 - q^{n+1}) / (1 - q^{k+1})
      mul(n + 1);
      div(k + 1);
    } else if (sn == -1 && sk == -1) {  // [n-1, k-1] = [n, k] (1 - q^k) / (1 - q^n)
      mul(k);
      div(n);
    } else if (sn == 1) {  // [n+1, k] = [n, k] (1 - q^{n+1}) / (1 - q^{n+1-k})
      mul(n + 1);
      div(n + 1 - k);
    } else if (sn == -1) {  // [n-1, k] = [n, k] (1 - q^{n-k}) / (1 - q^n)
      mul(n - k);
      div(n);
    } else if (sk == 1) {  // [n, k+1] = [n, k] (1 - q^{n-k}) / (1 - q^{k+1})
      mul(n - k);
      div(k + 1);
    } else {  // [n, k-1] = [n, k] (1 - q^k) / (1 - q^{n-k+1})
      mul(k);
      div(n - k + 1);
    }
    n_ += sn;
    k_ += sk;
  }

  std::int64_t n_;
  std::int64_t k_;
  IntPoly value_;
};

}  // namespace qcert
