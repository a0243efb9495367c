#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcert/congruences/prime_power.hpp"
#include "qcert/polyring/io.hpp"
#include "qcert/qcore/cyclotomic.hpp"
#include "qcert/qcore/number_theory.hpp"
#include "qcert/qcore/q_binomial.hpp"
#include "qcert/qobjects/catalan.hpp"
#include "qcert/qobjects/fibonacci.hpp"
#include "qcert/qobjects/sums.hpp"

namespace qcert::cli {

/// Integer parameters of a compute request; absent ones are std::nullopt.
struct ComputeParams {
  std::optional<std::int64_t> n, k, d, a;
};

inline const std::vector<std::string>& compute_objects() {
  static const std::vector<std::string> v{"qbin",     "cyclotomic", "qcatalan", "qfib",  "rr",
                                          "gk-lhs",   "dual-lhs",   "s-sum",    "t-sum"};
  return v;
}

namespace detail {

inline std::int64_t need(const std::optional<std::int64_t>& v, const char* name, const std::string& object) {
  if (!v) throw InvalidArgument(object + " requires --" + name);
  return *v;
}

inline void need_range(std::int64_t v, std::int64_t lo, const char* name) {
  if (v < lo) throw InvalidArgument(std::string("--") + name + " must be at least " + std::to_string(lo));
}

}  // namespace detail

/**
 * Value of a named q-object. t-sum with d < 0 reads the leading symbol
 * with |d|, the reading under which it agrees with s-sum.
 * Throws InvalidArgument (or a more specific Error) on bad parameters.
 */
inline LaurentPoly compute_object(const std::string& object, const ComputeParams& p) {
  using detail::need;
  using detail::need_range;
  if (object == "qbin") return q_binomial(need(p.n, "n", object), need(p.k, "k", object));
  if (object == "cyclotomic") {
    const std::int64_t n = need(p.n, "n", object);
    need_range(n, 1, "n");
    return cyclotomic(n);
  }
  if (object == "qcatalan") {
    const std::int64_t n = need(p.n, "n", object);
    need_range(n, 0, "n");
    return q_catalan(n);
  }
  if (object == "qfib" || object == "rr") {
    const std::int64_t n = need(p.n, "n", object);
    const std::int64_t a = p.a.value_or(0);
    need_range(n, 0, "n");
    if (object == "rr" && a != 0 && a != 1) throw InvalidArgument("--a must be 0 or 1");
    if (a < 0) throw InvalidArgument("--a must be nonnegative");
    return object == "qfib" ? q_fibonacci_rec({n, a}) : rr_rhs(n, a);
  }
  if (object == "gk-lhs" || object == "dual-lhs") {
    const std::int64_t n = need(p.n, "n", object);
    need_range(n, 1, "n");
    return object == "gk-lhs" ? gk_lhs(n) : LaurentPoly(dual_lhs(n));
  }
  if (object == "s-sum") {
    const std::int64_t n = need(p.n, "n", object);
    need_range(n, 1, "n");
    return s_sum(n, need(p.d, "d", object));
  }
  if (object == "t-sum") {
    const std::int64_t n = need(p.n, "n", object);
    const std::int64_t d = need(p.d, "d", object);
    need_range(n, 1, "n");
    return t_sum(n, d, d < 0 ? LeadingSymbol::Absolute : LeadingSymbol::Printed);
  }
  throw InvalidArgument("unknown object " + object);
}

inline nlohmann::ordered_json compute_json(const std::string& object, const ComputeParams& p, const LaurentPoly& v) {
  nlohmann::ordered_json j;
  j["object"] = object;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  if (p.n) params["n"] = *p.n;
  if (p.k) params["k"] = *p.k;
  if (p.d) params["d"] = *p.d;
  if (p.a) params["a"] = *p.a;
  j["params"] = std::move(params);
  j["text"] = to_string(v);
  j["value"] = to_json(v);
  return j;
}

enum class Corollary { PBinomial, PCatalan };

struct TableConfig {
  Corollary corollary = Corollary::PBinomial;
  std::int64_t p_max = 13;
  std::int64_t a_max = 1;
  std::int64_t d_max = 5;
  std::int64_t pa_max = 343;

  std::string validate() const {
    if (p_max < 2) return "p-max must be at least 2";
    if (a_max < 1) return "a-max must be at least 1";
    if (d_max < 0) return "d-max must be nonnegative";
    if (pa_max < 2) return "pa-max must be at least 2";
    return {};
  }
};

/// Rows for every prime p <= p_max and a <= a_max with p^a <= pa_max;
/// p-binomial rows also range over |d| <= min(d_max, p^a).
inline std::vector<PrimePowerRow> table_rows(const TableConfig& cfg) {
  std::vector<PrimePowerRow> rows;
  for (std::int64_t p = 2; p <= cfg.p_max; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t pa = p;
    for (std::int64_t a = 1; a <= cfg.a_max && pa <= cfg.pa_max; ++a, pa *= p) {
      if (cfg.corollary == Corollary::PCatalan) {
        rows.push_back(p_catalan_row(p, a));
        continue;
      }
      const std::int64_t dm = std::min(cfg.d_max, pa);
      for (std::int64_t d = -dm; d <= dm; ++d) rows.push_back(p_binomial_row(p, a, d));
    }
  }
  return rows;
}

inline nlohmann::ordered_json to_json(const PrimePowerRow& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["a"] = r.a;
  j["d"] = r.d;
  j["sum"] = r.sum.get_str();
  j["residue"] = r.residue.get_str();
  j["predicted"] = r.predicted.get_str();
  j["modulus"] = r.modulus.get_str();
  j["holds"] = r.holds;
  return j;
}

namespace detail {

// Long sums are shown as leading digits, trailing digits and length.
inline std::string abbreviate(const std::string& s, std::size_t width = 24) {
  if (s.size() <= width) return s;
  return s.substr(0, 8) + "..." + s.substr(s.size() - 8) + " (" + std::to_string(s.size()) + " digits)";
}

inline std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

}  // namespace detail

/// Right-aligned text table, one line per row.
inline std::string render_table(const std::vector<PrimePowerRow>& rows) {
  const std::vector<std::string> head{"p", "a", "d", "p^a", "sum", "residue", "predicted", "mod", "holds"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : rows) {
    Integer pa;
    mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(r.p), static_cast<unsigned long>(r.a));
    cells.push_back({std::to_string(r.p), std::to_string(r.a), std::to_string(r.d), pa.get_str(),
                     detail::abbreviate(r.sum.get_str()), r.residue.get_str(), r.predicted.get_str(),
                     r.modulus.get_str(), r.holds ? "yes" : "NO"});
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "  " : "") + detail::pad(row[i], width[i]);
    out += '\n';
  }
  return out;
}

}  // namespace qcert::cli
