#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qcert/polyring/eval.hpp"
#include "qcert/polyring/io.hpp"
#include "qcert/qcore/cyclotomic.hpp"

namespace qcert {

struct Param {
  std::string name;
  std::int64_t value = 0;

  friend bool operator==(const Param&, const Param&) = default;
};

/// One checked instance. holds is true iff the rendered residues agree.
struct CongruenceReport {
  std::string claim;
  std::int64_t n = 0;
  std::vector<Param> params;
  bool holds = false;
  std::string lhs;
  std::string rhs;
  double ms = 0.0;
  std::string note;  // empty unless the instance needs an explanation
};

/// Emission order: (claim, n, params in declaration order).
inline bool report_less(const CongruenceReport& a, const CongruenceReport& b) {
  if (a.claim != b.claim) return a.claim < b.claim;
  if (a.n != b.n) return a.n < b.n;
  const std::size_t m = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.params[i].name != b.params[i].name) return a.params[i].name < b.params[i].name;
    if (a.params[i].value != b.params[i].value) return a.params[i].value < b.params[i].value;
  }
  return a.params.size() < b.params.size();
}

inline nlohmann::ordered_json to_json(const CongruenceReport& r, bool with_ms = true) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["n"] = r.n;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& p : r.params) params[p.name] = p.value;
  j["params"] = std::move(params);
  j["holds"] = r.holds;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (with_ms) j["ms"] = r.ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

/// Reduces both sides mod Phi_n(q) through the same folding reduction.
inline CongruenceReport compare_mod_cyclotomic(std::string claim, std::int64_t n, std::vector<Param> params,
                                               const LaurentPoly& lhs, const LaurentPoly& rhs) {
  const CyclotomicResidue l = reduce_mod_cyclotomic(lhs, n);
  const CyclotomicResidue r = reduce_mod_cyclotomic(rhs, n);
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.n = n;
  rep.params = std::move(params);
  rep.holds = (l == r);
  rep.lhs = to_string(l.rep());
  rep.rhs = to_string(r.rep());
  return rep;
}

/// Exact equality of two Laurent polynomials; on failure lhs carries the
/// difference lhs - rhs and rhs is "0".
inline CongruenceReport compare_exact(std::string claim, std::int64_t n, std::vector<Param> params,
                                      const LaurentPoly& lhs, const LaurentPoly& rhs) {
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.n = n;
  rep.params = std::move(params);
  rep.holds = (lhs == rhs);
  rep.lhs = rep.holds ? "0" : to_string(lhs - rhs);
  rep.rhs = "0";
  return rep;
}

/// Integer congruence a == b (mod m), residues rendered in [0, m).
inline CongruenceReport compare_mod_integer(std::string claim, std::int64_t n, std::vector<Param> params,
                                            const Integer& a, const Integer& b, const Integer& m) {
  Integer ra, rb;
  mpz_fdiv_r(ra.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  mpz_fdiv_r(rb.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.n = n;
  rep.params = std::move(params);
  rep.holds = (ra == rb);
  rep.lhs = ra.get_str();
  rep.rhs = rb.get_str();
  return rep;
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

/**
 * Numeric oracle: evaluates lhs at every primitive n-th root e^{2 pi i m/n}
 * and compares with expected(m). lhs of the report is the largest absolute
 * deviation, rhs the tolerance.
 */
inline CongruenceReport compare_at_roots(std::string claim, std::int64_t n, std::vector<Param> params,
                                         const LaurentPoly& lhs,
                                         const std::function<std::complex<double>(std::int64_t)>& expected,
                                         double tolerance) {
  double worst = 0.0;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    worst = std::max(worst, std::abs(eval_root_of_unity(lhs, m, n) - expected(m)));
  }
  CongruenceReport rep;
  rep.claim = std::move(claim);
  rep.n = n;
  rep.params = std::move(params);
  rep.holds = worst < tolerance;
  rep.lhs = format_double(worst);
  rep.rhs = format_double(tolerance);
  return rep;
}

}  // namespace qcert
