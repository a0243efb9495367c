#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qcert/congruences/binomial_lemmas.hpp"
#include "qcert/congruences/catalan_sums.hpp"
#include "qcert/congruences/greene_krammer.hpp"
#include "qcert/congruences/prime_power.hpp"
#include "qcert/congruences/qc1.hpp"
#include "qcert/qcore/cyclotomic.hpp"
#include "qcert/qcore/gauss.hpp"
#include "qcert/qobjects/fibonacci.hpp"
#include "qcert/qobjects/sums.hpp"
#include "qcert/wz/checks.hpp"

namespace qcert::cli {

enum class Suite {
  BiRelations,
  Cyclotomic,
  BcLemmas,
  Qid1,
  Qid2,
  Qid3,
  Qc1,
  Gk,
  Dual,
  C3,
  C5,
  CatalanRoots,
  PCongruences,
  WzRecurrence,
  ShiftLemma,
  Telescoping,
  FinalIdentity,
  All,
};

inline const std::vector<std::pair<std::string, Suite>>& suite_names() {
  static const std::vector<std::pair<std::string, Suite>> names{
      {"bi-relations", Suite::BiRelations},   {"cyclotomic", Suite::Cyclotomic},
      {"bc-lemmas", Suite::BcLemmas},         {"qid1", Suite::Qid1},
      {"qid2", Suite::Qid2},                  {"qid3", Suite::Qid3},
      {"qc1", Suite::Qc1},                    {"gk", Suite::Gk},
      {"dual", Suite::Dual},                  {"c3", Suite::C3},
      {"c5", Suite::C5},                      {"catalan-roots", Suite::CatalanRoots},
      {"p-congruences", Suite::PCongruences}, {"wz-recurrence", Suite::WzRecurrence},
      {"shift-lemma", Suite::ShiftLemma},     {"telescoping", Suite::Telescoping},
      {"final-identity", Suite::FinalIdentity}, {"all", Suite::All},
  };
  return names;
}

inline std::optional<Suite> parse_suite(const std::string& s) {
  for (const auto& [name, suite] : suite_names())
    if (name == s) return suite;
  return std::nullopt;
}

inline std::string suite_name(Suite s) {
  for (const auto& [name, suite] : suite_names())
    if (suite == s) return name;
  return "?";
}

/// Polynomial suites default to n <= 60, the certificate suites to 25 and
/// the shift lemma to 40; an explicit n_max applies to every suite.
inline std::int64_t default_n_max(Suite s) {
  switch (s) {
    case Suite::WzRecurrence:
    case Suite::Telescoping:
    case Suite::FinalIdentity:
      return 25;
    case Suite::ShiftLemma:
      return 40;
    default:
      return 60;
  }
}

inline unsigned default_jobs() {
  if (const char* env = std::getenv("QCERT_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct SuiteConfig {
  Suite suite = Suite::All;
  std::optional<std::int64_t> n_max;  // per-suite default when unset
  std::int64_t d_max = 10;
  std::int64_t p_max = 13;
  std::int64_t a_max = 4;
  std::int64_t pa_max = 343;
  std::int64_t numeric_n_max = 30;
  double tolerance = 1e-6;
  std::optional<std::string> output_path;
  unsigned jobs = 1;
  CertificateForm certificate = CertificateForm::Printed;

  std::int64_t n_max_for(Suite s) const { return n_max.value_or(default_n_max(s)); }

  /// Empty when valid, else a one-line diagnostic.
  std::string validate() const {
    if (n_max && *n_max < 1) return "n-max must be at least 1";
    if (d_max < 0) return "d-max must be nonnegative";
    if (p_max < 2) return "p-max must be at least 2";
    if (a_max < 1) return "a-max must be at least 1";
    if (pa_max < 2) return "pa-max must be at least 2";
    if (numeric_n_max < 0) return "numeric-n-max must be nonnegative";
    if (!(tolerance > 0)) return "tolerance must be positive";
    if (jobs < 1) return "jobs must be at least 1";
    return {};
  }
};

/// A unit of work; label names the claim reported if the task throws.
struct Task {
  std::string label;
  std::int64_t n = 0;
  std::function<std::vector<CongruenceReport>()> run;
};

namespace detail {

using Reports = std::vector<CongruenceReport>;

inline CongruenceReport ok_report(std::string claim, std::int64_t n, std::vector<Param> params = {}) {
  return compare_exact(std::move(claim), n, std::move(params), {}, {});
}

// One report per n for a family of polynomial identities over k.
inline CongruenceReport first_failure(std::string claim, std::int64_t n,
                                      const std::vector<std::pair<LaurentPoly, LaurentPoly>>& sides) {
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (!(sides[k].first == sides[k].second)) {
      CongruenceReport r = compare_exact(claim, n, {}, sides[k].first, sides[k].second);
      r.note = "first failing index " + std::to_string(k);
      return r;
    }
  }
  return ok_report(std::move(claim), n);
}

inline bool is_palindromic(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

// p if n = p^a by trial division, else 1.
inline std::int64_t cpi_oracle(std::int64_t n) {
  std::int64_t m = n, p = 0;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    if (m % f) continue;
    if (p) return 1;
    p = f;
    while (m % f == 0) m /= f;
  }
  if (m > 1) {
    if (p) return 1;
    p = m;
  }
  return p;
}

inline void add_bi_relations(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::BiRelations);
  for (std::int64_t n = 0; n <= N; ++n) {
    out.push_back({"bi-relations", n, [n] {
                     const auto row = q_binomial_row(n);
                     const auto prev = q_binomial_row(n - 1);
                     auto at = [](const std::vector<IntPoly>& r, std::int64_t k) {
                       return (k < 0 || k >= static_cast<std::int64_t>(r.size())) ? LaurentPoly{}
                                                                                  : LaurentPoly(r[static_cast<std::size_t>(k)]);
                     };
                     std::vector<std::pair<LaurentPoly, LaurentPoly>> bi1, bi2;
                     for (std::int64_t k = 1; k <= n; ++k) {
                       bi1.emplace_back(at(prev, k - 1).shifted(n - k) + at(prev, k), at(row, k));
                       bi2.emplace_back(at(prev, k - 1) + at(prev, k).shifted(k), at(row, k));
                     }
                     Reports r;
                     r.push_back(first_failure("bi1", n, bi1));
                     r.push_back(first_failure("bi2", n, bi2));
                     CongruenceReport bi3 = ok_report("bi3", n);
                     for (std::int64_t k = 0; k <= n; ++k) {
                       const IntPoly& p = row[static_cast<std::size_t>(k)];
                       if (!is_palindromic(p) || static_cast<std::int64_t>(p.degree()) != k * (n - k)) {
                         bi3.holds = false;
                         bi3.lhs = to_string(p);
                         bi3.note = "not palindromic of degree k(n-k) at k=" + std::to_string(k);
                         break;
                       }
                     }
                     r.push_back(bi3);
                     if (n <= 60) {
                       std::vector<std::pair<LaurentPoly, LaurentPoly>> prod;
                       for (std::int64_t k = 0; k <= n; ++k)
                         prod.emplace_back(at(row, k), LaurentPoly(q_binomial_by_division(n, k)));
                       r.push_back(first_failure("bi-product", n, prod));
                     }
                     return r;
                   }});
  }
}

inline void add_cyclotomic(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::Cyclotomic);
  for (std::int64_t n = 1; n <= N; ++n) {
    out.push_back({"cyclotomic", n, [n] {
                     Reports r;
                     IntPoly prod{1};
                     for (std::int64_t d : divisors(n)) prod = prod * cyclotomic(d);
                     IntPoly target = IntPoly::monomial(1, static_cast<std::size_t>(n));
                     target -= IntPoly{1};
                     r.push_back(compare_exact("cyclotomic-product", n, {}, prod, target));
                     if (n >= 2)
                       r.push_back(compare_exact("cpi", n, {}, LaurentPoly::constant(eval_one(cyclotomic(n))),
                                                  LaurentPoly::constant(cpi_oracle(n))));
                     for (std::int64_t p : {3, 5}) {
                       if (n % p) continue;
                       const IntPoly g = gauss_poly(n, p);
                       r.push_back(compare_mod_cyclotomic("gauss-square", n, {{"p", p}}, g * g,
                                                          LaurentPoly::constant(p == 3 ? -3 : 5)));
                     }
                     return r;
                   }});
  }
}

inline void add_bc_lemmas(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::BcLemmas);
  for (std::int64_t n = 2; n <= N; ++n) {
    for (std::int64_t a = 1; a <= cfg.a_max; ++a)
      out.push_back({"bc1", n, [n, a] { return check_bc1_row(n, a); }});
    out.push_back({"bc2", n, [n] { return check_bc2_row(n); }});
    out.push_back({"bc3", n, [n] { return check_bc345_row(n); }});
    if (n <= 20)
      out.push_back({"bc-fractional", n, [n] {
                       Reports r;
                       for (std::int64_t m = 0; m <= 2 * n + 1; ++m) r.push_back(check_bc_fractional(n, m));
                       return r;
                     }});
  }
}

inline void add_qid1(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::Qid1);
  for (std::int64_t a = 0; a <= 1; ++a) {
    out.push_back({"fib-explicit", 0, [N, a] {
                     const auto rec = q_fibonacci_sequence(N, a);
                     Reports r;
                     for (std::int64_t n = 0; n <= N; ++n)
                       r.push_back(compare_exact("fib-explicit", n, {{"a", a}}, rec[static_cast<std::size_t>(n)],
                                                 q_fibonacci_explicit({n, a})));
                     return r;
                   }});
    for (std::int64_t n = 0; n <= N; ++n)
      out.push_back({"qid1", n, [n, a] { return Reports{compare_exact("qid1", n, {{"a", a}}, rr_lhs(n, a), rr_rhs(n, a))}; }});
  }
}

inline void add_qid2(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::Qid2);
  for (std::int64_t n = 0; n <= N; ++n)
    out.push_back({"qid2", n, [n] { return Reports{compare_exact("qid2", n, {}, g_sum(n), h_closed(n))}; }});
}

inline void add_qid3(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::Qid3);
  const std::int64_t D = cfg.d_max;
  for (std::int64_t n = 1; n <= N; ++n) {
    out.push_back({"qid3", n, [n, D] {
                     const auto row = q_binomial_row(2 * n);
                     Reports r;
                     for (std::int64_t d = -std::min(n, D); d <= std::min(n, D); ++d) {
                       const LeadingSymbol lead = d < 0 ? LeadingSymbol::Absolute : LeadingSymbol::Printed;
                       CongruenceReport rep =
                           compare_exact("qid3", n, {{"d", d}}, s_sum(n, d), t_sum_from_row(n, d, row, lead));
                       if (d < 0) rep.note = "leading symbol read with |d|";
                       r.push_back(std::move(rep));
                     }
                     return r;
                   }});
  }
}

inline void add_qc1(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::Qc1);
  const std::int64_t D = cfg.d_max;
  for (std::int64_t n = 2; n <= N; ++n) {
    out.push_back({"qc1", n, [n, D] {
                     Reports r;
                     for (std::int64_t d = -std::min(n, D); d <= std::min(n, D); ++d) r.push_back(check_qc1(n, d));
                     return r;
                   }});
  }
}

inline void add_gk_dual(const SuiteConfig& cfg, bool dual, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(dual ? Suite::Dual : Suite::Gk);
  const std::int64_t M = cfg.numeric_n_max;
  const double tol = cfg.tolerance;
  for (std::int64_t n = 2; n <= std::max(N, M); ++n) {
    out.push_back({dual ? "dual" : "gk", n, [=] {
                     Reports r;
                     if (dual) {
                       const IntPoly lhs = dual_lhs(n);
                       if (n <= N) r.push_back(check_dual(n, lhs));
                       if (n <= M) r.push_back(check_dual_numeric(n, tol, lhs));
                     } else {
                       const LaurentPoly lhs = gk_lhs(n);
                       if (n <= N) r.push_back(check_gk(n, lhs));
                       if (n <= M) r.push_back(check_gk_numeric(n, tol, lhs));
                     }
                     return r;
                   }});
  }
}

inline void add_catalan(const SuiteConfig& cfg, Suite which, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(which);
  const std::int64_t M = which == Suite::CatalanRoots ? std::max(N, cfg.numeric_n_max) : N;
  const auto sums = std::make_shared<const std::vector<CatalanPartialSums>>(catalan_partial_sums(M));
  const double tol = cfg.tolerance;
  const std::int64_t numeric_max = cfg.numeric_n_max;
  if (which == Suite::C5) {
    const auto f1 = std::make_shared<const std::vector<IntPoly>>(q_fibonacci_sequence(N, 1));
    const auto f0 = std::make_shared<const std::vector<IntPoly>>(q_fibonacci_sequence(N + 2, 0));
    for (std::int64_t n = 1; n <= N; ++n)
      out.push_back({"c5", n, [=] {
                       const IntPoly fib = (*f1)[static_cast<std::size_t>(n)] + (*f0)[static_cast<std::size_t>(n) + 2];
                       return Reports{check_c5(n, (*sums)[static_cast<std::size_t>(n)].alternating, fib),
                                      check_c5_table(n, fib)};
                     }});
    return;
  }
  for (std::int64_t n = 1; n <= M; ++n) {
    if (which == Suite::C3) {
      out.push_back({"c3", n, [=] { return Reports{check_c3(n, (*sums)[static_cast<std::size_t>(n)].plain)}; }});
      continue;
    }
    if (n % 3 && n % 5) continue;
    out.push_back({"catalan-roots", n, [=] {
                     const auto& s = (*sums)[static_cast<std::size_t>(n)];
                     Reports r;
                     if (n % 3 == 0) {
                       if (n <= N) r.push_back(check_catalan_root3(n, s.plain));
                       if (n <= numeric_max) r.push_back(check_catalan_root3_numeric(n, tol, s.plain));
                     }
                     if (n % 5 == 0) {
                       if (n <= N) r.push_back(check_catalan_root5(n, s.alternating));
                       if (n <= numeric_max) r.push_back(check_catalan_root5_numeric(n, tol, s.alternating));
                     }
                     return r;
                   }});
  }
}

/// Primes p <= p_max and exponents a with p^a <= pa_max; |d| <= min(5, d_max, p^a).
inline void add_p_congruences(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t D = std::min<std::int64_t>(5, cfg.d_max);
  for (std::int64_t p = 2; p <= cfg.p_max; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t pa = p;
    for (std::int64_t a = 1; pa <= cfg.pa_max; ++a, pa *= p) {
      out.push_back({"p-congruences", pa, [p, a, pa, D] {
                       Reports r = check_p_catalan(p, a);
                       const std::int64_t dm = std::min(D, pa);
                       for (std::int64_t d = -dm; d <= dm; ++d) r.push_back(check_p_binomial(p, a, d));
                       return r;
                     }});
    }
  }
}

inline void add_wz_recurrence(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::WzRecurrence);
  const CertificateForm form = cfg.certificate;
  for (std::int64_t n = 1; n <= N; ++n) {
    for (const CertificateSpec spec : {CertificateSpec::plus(), CertificateSpec::minus()}) {
      out.push_back({"wz-recurrence", n, [n, spec, form] {
                       Reports r;
                       const std::int64_t K = wz_k_window(n);
                       for (std::int64_t k = -K; k <= K; ++k) r.push_back(check_wz_recurrence(n, k, spec, form));
                       for (std::int64_t k0 : {0, 1}) r.push_back(check_wz_tail_sum(n, k0, spec, form));
                       return r;
                     }});
    }
  }
  // Coefficient identities are cheap; they run to twice the sweep bound.
  for (std::int64_t n = 0; n <= 2 * N; ++n)
    out.push_back({"aj-invariance", n, [n] { return Reports{check_aj_invariance(n), check_c0_zero(n)}; }});
}

inline void add_shift_lemma(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::ShiftLemma);
  const std::int64_t D = cfg.d_max;
  for (std::int64_t n = 1; n <= N; ++n) {
    out.push_back({"shift-lemma", n, [n, D] {
                     Reports r;
                     const std::int64_t dm = std::min(n, D);
                     std::map<std::int64_t, IntPoly> s;
                     for (std::int64_t d = -dm; d <= dm + 3; ++d) s.emplace(d, s_sum(n, d));
                     for (std::int64_t d = -dm; d <= dm; ++d) r.push_back(check_shift_lemma(n, d, s.at(d), s.at(d + 3)));
                     return r;
                   }});
  }
}

inline void add_telescoping(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::Telescoping);
  const CertificateForm form = cfg.certificate;
  for (std::int64_t n = 1; n <= 4; ++n)
    out.push_back({"initial-cases", n, [n] { return Reports{check_initial_case(n)}; }});
  for (std::int64_t n = 1; n <= N; ++n)
    out.push_back({"telescoped", n, [n, form] { return Reports{check_telescoped(n, form)}; }});
}

inline void add_final_identity(const SuiteConfig& cfg, std::vector<Task>& out) {
  const std::int64_t N = cfg.n_max_for(Suite::FinalIdentity);
  const CertificateForm form = cfg.certificate;
  for (std::int64_t n = 2; n <= N; ++n)
    out.push_back({"final-identity", n, [n, form] { return Reports{check_final_identity(n, form)}; }});
}

}  // namespace detail

inline std::vector<Task> build_tasks(const SuiteConfig& cfg) {
  std::vector<Task> out;
  auto add = [&](Suite s) {
    switch (s) {
      case Suite::BiRelations: detail::add_bi_relations(cfg, out); break;
      case Suite::Cyclotomic: detail::add_cyclotomic(cfg, out); break;
      case Suite::BcLemmas: detail::add_bc_lemmas(cfg, out); break;
      case Suite::Qid1: detail::add_qid1(cfg, out); break;
      case Suite::Qid2: detail::add_qid2(cfg, out); break;
      case Suite::Qid3: detail::add_qid3(cfg, out); break;
      case Suite::Qc1: detail::add_qc1(cfg, out); break;
      case Suite::Gk: detail::add_gk_dual(cfg, false, out); break;
      case Suite::Dual: detail::add_gk_dual(cfg, true, out); break;
      case Suite::C3:
      case Suite::C5:
      case Suite::CatalanRoots: detail::add_catalan(cfg, s, out); break;
      case Suite::PCongruences: detail::add_p_congruences(cfg, out); break;
      case Suite::WzRecurrence: detail::add_wz_recurrence(cfg, out); break;
      case Suite::ShiftLemma: detail::add_shift_lemma(cfg, out); break;
      case Suite::Telescoping: detail::add_telescoping(cfg, out); break;
      case Suite::FinalIdentity: detail::add_final_identity(cfg, out); break;
      case Suite::All: break;
    }
  };
  if (cfg.suite == Suite::All) {
    for (const auto& [name, s] : suite_names()) add(s);
  } else {
    add(cfg.suite);
  }
  return out;
}

/**
 * Runs the tasks on `jobs` workers and returns every report sorted by
 * (claim, n, params). Each report's ms is its task's wall time divided
 * evenly among the task's reports. A throwing task yields one failing
 * report carrying the exception text.
 */
inline std::vector<CongruenceReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CongruenceReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        CongruenceReport r;
        r.claim = tasks[i].label;
        r.n = tasks[i].n;
        r.lhs = "error";
        r.rhs = "0";
        r.note = e.what();
        results[i] = {r};
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      for (auto& r : results[i]) r.ms = ms / static_cast<double>(results[i].size());
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CongruenceReport> all;
  for (auto& v : results)
    for (auto& r : v) all.push_back(std::move(r));
  std::stable_sort(all.begin(), all.end(), report_less);
  return all;
}

inline std::vector<CongruenceReport> run_suite(const SuiteConfig& cfg) { return run_tasks(build_tasks(cfg), cfg.jobs); }

struct ClaimSummary {
  std::string claim;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double ms = 0.0;
};

inline std::vector<ClaimSummary> summarize(const std::vector<CongruenceReport>& reports) {
  std::vector<ClaimSummary> out;
  for (const auto& r : reports) {  // reports are grouped by claim
    if (out.empty() || out.back().claim != r.claim) out.push_back({r.claim});
    auto& s = out.back();
    ++s.instances;
    if (!r.holds) ++s.failures;
    s.ms += r.ms;
  }
  return out;
}

inline std::size_t count_failures(const std::vector<CongruenceReport>& reports) {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.holds; }));
}

/// Aligned summary: claim, instances, failures, wall time, then a total line.
inline std::string render_summary(const std::vector<ClaimSummary>& rows, double wall_ms) {
  std::size_t w = 5;
  for (const auto& r : rows) w = std::max(w, r.claim.size());
  auto line = [&](const std::string& c, const std::string& i, const std::string& f, const std::string& t) {
    std::string s = c + std::string(w - c.size(), ' ');
    for (const auto* col : {&i, &f, &t}) s += "  " + std::string(col->size() < 10 ? 10 - col->size() : 0, ' ') + *col;
    return s + "\n";
  };
  auto ms = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return std::string(buf);
  };
  std::string out = line("claim", "instances", "failures", "ms");
  std::size_t inst = 0, fail = 0;
  for (const auto& r : rows) {
    out += line(r.claim, std::to_string(r.instances), std::to_string(r.failures), ms(r.ms));
    inst += r.instances;
    fail += r.failures;
  }
  out += line("total", std::to_string(inst), std::to_string(fail), ms(wall_ms));
  return out;
}

}  // namespace qcert::cli
