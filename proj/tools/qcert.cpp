// qcert: compute q-objects, run verification suites, print congruence tables.
// Exit codes: 0 success, 1 a checked instance failed, 2 invalid usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcert/cli/commands.hpp"
#include "qcert/cli/suites.hpp"

namespace {

using namespace qcert;
using namespace qcert::cli;

constexpr int kConfigError = 2;

int usage_error(const std::string& msg) {
  std::cerr << "qcert: " << msg << "\n";
  return kConfigError;
}

int run_compute(const std::string& object, const ComputeParams& params, const std::string& format) {
  try {
    const LaurentPoly v = compute_object(object, params);
    if (format == "json") {
      std::cout << compute_json(object, params, v).dump() << "\n";
    } else {
      std::cout << to_string(v) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

int run_verify(const SuiteConfig& cfg) {
  if (const std::string err = cfg.validate(); !err.empty()) return usage_error(err);
  std::ofstream out;
  if (cfg.output_path) {
    out.open(*cfg.output_path);
    if (!out) return usage_error("cannot open " + *cfg.output_path);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CongruenceReport> reports = run_suite(cfg);
  const double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (out) {
    for (const auto& r : reports) out << to_json(r).dump() << "\n";
  }
  std::cout << render_summary(summarize(reports), wall);
  return count_failures(reports) == 0 ? 0 : 1;
}

int run_table(const TableConfig& cfg, bool json) {
  if (const std::string err = cfg.validate(); !err.empty()) return usage_error(err);
  const auto rows = table_rows(cfg);
  if (json) {
    for (const auto& r : rows) std::cout << to_json(r).dump() << "\n";
  } else {
    std::cout << render_table(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-binomial identities and congruences"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Print one q-object");
  std::string object, format = "text";
  std::int64_t n = 0, k = 0, d = 0, a = 0;
  compute->add_option("object", object, "Object name")->required()->check(CLI::IsMember(compute_objects()));
  auto* on = compute->add_option("--n", n, "n");
  auto* ok = compute->add_option("--k", k, "k");
  auto* od = compute->add_option("--d", d, "d");
  auto* oa = compute->add_option("--a", a, "a");
  compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  SuiteConfig cfg;
  cfg.jobs = default_jobs();
  std::string suite = "all", certificate = "printed", output;
  std::int64_t n_max = 0;
  std::vector<std::string> suites;
  for (const auto& [name, s] : suite_names()) suites.push_back(name);
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  auto* on_max = verify->add_option("--n-max", n_max, "Largest n (per-suite default when omitted)");
  verify->add_option("--d-max", cfg.d_max, "Largest |d|")->capture_default_str();
  verify->add_option("--p-max", cfg.p_max, "Largest prime")->capture_default_str();
  verify->add_option("--a-max", cfg.a_max, "Largest a in [an choose k]")->capture_default_str();
  verify->add_option("--pa-max", cfg.pa_max, "Largest prime power p^a")->capture_default_str();
  verify->add_option("--numeric-n-max", cfg.numeric_n_max, "Largest n for root-of-unity checks")->capture_default_str();
  verify->add_option("--tolerance", cfg.tolerance, "Numeric tolerance")->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "Worker threads (default QCERT_JOBS or core count)");
  verify->add_option("--output", output, "JSON-lines report path");
  verify->add_option("--certificate", certificate, "printed or amended")->check(CLI::IsMember({"printed", "amended"}));

  // table
  auto* table = app.add_subcommand("table", "Print a prime-power congruence table");
  TableConfig tcfg;
  std::string corollary;
  bool table_json = false;
  table->add_option("corollary", corollary, "p-binomial or p-catalan")
      ->required()
      ->check(CLI::IsMember({"p-binomial", "p-catalan"}));
  table->add_option("--p-max", tcfg.p_max, "Largest prime")->capture_default_str();
  table->add_option("--a-max", tcfg.a_max, "Largest exponent a")->capture_default_str();
  table->add_option("--d-max", tcfg.d_max, "Largest |d| for p-binomial")->capture_default_str();
  table->add_option("--pa-max", tcfg.pa_max, "Largest prime power p^a")->capture_default_str();
  table->add_flag("--json", table_json, "Emit JSON lines instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (compute->parsed()) {
    ComputeParams p;
    if (*on) p.n = n;
    if (*ok) p.k = k;
    if (*od) p.d = d;
    if (*oa) p.a = a;
    return run_compute(object, p, format);
  }
  if (verify->parsed()) {
    cfg.suite = *parse_suite(suite);
    if (*on_max) cfg.n_max = n_max;
    if (!output.empty()) cfg.output_path = output;
    cfg.certificate = certificate == "amended" ? CertificateForm::Amended : CertificateForm::Printed;
    return run_verify(cfg);
  }
  tcfg.corollary = corollary == "p-catalan" ? Corollary::PCatalan : Corollary::PBinomial;
  return run_table(tcfg, table_json);
}
