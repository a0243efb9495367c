#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qcert/cli/commands.hpp"
#include "qcert/cli/suites.hpp"

using namespace qcert;
using namespace qcert::cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the built qcert binary with stderr discarded.
Run qcert_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(QCERT_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> without_ms(const std::vector<CongruenceReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(to_json(r, false).dump());
  return out;
}

}  // namespace

TEST(SuiteConfig, ParsingAndValidation) {
  for (const auto& [name, s] : suite_names()) EXPECT_EQ(suite_name(*parse_suite(name)), name);
  EXPECT_FALSE(parse_suite("nope").has_value());
  SuiteConfig cfg;
  EXPECT_TRUE(cfg.validate().empty());
  cfg.n_max = 0;
  EXPECT_FALSE(cfg.validate().empty());
  cfg.n_max = 5;
  cfg.tolerance = 0;
  EXPECT_FALSE(cfg.validate().empty());
  cfg.tolerance = 1e-6;
  cfg.jobs = 0;
  EXPECT_FALSE(cfg.validate().empty());
}

TEST(SuiteConfig, Defaults) {
  SuiteConfig cfg;
  EXPECT_EQ(cfg.n_max_for(Suite::Qc1), 60);
  EXPECT_EQ(cfg.n_max_for(Suite::WzRecurrence), 25);
  EXPECT_EQ(cfg.n_max_for(Suite::ShiftLemma), 40);
  EXPECT_EQ(cfg.numeric_n_max, 30);
  EXPECT_DOUBLE_EQ(cfg.tolerance, 1e-6);
  cfg.n_max = 7;
  EXPECT_EQ(cfg.n_max_for(Suite::WzRecurrence), 7);
}

TEST(Compute, Examples) {
  EXPECT_EQ(to_string(compute_object("qbin", {4, 2, {}, {}})), "1 + q + 2*q^2 + q^3 + q^4");
  EXPECT_EQ(to_string(compute_object("qcatalan", {2, {}, {}, {}})), "1 + q^2");
  EXPECT_EQ(to_string(compute_object("cyclotomic", {6, {}, {}, {}})), "1 - q + q^2");
  EXPECT_THROW(compute_object("qbin", {4, {}, {}, {}}), InvalidArgument);
  EXPECT_THROW(compute_object("cyclotomic", {0, {}, {}, {}}), InvalidArgument);
  EXPECT_THROW(compute_object("rr", {3, {}, {}, 2}), InvalidArgument);
  // t-sum agrees with s-sum, also for negative d.
  for (std::int64_t d = -3; d <= 3; ++d)
    EXPECT_EQ(compute_object("t-sum", {6, {}, d, {}}), compute_object("s-sum", {6, {}, d, {}})) << d;
}

TEST(Table, PBinomialContainsKnownRow) {
  TableConfig cfg;
  cfg.p_max = 5;
  cfg.a_max = 1;
  bool found = false;
  for (const auto& r : table_rows(cfg)) {
    EXPECT_TRUE(r.holds);
    if (r.p == 5 && r.a == 1 && r.d == 0) {
      EXPECT_EQ(r.sum, 99);
      EXPECT_EQ(r.residue, 4);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Table, PCatalanRows) {
  TableConfig cfg;
  cfg.corollary = Corollary::PCatalan;
  cfg.p_max = 7;
  cfg.a_max = 2;
  const auto rows = table_rows(cfg);
  ASSERT_EQ(rows.size(), 8u);  // p in {2,3,5,7}, a in {1,2}
  for (const auto& r : rows) EXPECT_TRUE(r.holds) << r.p << "^" << r.a;
  EXPECT_EQ(rows[4].sum, 23);  // p = 5, a = 1
  EXPECT_EQ(rows[4].residue, 3);
}

TEST(Verify, Qid2Count) {
  SuiteConfig cfg;
  cfg.suite = Suite::Qid2;
  cfg.n_max = 50;
  const auto reports = run_suite(cfg);
  EXPECT_EQ(reports.size(), 51u);
  EXPECT_EQ(count_failures(reports), 0u);
}

TEST(Verify, SortedAndDeterministicAcrossJobCounts) {
  SuiteConfig cfg;
  cfg.suite = Suite::All;
  cfg.n_max = 8;
  cfg.numeric_n_max = 8;
  cfg.pa_max = 27;
  cfg.jobs = 1;
  const auto a = run_suite(cfg);
  cfg.jobs = 3;
  const auto b = run_suite(cfg);
  EXPECT_EQ(without_ms(a), without_ms(b));
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), report_less));
}

TEST(Verify, AllSmallAmendedHasNoFailures) {
  SuiteConfig cfg;
  cfg.n_max = 12;
  cfg.numeric_n_max = 12;
  cfg.pa_max = 49;
  cfg.certificate = CertificateForm::Amended;
  const auto reports = run_suite(cfg);
  for (const auto& r : reports) EXPECT_TRUE(r.holds) << to_json(r).dump();
}

TEST(Verify, ThrowingTaskBecomesFailure) {
  std::vector<Task> tasks{{"boom", 3, []() -> std::vector<CongruenceReport> { throw InvalidArgument("bad"); }}};
  const auto reports = run_tasks(tasks, 2);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].holds);
  EXPECT_EQ(reports[0].claim, "boom");
  EXPECT_EQ(reports[0].note, "bad");
}

TEST(Verify, SummaryCountsFailures) {
  std::vector<CongruenceReport> r(3);
  r[0].claim = "x";
  r[0].holds = true;
  r[1].claim = "x";
  r[2].claim = "y";
  const auto s = summarize(r);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].instances, 2u);
  EXPECT_EQ(s[0].failures, 1u);
  EXPECT_EQ(s[1].failures, 1u);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(qcert_cli("compute qbin --n 4 --k 2").out, "1 + q + 2*q^2 + q^3 + q^4\n");
  EXPECT_EQ(qcert_cli("compute qbin --n 4").code, 2);
  EXPECT_EQ(qcert_cli("compute nothing --n 4").code, 2);
  EXPECT_EQ(qcert_cli("verify --suite qc1 --n-max 0").code, 2);
  EXPECT_EQ(qcert_cli("verify --suite qid2 --n-max 10").code, 0);
  EXPECT_EQ(qcert_cli("table p-binomial --p-max 1").code, 2);
  EXPECT_EQ(qcert_cli("table p-catalan --p-max 7 --a-max 2").code, 0);
  // The printed certificate fails the recurrence, so the run must not exit 0.
  EXPECT_EQ(qcert_cli("verify --suite wz-recurrence --n-max 2").code, 1);
  EXPECT_EQ(qcert_cli("verify --suite wz-recurrence --n-max 2 --certificate amended").code, 0);
}

TEST(Binary, OutputFileIsJsonLines) {
  const std::string path = ::testing::TempDir() + "qcert_cli_test.jsonl";
  ASSERT_EQ(qcert_cli("verify --suite c3 --n-max 6 --jobs 2 --output " + path).code, 0);
  std::ifstream in(path);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["claim"], "c3");
    EXPECT_TRUE(j["holds"].get<bool>());
    EXPECT_TRUE(j.contains("ms"));
    ++count;
  }
  EXPECT_EQ(count, 6);
}
