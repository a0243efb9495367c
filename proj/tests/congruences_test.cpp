#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qcert/congruences/binomial_lemmas.hpp"
#include "qcert/congruences/catalan_sums.hpp"
#include "qcert/congruences/greene_krammer.hpp"
#include "qcert/congruences/prime_power.hpp"
#include "qcert/congruences/qc1.hpp"

using namespace qcert;

namespace {

void expect_all_hold(const std::vector<CongruenceReport>& reports) {
  for (const auto& r : reports) EXPECT_TRUE(r.holds) << r.claim << " n=" << r.n << " " << r.lhs << " vs " << r.rhs;
}

std::complex<double> at_root(const IntPoly& p, std::int64_t n) { return eval_root_of_unity(LaurentPoly(p), 1, n); }

}  // namespace

TEST(BinomialLemmas, Examples) {
  auto r = check_bc1(3, 2, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "2");
  r = check_bc1(3, 2, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "0");
  r = check_bc1(2, 1, 0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "1");

  r = check_bc2(4, 1);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "1");
  r = check_bc2(4, 2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "0");
  EXPECT_TRUE(check_bc2(2, 3).holds);

  EXPECT_TRUE(check_bc3(5, 2).holds);
  r = check_bc5(4, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "1");
  r = check_bc4(3, 0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "1");
  EXPECT_EQ(r.rhs, "1");

  EXPECT_THROW(check_bc1(1, 1, 0), InvalidArgument);
  EXPECT_THROW(check_bc3(4, 0), InvalidArgument);
}

TEST(BinomialLemmas, RowsHoldAndAgreeWithSingleChecks) {
  for (std::int64_t n = 2; n <= 25; ++n) {
    for (std::int64_t a = 1; a <= 3; ++a) {
      const auto row = check_bc1_row(n, a);
      expect_all_hold(row);
      ASSERT_EQ(row.size(), static_cast<std::size_t>(a * n + 1));
      const auto single = check_bc1(n, a, a * n / 2);
      EXPECT_EQ(row[static_cast<std::size_t>(a * n / 2)].lhs, single.lhs);
    }
    expect_all_hold(check_bc2_row(n));
    const auto r345 = check_bc345_row(n);
    EXPECT_EQ(r345.size(), static_cast<std::size_t>(3 * n - 1));
    expect_all_hold(r345);
    for (const auto& r : r345) {
      const std::int64_t k = r.params[0].value;
      const auto single = r.claim == "bc3" ? check_bc3(n, k) : r.claim == "bc4" ? check_bc4(n, k) : check_bc5(n, k);
      EXPECT_EQ(single.lhs, r.lhs);
      EXPECT_EQ(single.rhs, r.rhs);
    }
  }
}

TEST(BinomialLemmas, NumericOracleAtPrimitiveRoot) {
  // Both sides of bc3 and bc4 evaluated directly at e^{2 pi i / n}.
  for (std::int64_t n = 3; n <= 18; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      const auto z = std::polar(1.0, 2 * M_PI / static_cast<double>(n));
      const double sign = (k % 2) ? -1.0 : 1.0;
      const auto l3 = at_root(q_binomial(2 * k - 1, k), n);
      const auto r3 = sign * std::pow(z, static_cast<double>((3 * k * k - k) / 2)) * at_root(q_binomial(n - k, k), n);
      EXPECT_LT(std::abs(l3 - r3), 1e-6) << n << " " << k;
      const auto l4 = at_root(q_binomial(2 * k, k), n);
      const auto r4 = sign * std::pow(z, static_cast<double>((3 * k * k + k) / 2)) * at_root(q_binomial(n - 1 - k, k), n);
      EXPECT_LT(std::abs(l4 - r4), 1e-6) << n << " " << k;
    }
  }
}

TEST(BinomialLemmas, FractionalPartCriterion) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t m = 0; m <= 60; ++m) {
      const auto r = check_bc_fractional(n, m);
      EXPECT_TRUE(r.holds) << n << " " << m << " " << r.lhs << " vs " << r.rhs;
    }
  }
  EXPECT_EQ(check_bc_fractional(3, 4).rhs, "{2}");
}

TEST(Qc1, Examples) {
  auto r = check_qc1(2, 0);
  EXPECT_TRUE(r.holds);
  // 1 + q + q^2 at q = -1 is 1; -q^3 at q = -1 is 1.
  EXPECT_EQ(r.lhs, "1");
  EXPECT_EQ(r.rhs, "1");
  EXPECT_EQ(qc1_rhs(2, 0), LaurentPoly::monomial(-1, 3));
  EXPECT_TRUE(check_qc1(1, 0).holds);
  EXPECT_TRUE(check_qc1(7, 2).holds);
  EXPECT_THROW(check_qc1(2, 3), InvalidArgument);
}

TEST(Qc1, SweepAgainstSumTable) {
  const auto table = s_sum_table(40, 10);
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t d = -std::min<std::int64_t>(n, 10); d <= std::min<std::int64_t>(n, 10); ++d) {
      const auto r = check_qc1(n, d, table[static_cast<std::size_t>(n)][static_cast<std::size_t>(d + 10)]);
      EXPECT_TRUE(r.holds) << n << " " << d;
    }
  }
}

TEST(PrimePower, BinomialExamples) {
  auto r = check_p_binomial(5, 1, 0);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "4");  // 1 + 2 + 6 + 20 + 70 = 99
  EXPECT_EQ(p_binomial_row(5, 1, 0).sum, 99);
  EXPECT_TRUE(check_p_binomial(3, 2, 1).holds);
  EXPECT_TRUE(check_p_binomial(2, 1, 0).holds);
  EXPECT_THROW(check_p_binomial(4, 1, 0), InvalidArgument);
}

TEST(PrimePower, CatalanExamples) {
  const auto r = check_p_catalan(5, 1);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].claim, "p-catalan");
  EXPECT_EQ(r[0].lhs, "3");  // 1 + 1 + 2 + 5 + 14 = 23
  EXPECT_EQ(r[0].rhs, "3");
  expect_all_hold(r);
  expect_all_hold(check_p_catalan(3, 2));
  expect_all_hold(check_p_catalan(7, 1));
  const auto two = check_p_catalan(2, 3);
  expect_all_hold(two);
  EXPECT_FALSE(two[0].note.empty());
  EXPECT_EQ(p_catalan_row(5, 1).sum, 23);
  EXPECT_EQ(p_catalan_row(5, 1).residue, 3);
}

TEST(PrimePower, Sweep) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    std::int64_t pa = p;
    for (std::int64_t a = 1; pa <= 343; ++a, pa *= p) {
      expect_all_hold(check_p_catalan(p, a));
      const std::int64_t dm = std::min<std::int64_t>(5, pa);
      for (std::int64_t d = -dm; d <= dm; ++d) EXPECT_TRUE(check_p_binomial(p, a, d).holds) << p << " " << a << " " << d;
    }
  }
}

TEST(GreeneKrammer, Examples) {
  EXPECT_TRUE(check_gk(5).holds);
  EXPECT_TRUE(check_gk_numeric(5, 1e-9).holds);
  auto r = check_gk(3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.rhs, "-1");
  r = check_gk(2);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, "-1");

  EXPECT_TRUE(check_dual_numeric(3, 1e-9).holds);
  r = check_dual(4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.rhs, "1");
  EXPECT_TRUE(check_dual(6).holds);
}

TEST(GreeneKrammer, ExactAndNumericAgree) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    const auto g = gk_lhs(n);
    const auto d = dual_lhs(n);
    EXPECT_TRUE(check_gk(n, g).holds) << n;
    EXPECT_TRUE(check_dual(n, d).holds) << n;
    EXPECT_TRUE(check_gk_numeric(n, 1e-6, g).holds) << n;
    EXPECT_TRUE(check_dual_numeric(n, 1e-6, d).holds) << n;
  }
}

TEST(CatalanSums, Examples) {
  auto r = check_c3(3);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.rhs, "q");
  EXPECT_EQ(c3_rhs(2), parse_laurent("-1 - q"));
  EXPECT_TRUE(check_c3(2).holds);
  EXPECT_TRUE(check_c3(1).holds);

  EXPECT_EQ(c5_table_rhs(5), parse_laurent("-q^2 - q^3"));
  for (std::int64_t n : {2, 5, 7}) {
    EXPECT_TRUE(check_c5(n).holds) << n;
    EXPECT_TRUE(check_c5_table(n).holds) << n;
  }

  const auto sums = catalan_partial_sums(15);
  EXPECT_TRUE(check_catalan_root3(3, sums[3].plain).holds);
  EXPECT_TRUE(check_catalan_root3_numeric(3, 1e-9, sums[3].plain).holds);
  EXPECT_TRUE(check_catalan_root5_numeric(5, 1e-9, sums[5].alternating).holds);
  EXPECT_TRUE(check_catalan_root3(15, sums[15].plain).holds);
  EXPECT_TRUE(check_catalan_root5(15, sums[15].alternating).holds);
  EXPECT_THROW(check_catalan_root5(6, sums[6].alternating), InvalidArgument);
}

TEST(CatalanSums, Sweep) {
  const auto sums = catalan_partial_sums(40);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const auto& s = sums[static_cast<std::size_t>(n)];
    EXPECT_TRUE(check_c3(n, s.plain).holds) << n;
    const IntPoly f = c5_fib_sum(n);
    EXPECT_TRUE(check_c5(n, s.alternating, f).holds) << n;
    EXPECT_TRUE(check_c5_table(n, f).holds) << n;
    if (n % 3 == 0) {
      EXPECT_TRUE(check_catalan_root3(n, s.plain).holds) << n;
      if (n <= 30) EXPECT_TRUE(check_catalan_root3_numeric(n, 1e-6, s.plain).holds) << n;
    }
    if (n % 5 == 0) {
      EXPECT_TRUE(check_catalan_root5(n, s.alternating).holds) << n;
      if (n <= 30) EXPECT_TRUE(check_catalan_root5_numeric(n, 1e-6, s.alternating).holds) << n;
    }
  }
}

TEST(Report, JsonShapeAndOrdering) {
  CongruenceReport a = check_bc1(3, 2, 3);
  a.ms = 1.5;
  const auto j = to_json(a);
  EXPECT_EQ(j.dump(), R"({"claim":"bc1","n":3,"params":{"a":2,"k":3},"holds":true,"lhs":"2","rhs":"2","ms":1.5})");
  EXPECT_EQ(to_json(a, false).dump(), R"({"claim":"bc1","n":3,"params":{"a":2,"k":3},"holds":true,"lhs":"2","rhs":"2"})");
  const CongruenceReport b = check_bc1(3, 2, 4);
  EXPECT_TRUE(report_less(a, b));
  EXPECT_FALSE(report_less(b, a));
  EXPECT_TRUE(report_less(check_bc1(3, 2, 4), check_bc2(2, 0)));
}
