#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcert/polyring/eval.hpp"
#include "qcert/polyring/io.hpp"
#include "qcert/polyring/rational_fn.hpp"

using namespace qcert;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

// Brute-force product over machine integers, the test-side oracle for mul.
std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

LaurentPoly from_ll(std::int64_t min_exp, const std::vector<long long>& c) {
  std::vector<Integer> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return LaurentPoly(min_exp, std::move(v));
}

class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  LaurentPoly laurent(int max_len = 8, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> shift(lo, hi);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<Integer> c(static_cast<std::size_t>(len(rng_)));
    for (auto& x : c) x = coef(rng_);
    return LaurentPoly(shift(rng_), std::move(c));
  }

  IntPoly poly(int max_len = 8) { return laurent(max_len, 0, 0).to_int_poly(); }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace

TEST(LaurentPoly, AddCancels) { EXPECT_EQ(P("1 + q") + P("-1"), P("q")); }

TEST(LaurentPoly, ShiftTranslatesExponents) {
  EXPECT_EQ(P("1 + q").shifted(-2), P("q^-2 + q^-1"));
  EXPECT_EQ(P("1 + q").shifted(-2).min_exp(), -2);
}

TEST(LaurentPoly, MulMatchesBruteForceConvolution) {
  const auto expected = from_ll(0, convolve({1, -1}, {1, 1, 1}));
  EXPECT_EQ(P("1 - q") * P("1 + q + q^2"), expected);
  EXPECT_EQ(expected, P("1 - q^3"));

  RandomPolys gen(7);
  std::uniform_int_distribution<long long> coef(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> a(1 + trial % 9), b(1 + (trial * 7) % 11);
    for (auto& x : a) x = coef(gen.rng());
    for (auto& x : b) x = coef(gen.rng());
    EXPECT_EQ(from_ll(-3, a) * from_ll(5, b), from_ll(2, convolve(a, b)));
  }
}

TEST(LaurentPoly, NegAndScalar) {
  EXPECT_EQ(-P("q^-1 - 2*q"), P("-q^-1 + 2*q"));
  EXPECT_EQ(P("q^-1 - 2*q") * Integer(3), P("3*q^-1 - 6*q"));
  EXPECT_TRUE((P("q^-1 - 2*q") * Integer(0)).is_zero());
}

TEST(LaurentPoly, RingAxiomsOnRandomSamples) {
  RandomPolys gen(12345);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen.laurent(), b = gen.laurent(), c = gen.laurent();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(P("1 - q^3"), P("1 - q")), P("1 + q + q^2"));
  const auto p = P("q^-3 + 7*q^2 - q^5");
  EXPECT_EQ(exact_div(p, P("1")), p);
  EXPECT_THROW(exact_div(P("1 - q^2"), P("1 - q^3")), NotDivisible);
  EXPECT_THROW(exact_div(P("q"), LaurentPoly{}), NotDivisible);
}

TEST(ExactDiv, RoundTripsProducts) {
  RandomPolys gen(99);
  for (int i = 0; i < 300; ++i) {
    const auto a = gen.laurent();
    auto b = gen.laurent();
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(PolyRem, Examples) {
  EXPECT_EQ(poly_rem(IntPoly{0, 0, 1}, IntPoly{1, 1, 1}), (IntPoly{-1, -1}));
  EXPECT_EQ(poly_rem(IntPoly{1, 1}, IntPoly{1, 0, 1}), (IntPoly{1, 1}));
  EXPECT_TRUE(poly_rem(IntPoly{-1, 0, 0, 1}, IntPoly{1, 1, 1}).is_zero());
  EXPECT_THROW(poly_rem(IntPoly{1, 2, 3}, IntPoly{1, 2}), NonMonicModulus);
  EXPECT_THROW(poly_rem(IntPoly{1, 2, 3}, IntPoly{5}), NonMonicModulus);
}

TEST(PolyRem, ReconstructsDividend) {
  RandomPolys gen(2024);
  for (int i = 0; i < 300; ++i) {
    const IntPoly p = gen.poly(14);
    IntPoly m = gen.poly(6);
    if (m.degree() < 1) continue;
    std::vector<Integer> mc = m.coeffs();
    mc.back() = 1;
    m = IntPoly(mc);
    const IntPoly r = poly_rem(p, m);
    EXPECT_LT(r.degree(), m.degree());
    auto [quot, rem] = div_rem_integral(p - r, m);
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(quot * m + r, p);
  }
}

TEST(Eval, AtIntegers) {
  EXPECT_EQ(eval_one(IntPoly{1, 1, 1}), 3);
  EXPECT_EQ(eval_one(IntPoly{1, -1, 1}), 1);  // Phi_6(1)
  EXPECT_EQ(eval_int(P("q^-1 + q"), 2), mpq_class(5, 2));
  EXPECT_EQ(eval_int(P("3*q^-2"), -3), mpq_class(1, 3));
  EXPECT_THROW(eval_int(P("q"), 0), InvalidArgument);
}

TEST(Eval, RootsOfUnity) {
  auto near = [](std::complex<double> z, double re, double im, double tol) {
    return std::abs(z.real() - re) < tol && std::abs(z.imag() - im) < tol;
  };
  EXPECT_TRUE(near(eval_root_of_unity(P("q"), 1, 4), 0, 1, 1e-15));
  EXPECT_TRUE(near(eval_root_of_unity(P("1 + q + q^2"), 1, 3), 0, 0, 1e-12));
  EXPECT_TRUE(near(eval_root_of_unity(P("q^-1"), 1, 4), 0, -1, 1e-15));
  EXPECT_THROW(eval_root_of_unity(P("q"), 2, 4), InvalidArgument);
}

TEST(Eval, RootOfUnityIsMultiplicative) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-20, 20);
  std::uniform_int_distribution<int> deg(0, 2000);
  std::uniform_int_distribution<int> nn(1, 60);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Integer> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    const LaurentPoly pa(-7, a), pb(3, b);
    const std::int64_t n = nn(rng);
    std::int64_t m = 1 + trial % n;
    while (std::gcd(m, n) != 1) ++m;
    const auto lhs = eval_root_of_unity(pa * pb, m, n);
    const auto rhs = eval_root_of_unity(pa, m, n) * eval_root_of_unity(pb, m, n);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST(Io, RendersCanonicalText) {
  EXPECT_EQ(to_string(P("1 - q + 2*q^3")), "1 - q + 2*q^3");
  EXPECT_EQ(to_string(P("1 + q^-2")), "q^-2 + 1");
  EXPECT_EQ(to_string(LaurentPoly{}), "0");
  EXPECT_EQ(to_string(P("-q - 1")), "-1 - q");
  EXPECT_EQ(to_string(P("0*q^3 + 5")), "5");
  EXPECT_THROW(parse_laurent("1 + + q"), ParseError);
  EXPECT_THROW(parse_laurent("2q"), ParseError);
  EXPECT_THROW(parse_laurent(""), ParseError);
}

TEST(Io, TextAndJsonRoundTrip) {
  RandomPolys gen(31337);
  for (int i = 0; i < 300; ++i) {
    auto p = gen.laurent(12, -20, 20);
    p = p * LaurentPoly::constant(Integer("123456789012345678901234567890"));
    const std::string text = to_string(p);
    EXPECT_EQ(parse_laurent(text), p);
    EXPECT_EQ(to_string(parse_laurent(text)), text);
    const std::string json = to_json(p).dump();
    EXPECT_EQ(laurent_from_json(nlohmann::json::parse(json)), p);
    EXPECT_EQ(to_json(laurent_from_json(nlohmann::json::parse(json))).dump(), json);
  }
  EXPECT_EQ(to_json(P("q^-2 + 1")).dump(), R"({"min_exp":-2,"coeffs":["1","0","1"]})");
  EXPECT_THROW(laurent_from_json(nlohmann::json::parse(R"({"min_exp":0,"coeffs":["0","1"]})")), ParseError);
  EXPECT_THROW(laurent_from_json(nlohmann::json::parse(R"({"min_exp":0,"coeffs":["x"]})")), ParseError);
}

TEST(Gcd, MatchesKnownFactorizations) {
  // (1 - q^6) and (1 - q^4) share (1 - q^2).
  EXPECT_EQ(gcd(IntPoly::one_minus_q_pow(6), IntPoly::one_minus_q_pow(4)), (IntPoly{-1, 0, 1}));
  EXPECT_EQ(gcd(IntPoly{0, 2}, IntPoly{4}), IntPoly{2});
  EXPECT_EQ(gcd(IntPoly{0, 0, 3}, IntPoly{0, 6, 6}), (IntPoly{0, 3}));
  RandomPolys gen(4);
  for (int i = 0; i < 100; ++i) {
    const IntPoly a = gen.poly(6), b = gen.poly(6), c = gen.poly(4);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const IntPoly g = gcd(a * c, b * c);
    EXPECT_TRUE(div_rem_integral(a * c, g).second.is_zero());
    EXPECT_TRUE(div_rem_integral(b * c, g).second.is_zero());
    EXPECT_TRUE(div_rem_integral(g, primitive_part(c)).second.is_zero());
  }
}

TEST(RationalFn, CanonicalForm) {
  const RationalFn r(P("1 - q^3"), P("1 - q"));
  EXPECT_TRUE(r.is_laurent_poly());
  EXPECT_EQ(r.num(), P("1 + q + q^2"));

  const RationalFn s(P("2*q^-1"), P("-4 - 4*q"));
  EXPECT_EQ(s.num(), P("-q^-1"));
  EXPECT_EQ(s.den(), P("2 + 2*q"));

  EXPECT_EQ(RationalFn(P("0"), P("q + 3")), RationalFn{});
  EXPECT_THROW(RationalFn(P("1"), LaurentPoly{}), NotDivisible);
  // Idempotent.
  EXPECT_EQ(RationalFn(s.num(), s.den()), s);
}

TEST(RationalFn, FieldOperationsAgreeWithCrossMultiplication) {
  RandomPolys gen(77);
  for (int i = 0; i < 150; ++i) {
    const auto a = gen.laurent(5), c = gen.laurent(5);
    auto b = gen.laurent(5), d = gen.laurent(5);
    if (b.is_zero() || d.is_zero()) continue;
    const RationalFn x(a, b), y(c, d);
    const RationalFn sum = x + y, prod = x * y;
    EXPECT_EQ(sum.num() * (b * d), (a * d + c * b) * sum.den());
    EXPECT_EQ(prod.num() * (b * d), (a * c) * prod.den());
    EXPECT_EQ(sum, RationalFn(a * d + c * b, b * d));
    EXPECT_EQ(prod, RationalFn(a * c, b * d));
    EXPECT_TRUE((x - x).is_zero());
  }
}
