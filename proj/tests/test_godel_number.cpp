#include <gtest/gtest.h>

#include <random>

#include "arithmos/godel_text.hpp"

using namespace arithmos;

namespace {

// Test-side oracle: exponents of 2, 3, 5, ... by plain trial division.
std::vector<std::uint64_t> exponents(Natural x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; x > 1; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    std::uint64_t e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    out.push_back(e);
  }
  return out;
}

Natural product(const std::vector<std::uint64_t>& ex) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  Natural v = 1;
  for (std::size_t i = 0; i < ex.size(); ++i) v *= pow_nat(primes[i], ex[i]);
  return v;
}

}  // namespace

TEST(GodelNumber, SequenceValueMatchesDirectProduct) {
  EXPECT_EQ(GodelNumber::from_codes({11, 1, 13}).value(), Natural("7500000000000"));
  EXPECT_EQ(GodelNumber::from_codes({5}).value(), 32);
  EXPECT_EQ(GodelNumber::from_codes({}).value(), 1);
  EXPECT_TRUE(GodelNumber::empty_sequence().is_empty_sequence());
}

TEST(GodelNumber, PlainAndSequenceFormsAreOneValue) {
  for (std::uint64_t v = 0; v < 3000; ++v) {
    GodelNumber g(v);
    auto ex = exponents(v);
    bool gapless = v >= 1;
    for (auto e : ex) gapless = gapless && e > 0;
    EXPECT_EQ(g.is_sequence(), gapless) << v;
    if (gapless) {
      std::vector<std::uint64_t> codes(ex.begin(), ex.end());
      EXPECT_EQ(GodelNumber::from_codes(codes), g) << v;
      EXPECT_EQ(g.seq_length(), ex.size());
      EXPECT_EQ(GodelNumber::from_codes(codes).hash(), g.hash());
    }
    EXPECT_EQ(g.value(), v);
  }
}

TEST(GodelNumber, OrderingAgreesWithValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(0, 6), ex(1, 40);
  for (int i = 0; i < 3000; ++i) {
    std::vector<std::uint64_t> a(len(rng)), b(len(rng));
    for (auto& x : a) x = ex(rng);
    for (auto& x : b) x = ex(rng);
    Natural va = product(a), vb = product(b);
    auto got = GodelNumber::from_codes(a) <=> GodelNumber::from_codes(b);
    EXPECT_EQ(got, compare_nat(va, vb));
  }
}

TEST(GodelNumber, NearTiesNeedExactLogarithms) {
  // 2^a 3^b against 2^c 3^d with a log ratio close to 1; values are ~2^4000
  const std::uint64_t pairs[][4] = {{4000, 1, 3998, 2}, {2400, 1000, 2401, 999}, {665, 2100, 3994, 1}};
  for (auto& p : pairs) {
    GodelNumber x = GodelNumber::from_codes({p[0], p[1]}), y = GodelNumber::from_codes({p[2], p[3]});
    EXPECT_EQ(x <=> y, compare_nat(x.value(), y.value()));
    EXPECT_EQ(y <=> x, compare_nat(y.value(), x.value()));
  }
}

TEST(GodelNumber, NestedCodesOrderWithoutMaterializing) {
  GodelNumber small = GodelNumber::from_codes({289, 11, 17, 13});
  GodelNumber big = GodelNumber::from_codes({289, 11, 19, 13});
  GodelNumber as = GodelNumber::from_terms({small}), ab = GodelNumber::from_terms({big});
  EXPECT_FALSE(as.materializable());
  EXPECT_LT(as, ab);
  EXPECT_LT(as, GodelNumber::from_terms({small, small}));
  EXPECT_LT(GodelNumber::from_terms({small, small}), ab);
  EXPECT_EQ(GodelNumber::from_terms({small}), GodelNumber::from_terms({GodelNumber(small.value())}));
  EXPECT_THROW(as.value(), TooLarge);
}

TEST(GodelNumber, RunsMergeAndNormalize) {
  GodelNumber g = GodelNumber::sequence({{3, 2}, {3, 1}, {5, 0}, {7, 4}});
  ASSERT_EQ(g.runs().size(), 2u);
  EXPECT_EQ(g.runs()[0].count, 3);
  EXPECT_EQ(g.seq_length(), 7);
  EXPECT_EQ(g, GodelNumber::from_codes({3, 3, 3, 7, 7, 7, 7}));
  // a run of 10^30 copies of 1 has a value no one can print, but a length
  GodelNumber huge = GodelNumber::sequence({{1, Natural("1000000000000000000000000000000")}});
  EXPECT_EQ(huge.seq_length(), Natural("1000000000000000000000000000000"));
  EXPECT_LT(GodelNumber::sequence({{1, 5}}), huge);
}

TEST(GodelText, FactoredAndDecimalRoundTrip) {
  for (std::uint64_t v : std::vector<std::uint64_t>{0, 1, 2, 10, 1944, 999999, 1000001, 7500000000000}) {
    GodelNumber g(v);
    EXPECT_EQ(parse_godel(format_decimal(g)), g);
    EXPECT_EQ(parse_godel(format_factored(g)), g);
    EXPECT_EQ(parse_godel(format_auto(g)), g);
  }
  EXPECT_EQ(format_factored(GodelNumber::from_codes({289, 11, 17, 13})), "2^289 * 3^11 * 5^17 * 7^13");
  EXPECT_EQ(format_auto(GodelNumber(1000000)), "1000000");
  EXPECT_EQ(format_auto(GodelNumber(std::uint64_t{7500000000000})), "2^11 * 3^1 * 5^13");
}

TEST(GodelText, SymbolicRunsRoundTrip) {
  GodelNumber inner = GodelNumber::from_codes({289, 11, 17, 13});
  GodelNumber g = GodelNumber::sequence({{3, Natural("123456789012345678901234567890")}, {1, 1}, {inner, 2}});
  std::string text = format_factored(g);
  EXPECT_EQ(parse_godel(text), g) << text;
}

TEST(GodelText, RejectsMalformedText) {
  for (const char* bad : {"", "2^", "3^1 * 2^1", "2 ** 3", "x", "2^1 * 2^1"})
    EXPECT_THROW(parse_godel(bad), SyntaxError) << bad;
}
