#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "arithmos/numbering.hpp"
#include "arithmos/surface.hpp"

using namespace arithmos;
using namespace arithmos::numbering;

namespace {

// All strings over 1..n of length ≤ max_len.
std::vector<Digits> strings(std::uint32_t n, std::size_t max_len) {
  std::vector<Digits> out{{}};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i)
      for (std::uint32_t c = 1; c <= n; ++c) {
        auto s = out[i];
        s.push_back(c);
        out.push_back(std::move(s));
      }
    from = to;
  }
  return out;
}

WffEnumerator& reduced() {
  static WffEnumerator e(Alphabet::reduced());
  return e;
}

}  // namespace

TEST(BijectiveNumbering, Examples) {
  EXPECT_EQ(f_n({}, 3), 0);
  // "ba" with a = 1, b = 2: first character is the least significant digit
  EXPECT_EQ(f_n({2, 1}, 3), 5);
  EXPECT_EQ(g_n({}, 3), GodelNumber(0));
  EXPECT_EQ(g_n({{2, 1}}, 3), GodelNumber(32));
  EXPECT_EQ(g_n({{1}, {1}}, 3), GodelNumber(6));
  EXPECT_EQ(g_n({{1}, {}, {1}}, 3), GodelNumber(10));
  EXPECT_THROW(f_n({4}, 3), Error);
}

TEST(BijectiveNumbering, InjectiveOntoInitialSegment) {
  auto all = strings(3, 6);
  ASSERT_EQ(all.size(), 1093u);
  std::map<Natural, Digits> seen;
  for (const auto& s : all) {
    Natural k = f_n(s, 3);
    EXPECT_TRUE(seen.emplace(k, s).second) << k;
    EXPECT_EQ(f_n_inverse(k, 3), s);
  }
  EXPECT_EQ(seen.begin()->first, 0);
  EXPECT_EQ(seen.rbegin()->first, 1092);
}

TEST(BijectiveNumbering, InverseOnOtherBases) {
  for (std::uint32_t n : {1u, 2u, 9u, 13u})
    for (std::uint64_t k = 0; k < 2000; ++k) EXPECT_EQ(f_n(f_n_inverse(k, n), n), k);
}

TEST(Alphabet, ParseAndReject) {
  EXPECT_EQ(Alphabet::parse("1,3,5,7,9,11,13,17,289").size(), 9u);
  EXPECT_THROW(Alphabet::parse("1,2"), Error);
  EXPECT_THROW(Alphabet::parse("1,1"), Error);
  EXPECT_THROW(Alphabet::parse(""), Error);
}

TEST(WffRecognizer, AgreesWithParser) {
  const Alphabet& a = reduced().alphabet();
  WffRecognizer wff(a);
  for (std::uint64_t k = 0; k < 300000; ++k) {
    auto s = f_n_inverse(k, a.size());
    ASSERT_EQ(wff(s), is_wff_parsed(a, s)) << k;
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(0, 1ull << 40);
    auto s = f_n_inverse(pick(rng), a.size());
    EXPECT_EQ(wff(s), is_wff_parsed(a, s));
  }
}

TEST(Enumeration, StrictlyIncreasingAndRankInverse) {
  auto& e = reduced();
  Natural prev = 0;
  for (std::uint64_t m = 0; m < 200; ++m) {
    Natural v = e.E(m);
    if (m > 0) {
      EXPECT_GT(v, prev) << m;
    }
    EXPECT_EQ(e.rank(f_n_inverse(v, e.alphabet().size())), m);
    prev = v;
  }
  EXPECT_EQ(e.wff_at(0), parse_surface("v1_2(0)"));
}

TEST(Enumeration, MatchesExhaustiveScan) {
  auto& e = reduced();
  std::uint64_t limit = e.E(20).convert_to<std::uint64_t>();
  std::uint64_t m = 0;
  scan_wff_codes(e.alphabet(), limit, [&](std::uint64_t k) {
    EXPECT_EQ(e.E(m), k) << m;
    ++m;
  });
  EXPECT_EQ(m, 21u);
}

TEST(Enumeration, ScanOracleFollowsBound) {
  auto& e = reduced();
  std::optional<Natural> prev;
  for (int m = 0; m < 6; ++m) {
    auto next = next_wff_by_scan(e, prev, Natural(10000000));
    ASSERT_TRUE(next);
    EXPECT_EQ(*next, e.E(m));
    prev = next;
  }
}

TEST(Enumeration, IndexAndFormulaAreInverse) {
  auto& e = reduced();
  for (std::uint64_t m = 0; m < 200; ++m) EXPECT_EQ(e.wff_index(e.wff_at(m)), m);
  for (const char* s : {"v1_2(v1_1)", "~(v1_2(f0))", "ALL v1_1 (v1_2(v1_1))", "(v1_2(0))|(~(v1_2(v1_1)))"}) {
    Formula f = parse_surface(s);
    EXPECT_EQ(e.wff_at(e.wff_index(f)), f) << s;
  }
}

TEST(Enumeration, IndexFollowsNumberingOrder) {
  auto& e = reduced();
  const Alphabet& a = e.alphabet();
  std::vector<Formula> fs;
  for (const char* t : {"v1_2(v1_1)", "~(v1_2(f0))", "ALL v1_1 (v1_2(v1_1))", "(v1_2(0))|(~(v1_2(v1_1)))", "v1_2(fff0)",
                        "~(~(v1_2(0)))", "ALL v1_2 (v1_2(0))", "(v1_2(f0))|(v1_2(0))"})
    fs.push_back(parse_surface(t));
  std::vector<std::pair<Natural, Natural>> rows;  // (number of the string, index)
  for (const auto& f : fs) rows.emplace_back(f_n(*a.digits(flatten(f)), a.size()), e.wff_index(f));
  std::sort(rows.begin(), rows.end());
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].second, rows[i].second);
  for (const auto& r : rows) EXPECT_EQ(e.E(r.second), r.first);
}

TEST(Enumeration, CountsMatchScan) {
  auto& e = reduced();
  const Alphabet& a = e.alphabet();
  std::map<std::size_t, Natural> by_len;
  for (std::uint64_t k = 0; k < 600000; ++k) {
    auto s = f_n_inverse(k, a.size());
    if (s.size() > 6) break;
    if (is_wff(a, s)) by_len[s.size()] += 1;
  }
  for (std::size_t len = 1; len <= 6; ++len) EXPECT_EQ(e.count(len), by_len[len]) << len;
}
