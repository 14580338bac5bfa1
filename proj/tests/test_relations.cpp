#include <gtest/gtest.h>

#include <set>

#include "arithmos/relations/registry.hpp"
#include "arithmos/proof/search.hpp"

using namespace arithmos;

namespace {

rel::Value fast(const std::string& key, const rel::Args& args) { return rel::eval(key, args, rel::EvalMode::Fast); }

std::uint64_t nth_prime_oracle(std::uint64_t n) {
  std::uint64_t seen = 0;
  for (std::uint64_t p = 2;; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime && ++seen == n) return p;
  }
}

// Prime-exponent list of x > 0 (exponent 0 marks a gap).
std::vector<std::uint64_t> exps(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; x > 1; ++i) {
    std::uint64_t p = nth_prime_oracle(i), e = 0;
    while (x % p == 0) x /= p, ++e;
    out.push_back(e);
  }
  return out;
}

std::vector<Formula> formula_corpus() {
  std::vector<Formula> out;
  for (const char* s : {"v1_2(v1_1)", "v1_2(0)", "v1_2(ff0)", "~(v1_2(v1_1))", "ALL v1_1 (v1_2(v1_1))",
                        "(v1_2(v1_1))|(v2_2(v2_1))", "ALL v2_1 ((v1_2(v1_1))|(v1_2(v2_1)))",
                        "(ALL v1_1 (v1_2(v1_1)))|(v1_2(fv1_1))", "ALL v1_2 (~(v1_2(v1_1)))", "v1_3(v1_2)",
                        "ALL v1_1 (ALL v2_1 ((v1_2(v1_1))|(~(v1_2(v2_1)))))", "(v1_2(v1_1)) -> (EX v2_1 (v1_2(v2_1)))"})
    out.push_back(parse_surface(s));
  return out;
}

const Variable x1{1, 1}, x2{2, 1};

}  // namespace

TEST(MuBounded, Examples) {
  EXPECT_EQ(rel::mu_bounded(10, [](const Natural& y) { return y * y == 9; }), 3);
  EXPECT_EQ(rel::mu_bounded(10, [](const Natural& y) { return y * y == 11; }), 0);
  EXPECT_EQ(rel::mu_bounded(0, [](const Natural&) { return true; }), 0);
}

TEST(FastRelations, Examples) {
  EXPECT_EQ(fast("Len", {1944}).number, GodelNumber(2));
  EXPECT_EQ(fast("TermOf", {2, 1944}).number, GodelNumber(5));
  EXPECT_EQ(fast("Num", {1}).number, GodelNumber(24));
  EXPECT_EQ(fast("NthPrime", {7}).number, GodelNumber(17));
  EXPECT_FALSE(fast("IsPrime", {1}).truth());
  EXPECT_FALSE(rel::eval("IsPrime", {1}, rel::EvalMode::Literal).truth());
  EXPECT_EQ(fast("Concat", {8, 32}).number, GodelNumber(1944));
  EXPECT_EQ(rel::eval("8", {8, 32}, rel::EvalMode::Literal).number, GodelNumber(1944));
  EXPECT_EQ(fast("Factorial", {5}).number, GodelNumber(120));
  EXPECT_EQ(fast("Sym", {5}).number, GodelNumber(32));
  EXPECT_EQ(fast("Paren", {8}).number, GodelNumber::from_codes({11, 3, 13}));
  EXPECT_TRUE(fast("VarOfType", {2, 289}).truth());
  EXPECT_FALSE(fast("VarOfType", {1, 289}).truth());
  EXPECT_TRUE(fast("Divides", {12, 4}).truth());
  EXPECT_FALSE(fast("Divides", {4, 12}).truth());
}

TEST(FastRelations, NumberTheoryAgainstOracle) {
  for (std::uint64_t x = 0; x <= 400; ++x) {
    bool prime = x > 1;
    for (std::uint64_t d = 2; d * d <= x; ++d)
      if (x % d == 0) prime = false;
    EXPECT_EQ(fast("2", {x}).truth(), prime) << x;
    if (x == 0) continue;
    auto e = exps(x);
    EXPECT_EQ(fast("7", {x}).number, GodelNumber(static_cast<std::uint64_t>(std::count_if(e.begin(), e.end(), [](auto v) { return v > 0; }))));
    // n PrimeOf x: the n-th prime dividing x, in increasing order
    std::vector<std::uint64_t> divs;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) divs.push_back(nth_prime_oracle(i + 1));
    for (std::uint64_t n = 1; n <= divs.size(); ++n) {
      EXPECT_EQ(fast("3", {n, x}).number, GodelNumber(divs[n - 1]));
      std::uint64_t k = 0, y = x;
      while (y % divs[n - 1] == 0) y /= divs[n - 1], ++k;
      EXPECT_EQ(fast("6", {n, x}).number, GodelNumber(k));
    }
  }
  for (std::uint64_t n = 1; n < 60; ++n) EXPECT_EQ(fast("5", {n}).number, GodelNumber(nth_prime_oracle(n)));
}

TEST(FastRelations, SequenceLaws) {
  std::vector<GodelNumber> micro;
  for (std::uint64_t x = 1; x < 3000; ++x)
    if (GodelNumber(x).is_sequence()) micro.push_back(x);
  micro.push_back(GodelNumber::from_codes({289, 11, 17, 13}));
  for (const auto& x : micro) {
    for (const auto& y : {GodelNumber(8), GodelNumber(1944), GodelNumber::from_codes({5, 11})}) {
      GodelNumber c = rel::concat(x, y);
      Natural lx = rel::len(x);
      EXPECT_EQ(rel::len(c), lx + rel::len(y));
      for (Natural i = 1; i <= rel::len(c); ++i)
        EXPECT_EQ(rel::term_of(i, c), i <= lx ? rel::term_of(i, x) : rel::term_of(i - lx, y));
    }
  }
  for (std::uint64_t a = 1; a < 300; ++a) {
    GodelNumber s = rel::sym_of(a);
    EXPECT_EQ(rel::len(s), 1);
    EXPECT_EQ(rel::term_of(1, s), GodelNumber(a));
  }
}

TEST(FastRelations, IsFormulaMatchesParserOnShortSequences) {
  const std::uint64_t alpha[] = {1, 3, 5, 7, 9, 11, 13, 17, 289};
  std::vector<std::vector<std::uint64_t>> layer{{}};
  std::size_t checked = 0;
  for (int len = 1; len <= 5; ++len) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& s : layer)
      for (auto c : alpha) {
        auto t = s;
        t.push_back(c);
        bool parsed = try_parse_symbols(SymbolString(t)).has_value();
        ASSERT_EQ(rel::is_formula(GodelNumber::from_codes(t)), parsed);
        ++checked;
        next.push_back(std::move(t));
      }
    layer.swap(next);
  }
  EXPECT_EQ(checked, 66429u);
}

TEST(FastRelations, SubstitutionAgreesWithSymbolic) {
  for (const auto& f : formula_corpus()) {
    GodelNumber code = encode_formula(f);
    for (const Variable& v : {x1, x2}) {
      EXPECT_EQ(rel::num_free(GodelNumber(v.code()), code), free_positions(f, v).size());
      for (const Sign& t : {Sign::zero(), Sign::numeral(2), Sign{1, x2}}) {
        Formula symbolic = f;
        bool captured = false;
        try {
          symbolic = substitute_sym(f, v, t);
        } catch (const CaptureError&) {
          captured = true;
        }
        if (captured) continue;
        EXPECT_EQ(rel::sub(code, GodelNumber(v.code()), encode_sign(t)), encode_formula(symbolic)) << print_surface(f);
      }
    }
  }
}

TEST(FastRelations, TypeElevationAgreesWithSymbolic) {
  for (const auto& f : formula_corpus()) {
    for (std::uint32_t n : {0u, 1u, 3u}) {
      std::optional<Formula> lifted;
      try {
        lifted = type_elevate_sym(f, n);
      } catch (const NotWellFormed&) {
      }
      GodelNumber got = rel::type_elev(n, encode_formula(f));
      if (lifted) {
        EXPECT_EQ(got, encode_formula(*lifted));
      } else {
        // elevating a numeral leaves a string that is no formula
        EXPECT_FALSE(rel::is_formula(got));
      }
    }
  }
}

TEST(FastRelations, DerivedConnectives) {
  GodelNumber a = encode_formula(parse_surface("v1_2(v1_1)")), b = encode_formula(parse_surface("v1_2(0)"));
  EXPECT_EQ(fast("32a", {a, b}).number, encode_formula(parse_surface("(v1_2(v1_1)) -> (v1_2(0))")));
  EXPECT_EQ(fast("32b", {a, b}).number, encode_formula(parse_surface("(v1_2(v1_1)) & (v1_2(0))")));
  EXPECT_EQ(fast("32d", {17, a}).number, encode_formula(parse_surface("EX v1_1 (v1_2(v1_1))")));
  EXPECT_EQ(fast("32c", {a, b}).number, encode_formula(parse_surface("(v1_2(v1_1)) <-> (v1_2(0))")));
}

TEST(Registry, EveryNumberOnce) {
  std::set<std::string> numbers;
  for (const auto& r : rel::registry()) EXPECT_TRUE(numbers.insert(r.number).second) << r.number;
  EXPECT_EQ(numbers.size(), 52u);  // 1-46 with 32a-d and 35a-d
  for (int i = 1; i <= 46; ++i) {
    if (i == 32 || i == 35) continue;
    EXPECT_TRUE(numbers.count(std::to_string(i))) << i;
  }
  EXPECT_EQ(rel::find_relation("len"), rel::find_relation("7"));
  EXPECT_EQ(rel::find_relation("35c")->name, "A3Ax");
  EXPECT_EQ(rel::find_relation("32"), nullptr);
}

TEST(Registry, ArityAndUnboundedRelation) {
  EXPECT_THROW(fast("Len", {1, 2}), ArityError);
  EXPECT_THROW(fast("46", {1}), Error);
  EXPECT_THROW(fast("nope", {}), Error);
  EXPECT_EQ(rel::find_relation("ProofOf")->arity(), 2u);
  EXPECT_EQ(rel::find_relation("Sub")->result, rel::ResultKind::Number);
}

TEST(ProvSearch, AxiomHasOneLineWitness) {
  Formula a = parse_surface("((v1_2(v1_1)) | (v1_2(v1_1))) -> (v1_2(v1_1))");
  auto r = proof::prov_search(encode_formula(a), proof::SearchBudget::candidates(500));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.witness, encode_proof({a}));
  EXPECT_EQ(r.proof.size(), 1u);
  EXPECT_EQ(r.examined, 1u);
}

TEST(ProvSearch, ZeroBudgetAndBadTarget) {
  GodelNumber e = encode_formula(parse_surface("v1_2(v1_1)"));
  auto r = proof::prov_search(e, proof::SearchBudget::candidates(0));
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.stop, proof::SearchResult::Stop::Candidates);
  EXPECT_EQ(r.examined, 0u);
  EXPECT_THROW(proof::prov_search(GodelNumber(10), proof::SearchBudget::candidates(1)), NotAFormulaCode);
  EXPECT_THROW(proof::prov_search(e, proof::SearchBudget{}), Error);
}

TEST(ProvSearch, ResumesAndStaysStable) {
  Formula a = parse_surface("((v1_2(v1_1)) | (v1_2(v1_1))) -> (v1_2(v1_1))");
  Formula ga = Formula::gen(x1, a);
  GodelNumber target = encode_formula(ga);
  auto whole = proof::prov_search(target, proof::SearchBudget::candidates(1000));
  ASSERT_TRUE(whole.found());
  EXPECT_EQ(whole.proof.size(), 2u);
  proof::ProvSearch s(ga, proof::AxiomSet::standard());
  std::uint64_t last = 0;
  proof::SearchResult step;
  for (std::uint64_t b = 1; !step.found(); ++b) {
    step = s.run(proof::SearchBudget::candidates(b));
    EXPECT_GE(step.examined, last);
    last = step.examined;
  }
  EXPECT_EQ(*step.witness, *whole.witness);
  EXPECT_EQ(step.examined, whole.examined);
  // larger budgets, code budgets: same witness
  for (std::uint64_t b : {whole.examined, whole.examined + 10, std::uint64_t{100000}})
    EXPECT_EQ(*proof::prov_search(target, proof::SearchBudget::candidates(b)).witness, *whole.witness);
  EXPECT_EQ(*proof::prov_search(target, proof::SearchBudget::code(*whole.witness)).witness, *whole.witness);
  EXPECT_FALSE(proof::prov_search(target, proof::SearchBudget::candidates(whole.examined - 1)).found());
}

TEST(ProvSearch, CancellationReportsFrontier) {
  GodelNumber e = encode_formula(parse_surface("v1_2(v1_1)"));
  std::stop_source src;
  src.request_stop();
  auto r = proof::prov_search(e, proof::SearchBudget::candidates(100), proof::AxiomSet::standard(), {}, src.get_token());
  EXPECT_EQ(r.stop, proof::SearchResult::Stop::Cancelled);
  ASSERT_TRUE(r.frontier);
  EXPECT_EQ(r.examined, 0u);
}
