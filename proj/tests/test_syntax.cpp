#include <gtest/gtest.h>

#include <set>

#include "arithmos/codec.hpp"
#include "arithmos/relations/fast.hpp"
#include "arithmos/surface.hpp"

using namespace arithmos;

namespace {

const Variable x1{1, 1}, x2{2, 1}, A{1, 2};

Formula e() { return Formula::elem(A, Sign::var(x1)); }

std::vector<std::uint64_t> flat(const Formula& f) { return flatten(f).codes(); }

// Every formula of depth ≤ d over the atoms A(0), A(v1_1) and binders v1_1, v1_2.
std::vector<Formula> corpus(int depth) {
  std::vector<Formula> all{Formula::elem(A, Sign::zero()), e()};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Formula> next{all[0], all[1]};
    for (const auto& f : all) {
      next.push_back(Formula::neg(f));
      next.push_back(Formula::gen(x1, f));
      next.push_back(Formula::gen(A, f));
      for (const auto& g : all) next.push_back(Formula::dis(f, g));
    }
    all.swap(next);
  }
  return all;
}

}  // namespace

TEST(SymbolTable, PrimitiveCodesAndVariables) {
  EXPECT_EQ(sym::zero, 1u);
  EXPECT_EQ(sym::succ, 3u);
  EXPECT_EQ(sym::neg, 5u);
  EXPECT_EQ(sym::dis, 7u);
  EXPECT_EQ(sym::gen, 9u);
  EXPECT_EQ(sym::lpar, 11u);
  EXPECT_EQ(sym::rpar, 13u);
  EXPECT_EQ((Variable{1, 1}.code()), 17u);
  EXPECT_EQ((Variable{2, 1}.code()), 19u);
  EXPECT_EQ((Variable{3, 1}.code()), 23u);
  EXPECT_EQ((Variable{1, 2}.code()), 289u);
  EXPECT_EQ((Variable{2, 3}.code()), 19u * 19 * 19);
  for (std::uint64_t c = 1; c < 5000; ++c) {
    auto v = Variable::from_code(c);
    if (v) {
      EXPECT_EQ(v->code(), c);
    }
  }
  EXPECT_FALSE(Variable::from_code(13));
  EXPECT_FALSE(Variable::from_code(15));
  EXPECT_FALSE(Variable::from_code(17 * 19));
}

TEST(Flatten, CanonicalShapes) {
  EXPECT_EQ(flat(e()), (std::vector<std::uint64_t>{289, 11, 17, 13}));
  EXPECT_EQ(flat(Formula::neg(e())), (std::vector<std::uint64_t>{5, 11, 289, 11, 17, 13, 13}));
  std::vector<std::uint64_t> g{17, 9, 11, 289, 11, 17, 13, 13};
  EXPECT_EQ(flat(Formula::gen(x1, e())), g);
  std::vector<std::uint64_t> d{11, 289, 11, 17, 13, 13, 7, 11, 289, 11, 1, 13, 13};
  EXPECT_EQ(flat(Formula::dis(e(), Formula::elem(A, Sign::zero()))), d);
  EXPECT_EQ(flat(Formula::elem(A, Sign::numeral(2))), (std::vector<std::uint64_t>{289, 11, 3, 3, 1, 13}));
}

TEST(Flatten, ElementaryTyping) {
  EXPECT_THROW(Formula::elem(Variable{1, 1}, Sign::var(Variable{1, 2})), Error);
  EXPECT_THROW(Formula::elem(Variable{1, 3}, Sign::zero()), Error);
  EXPECT_NO_THROW(Formula::elem(Variable{1, 3}, Sign::var(Variable{2, 2})));
}

TEST(ParseSymbols, InverseOfFlatten) {
  EXPECT_EQ(parse_symbols(SymbolString{289, 11, 17, 13}), e());
  EXPECT_THROW(parse_symbols(SymbolString{}), NotWellFormed);
  EXPECT_THROW(parse_symbols(SymbolString{5, 289}), NotWellFormed);
  EXPECT_THROW(parse_symbols(SymbolString{289, 11, 17, 13, 13}), NotWellFormed);
  EXPECT_THROW(parse_symbols(SymbolString{17, 11, 1, 13}), NotWellFormed);
  EXPECT_THROW(parse_symbols(SymbolString{289, 11, 3, 289, 13}), NotWellFormed);
}

TEST(ParseSymbols, ReportsFailurePosition) {
  try {
    parse_symbols(SymbolString{5, 11, 289, 11, 17, 13, 7});
    FAIL();
  } catch (const NotWellFormed& err) {
    EXPECT_GT(err.position, 0u);
  }
}

TEST(Surface, Examples) {
  EXPECT_EQ(parse_surface("~(v1_2(v1_1))"), Formula::neg(e()));
  EXPECT_EQ(parse_surface("ALL v1_1 ((v1_2(v1_1))|(v1_2(v1_1)))"), Formula::gen(x1, Formula::dis(e(), e())));
  EXPECT_THROW(parse_surface("v1_1(v1_2)"), SyntaxError);
  EXPECT_THROW(parse_surface("~v1_2(v1_1)"), SyntaxError);
  EXPECT_THROW(parse_surface("(v1_2(v1_1))|"), SyntaxError);
  EXPECT_EQ(parse_surface("  v1_2 ( f f 0 ) "), Formula::elem(A, Sign::numeral(2)));
}

TEST(Surface, SugarDesugars) {
  Formula a = e(), b = Formula::elem(A, Sign::zero());
  EXPECT_EQ(parse_surface("(v1_2(v1_1)) -> (v1_2(0))"), Formula::dis(Formula::neg(a), b));
  EXPECT_EQ(parse_surface("(v1_2(v1_1)) & (v1_2(0))"),
            Formula::neg(Formula::dis(Formula::neg(a), Formula::neg(b))));
  EXPECT_EQ(parse_surface("EX v1_1 (v1_2(v1_1))"), Formula::neg(Formula::gen(x1, Formula::neg(a))));
  EXPECT_EQ(parse_surface("(v1_2(v1_1)) <-> (v1_2(0))"), equiv(a, b));
}

TEST(Surface, PrintParseRoundTripOnCorpus) {
  for (const auto& f : corpus(2)) {
    std::string s = print_surface(f);
    EXPECT_EQ(parse_surface(s), f) << s;
    EXPECT_EQ(print_surface(parse_surface(s)), s);
  }
}

TEST(Corpus, RoundTripInjectiveAndRecognized) {
  auto all = corpus(3);
  ASSERT_GT(all.size(), 1000u);
  std::set<std::vector<std::uint64_t>> flats;
  for (const auto& f : all) {
    SymbolString s = flatten(f);
    ASSERT_EQ(parse_symbols(s), f);
    flats.insert(s.codes());
    EXPECT_TRUE(rel::is_formula(encode_formula(f)));
  }
  // distinct ASTs never share a flat string
  std::set<std::string> asts;
  for (const auto& f : all) asts.insert(print_surface(f));
  EXPECT_EQ(flats.size(), asts.size());
}

TEST(Corpus, TruncationsAreRejectedByBothRecognizers) {
  for (const auto& f : corpus(2)) {
    auto c = flat(f);
    for (std::size_t cut = 0; cut < c.size(); ++cut) {
      SymbolString s(std::vector<std::uint64_t>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cut)));
      bool parsed = try_parse_symbols(s).has_value();
      EXPECT_EQ(parsed, rel::is_formula(encode_symbols(s))) << print_surface(f) << " cut " << cut;
    }
  }
}

TEST(Substitution, Examples) {
  Formula f0 = Formula::elem(A, Sign::numeral(1));
  EXPECT_EQ(substitute_sym(e(), x1, Sign::numeral(1)), f0);
  Formula g = Formula::gen(x1, e());
  EXPECT_EQ(substitute_sym(g, x1, Sign::zero()), g);
  // v1_1 would be captured by the binder
  Formula h = Formula::gen(x1, Formula::dis(Formula::elem(A, Sign::var(x2)), e()));
  EXPECT_THROW(substitute_sym(h, x2, Sign::var(x1)), CaptureError);
  EXPECT_NO_THROW(substitute_sym(h, x2, Sign{2, x2}));
  // wrong type
  EXPECT_THROW(substitute_sym(e(), A, Sign::zero()), Error);
}

TEST(Substitution, IdempotentWhenTermAvoidsVariable) {
  for (const auto& f : corpus(2)) {
    for (const Sign& t : {Sign::zero(), Sign::numeral(3), Sign::var(x2)}) {
      Formula once = substitute_sym(f, x1, t);
      EXPECT_EQ(substitute_sym(once, x1, t), once);
      EXPECT_TRUE(free_positions(once, x1).empty());
    }
  }
}

TEST(Occurrences, Examples) {
  EXPECT_EQ(free_positions(e(), x1), std::vector<Natural>{3});
  EXPECT_TRUE(free_positions(Formula::gen(x1, e()), x1).empty());
  EXPECT_TRUE(bound_at(Formula::gen(x1, e()), x1, 1));
  EXPECT_TRUE(bound_at(Formula::gen(x1, e()), x1, 6));
  EXPECT_FALSE(free_at(Formula::gen(x1, e()), x1, 6));
  EXPECT_EQ(free_variables(e()), (std::set<Variable>{x1, A}));
}

TEST(Occurrences, FreeAndBoundPartitionOccurrences) {
  for (const auto& f : corpus(3)) {
    auto c = flat(f);
    for (const Variable& v : {x1, A}) {
      std::set<Natural> occ;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] == v.code()) occ.insert(i + 1);
      auto fr = free_positions(f, v);
      auto bd = bound_occurrences(f, v);
      std::set<Natural> both(fr.begin(), fr.end());
      for (const auto& b : bd) EXPECT_TRUE(both.insert(b).second) << "free and bound at " << b;
      EXPECT_EQ(both, occ);
    }
  }
}

TEST(TypeElevation, Examples) {
  EXPECT_EQ(type_elevate_sym(e(), 1), Formula::elem(Variable{1, 3}, Sign::var(Variable{1, 2})));
  for (const auto& f : corpus(2)) {
    EXPECT_EQ(type_elevate_sym(f, 0), f);
    if (print_surface(f).find('0') != std::string::npos) continue;  // the sign 0 has no higher type
    EXPECT_EQ(type_elevate_sym(type_elevate_sym(f, 1), 2), type_elevate_sym(f, 3));
  }
  // a numeral's f would have to become a type-2 successor
  EXPECT_THROW(type_elevate_sym(Formula::elem(A, Sign::numeral(1)), 1), NotWellFormed);
}
