#pragma once

#include <functional>

#include "arithmos/proof/checker.hpp"
#include "arithmos/proof/literal.hpp"

// Table of all relations, addressable by number ("7", "32a", "35c") or name,
// with a single eval entry point for both modes.

namespace arithmos::rel {

enum class EvalMode { Literal, Fast };
enum class ResultKind { Number, Boolean };

struct Value {
  ResultKind kind = ResultKind::Number;
  GodelNumber number;  // 0/1 for booleans
  bool truth() const { return !number.is_zero(); }

  static Value of(GodelNumber g) { return {ResultKind::Number, std::move(g)}; }
  static Value of(const Natural& n) { return {ResultKind::Number, GodelNumber(n)}; }
  static Value of(bool b) { return {ResultKind::Boolean, GodelNumber(Natural(b ? 1 : 0))}; }
};

using Args = std::vector<GodelNumber>;

struct EvalContext {
  WorkCounter* work = nullptr;  // literal mode; a fresh counter when null
  const proof::AxiomSet* axioms = nullptr;  // relations 42, 44, 45; standard when null
};

struct RelationInfo {
  std::string number;
  std::string name;
  std::vector<std::string> params;
  ResultKind result;
  std::function<Value(const Args&, const proof::AxiomSet&)> fast;
  std::function<Value(const Args&, const proof::AxiomSet&, WorkCounter&)> literal;  // empty: search only

  std::size_t arity() const { return params.size(); }
};

namespace detail {

inline Natural nat(const GodelNumber& g) { return g.value(); }

inline std::vector<RelationInfo> build_registry() {
  using A = const Args&;
  using X = const proof::AxiomSet&;
  using W = WorkCounter&;
  using B = ResultKind;
  std::vector<RelationInfo> r;
  auto add = [&](std::string num, std::string name, std::vector<std::string> params, ResultKind k, auto fast, auto literal) {
    r.push_back({std::move(num), std::move(name), std::move(params), k, fast, literal});
  };
  // clang-format off
  add("1", "Divides", {"x", "y"}, B::Boolean,
      [](A a, X) { return Value::of(divides(a[0], a[1])); },
      [](A a, X, W w) { return Value::of(lit::divides(a[0], a[1], w)); });
  add("2", "IsPrime", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(is_prime_rel(a[0])); },
      [](A a, X, W w) { return Value::of(lit::is_prime_rel(a[0], w)); });
  add("3", "NthPrimeOf", {"n", "x"}, B::Number,
      [](A a, X) { return Value::of(prime_of(nat(a[0]), a[1])); },
      [](A a, X, W w) { return Value::of(lit::prime_of(nat(a[0]), a[1], w)); });
  add("4", "Factorial", {"n"}, B::Number,
      [](A a, X) { return Value::of(factorial(nat(a[0]))); },
      [](A a, X, W w) { return Value::of(lit::factorial(nat(a[0]), w)); });
  add("5", "NthPrime", {"n"}, B::Number,
      [](A a, X) { return Value::of(nth_prime_rel(nat(a[0]))); },
      [](A a, X, W w) { return Value::of(lit::nth_prime_rel(nat(a[0]), w)); });
  add("6", "TermOf", {"n", "x"}, B::Number,
      [](A a, X) { return Value::of(term_of(nat(a[0]), a[1])); },
      [](A a, X, W w) { return Value::of(lit::term_of(nat(a[0]), a[1], w)); });
  add("7", "Len", {"x"}, B::Number,
      [](A a, X) { return Value::of(len(a[0])); },
      [](A a, X, W w) { return Value::of(lit::len(a[0], w)); });
  add("8", "Concat", {"x", "y"}, B::Number,
      [](A a, X) { return Value::of(concat(a[0], a[1])); },
      [](A a, X, W w) { return Value::of(lit::concat(a[0], a[1], w)); });
  add("9", "Sym", {"x"}, B::Number,
      [](A a, X) { return Value::of(sym_of(a[0])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::sym_of(a[0])); });
  add("10", "Paren", {"x"}, B::Number,
      [](A a, X) { return Value::of(paren(a[0])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::paren(a[0])); });
  add("11", "VarOfType", {"n", "x"}, B::Boolean,
      [](A a, X) { return Value::of(var_of_type(nat(a[0]), a[1])); },
      [](A a, X, W w) { return Value::of(lit::var_of_type(nat(a[0]), a[1], w)); });
  add("12", "IsVar", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(is_var(a[0])); },
      [](A a, X, W w) { return Value::of(lit::is_var(a[0], w)); });
  add("13", "NegC", {"x"}, B::Number,
      [](A a, X) { return Value::of(neg_c(a[0])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::neg_c(a[0])); });
  add("14", "DisC", {"x", "y"}, B::Number,
      [](A a, X) { return Value::of(dis_c(a[0], a[1])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::dis_c(a[0], a[1])); });
  add("15", "GenC", {"x", "y"}, B::Number,
      [](A a, X) { return Value::of(gen_c(a[0], a[1])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::gen_c(a[0], a[1])); });
  add("16", "IterSucc", {"n", "x"}, B::Number,
      [](A a, X) { return Value::of(iter_succ(nat(a[0]), a[1])); },
      [](A a, X, W w) { return Value::of(lit::iter_succ(nat(a[0]), a[1], w)); });
  add("17", "Num", {"n"}, B::Number,
      [](A a, X) { return Value::of(num(nat(a[0]))); },
      [](A a, X, W w) { return Value::of(lit::num(nat(a[0]), w)); });
  add("18", "Type1", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(type1(a[0])); },
      [](A a, X, W w) { return Value::of(lit::type1(a[0], w)); });
  add("19", "TypeN", {"n", "x"}, B::Boolean,
      [](A a, X) { return Value::of(type_n(nat(a[0]), a[1])); },
      [](A a, X, W w) { return Value::of(lit::type_n(nat(a[0]), a[1], w)); });
  add("20", "ElemF", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(elementary(a[0])); },
      [](A a, X, W w) { return Value::of(lit::elementary(a[0], w)); });
  add("21", "OpRel", {"x", "y", "z"}, B::Boolean,
      [](A a, X) { return Value::of(op_rel(a[0], a[1], a[2])); },
      [](A a, X, W w) { return Value::of(lit::op_rel(a[0], a[1], a[2], w)); });
  add("22", "FR", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(formula_sequence(a[0])); },
      [](A a, X, W w) { return Value::of(lit::formula_sequence(a[0], w)); });
  add("23", "IsFormula", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(is_formula(a[0])); },
      [](A a, X, W w) { return Value::of(lit::is_formula(a[0], w)); });
  add("24", "BoundAt", {"v", "n", "x"}, B::Boolean,
      [](A a, X) { return Value::of(bound_rel(a[0], nat(a[1]), a[2])); },
      [](A a, X, W w) { return Value::of(lit::bound_rel(a[0], nat(a[1]), a[2], w)); });
  add("25", "FreeAt", {"v", "n", "x"}, B::Boolean,
      [](A a, X) { return Value::of(free_at_rel(a[0], nat(a[1]), a[2])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::free_at_rel(a[0], nat(a[1]), a[2])); });
  add("26", "FreeIn", {"v", "x"}, B::Boolean,
      [](A a, X) { return Value::of(free_in(a[0], a[1])); },
      [](A a, X, W w) { return Value::of(lit::free_in(a[0], a[1], w)); });
  add("27", "SbAt", {"x", "n", "y"}, B::Number,
      [](A a, X) { return Value::of(sb(a[0], nat(a[1]), a[2])); },
      [](A a, X, W w) { return Value::of(lit::sb(a[0], nat(a[1]), a[2], w)); });
  add("28", "St", {"k", "v", "x"}, B::Number,
      [](A a, X) { return Value::of(st(nat(a[0]), a[1], a[2])); },
      [](A a, X, W w) { return Value::of(lit::st(nat(a[0]), a[1], a[2], w)); });
  add("29", "NumFree", {"v", "x"}, B::Number,
      [](A a, X) { return Value::of(num_free(a[0], a[1])); },
      [](A a, X, W w) { return Value::of(lit::num_free(a[0], a[1], w)); });
  add("30", "SubK", {"k", "x", "v", "y"}, B::Number,
      [](A a, X) { return Value::of(sub_k(nat(a[0]), a[1], a[2], a[3])); },
      [](A a, X, W w) { return Value::of(lit::sub_k(nat(a[0]), a[1], a[2], a[3], w)); });
  add("31", "Sub", {"x", "v", "y"}, B::Number,
      [](A a, X) { return Value::of(sub(a[0], a[1], a[2])); },
      [](A a, X, W w) { return Value::of(lit::sub(a[0], a[1], a[2], w)); });
  add("32a", "Implies", {"x", "y"}, B::Number,
      [](A a, X) { return Value::of(implies_c(a[0], a[1])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::implies_c(a[0], a[1])); });
  add("32b", "Con", {"x", "y"}, B::Number,
      [](A a, X) { return Value::of(con_c(a[0], a[1])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::con_c(a[0], a[1])); });
  add("32c", "Equal", {"x", "y"}, B::Number,
      [](A a, X) { return Value::of(equal_c(a[0], a[1])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::equal_c(a[0], a[1])); });
  add("32d", "Ex", {"v", "y"}, B::Number,
      [](A a, X) { return Value::of(ex_c(a[0], a[1])); },
      [](A a, X, W w) { w.tick(); return Value::of(lit::ex_c(a[0], a[1])); });
  add("33", "TypeElev", {"n", "x"}, B::Number,
      [](A a, X) { return Value::of(type_elev(nat(a[0]), a[1])); },
      [](A a, X, W w) { return Value::of(lit::type_elev(nat(a[0]), a[1], w)); });
  add("34", "ZAx", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::z_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::z_ax(a[0], w)); });
  add("35a", "A1Ax", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::a1_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::a1_ax(a[0], w)); });
  add("35b", "A2Ax", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::a2_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::a2_ax(a[0], w)); });
  add("35c", "A3Ax", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::a3_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::a3_ax(a[0], w)); });
  add("35d", "A4Ax", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::a4_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::a4_ax(a[0], w)); });
  add("36", "AAx", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::a_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::a_ax(a[0], w)); });
  add("37", "QRel", {"z", "y", "v"}, B::Boolean,
      [](A a, X) { return Value::of(proof::q_rel(a[0], a[1], a[2])); },
      [](A a, X, W w) { return Value::of(proof::lit::q_rel(a[0], a[1], a[2], w)); });
  add("38", "L1Ax", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::l1_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::l1_ax(a[0], w)); });
  add("39", "L2Ax", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::l2_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::l2_ax(a[0], w)); });
  add("40", "RAx", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::r_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::r_ax(a[0], w)); });
  add("41", "MAx", {"x"}, B::Boolean,
      [](A a, X) { return Value::of(proof::m_ax(a[0])); },
      [](A a, X, W w) { return Value::of(proof::lit::m_ax(a[0], w)); });
  add("42", "IsAxiom", {"x"}, B::Boolean,
      [](A a, X ax) { return Value::of(proof::is_axiom(a[0], ax)); },
      [](A a, X ax, W w) { return Value::of(proof::lit::is_axiom(a[0], ax, w)); });
  add("43", "ImmCon", {"x", "y", "z"}, B::Boolean,
      [](A a, X) { return Value::of(imm_con_rel(a[0], a[1], a[2])); },
      [](A a, X, W w) { return Value::of(lit::imm_con_rel(a[0], a[1], a[2], w)); });
  add("44", "ProofArray", {"x"}, B::Boolean,
      [](A a, X ax) { return Value::of(proof::proof_array(a[0], ax)); },
      [](A a, X ax, W w) { return Value::of(proof::lit::proof_array(a[0], ax, w)); });
  add("45", "ProofOf", {"x", "y"}, B::Boolean,
      [](A a, X ax) { return Value::of(proof::proof_of(a[0], a[1], ax)); },
      [](A a, X ax, W w) { return Value::of(proof::lit::proof_of(a[0], a[1], ax, w)); });
  r.push_back({"46", "Prov", {"x"}, B::Boolean, nullptr, nullptr});
  // clang-format on
  return r;
}

}  // namespace detail

inline const std::vector<RelationInfo>& registry() {
  static const std::vector<RelationInfo> r = detail::build_registry();
  return r;
}

/// By number ("31", "32a") or name, case-insensitively; "32" and "35" alone
/// are ambiguous and not found.
inline const RelationInfo* find_relation(const std::string& key) {
  auto lower = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  std::string k = lower(key);
  for (const auto& r : registry())
    if (lower(r.number) == k || lower(r.name) == k) return &r;
  return nullptr;
}

inline Value eval(const RelationInfo& r, const Args& args, EvalMode mode, const EvalContext& ctx = {}) {
  if (args.size() != r.arity())
    throw ArityError(r.name + " takes " + std::to_string(r.arity()) + " argument(s), got " + std::to_string(args.size()));
  if (!r.fast) throw Error("relation " + r.number + " (" + r.name + ") is not bounded; use a budgeted search");
  proof::AxiomSet standard = proof::AxiomSet::standard();
  const proof::AxiomSet& ax = ctx.axioms ? *ctx.axioms : standard;
  if (mode == EvalMode::Fast) return r.fast(args, ax);
  WorkCounter local;
  return r.literal(args, ax, ctx.work ? *ctx.work : local);
}

inline Value eval(const std::string& key, const Args& args, EvalMode mode, const EvalContext& ctx = {}) {
  const RelationInfo* r = find_relation(key);
  if (!r) throw Error("unknown relation '" + key + "'");
  return eval(*r, args, mode, ctx);
}

}  // namespace arithmos::rel
