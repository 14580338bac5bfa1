#pragma once

#include <sstream>

#include "arithmos/godel_text.hpp"
#include "arithmos/proof/search.hpp"

namespace arithmos {

/// A formula with exactly one free variable.
struct ClassExpression {
  GodelNumber code;
  Variable free_var;

  static ClassExpression from_formula(const Formula& f) {
    auto fv = free_variables(f);
    if (fv.size() != 1)
      throw NotAClassExpression("a class expression has exactly one free variable, this formula has " +
                                std::to_string(fv.size()));
    return {encode_formula(f), *fv.begin()};
  }
  static ClassExpression from_code(const GodelNumber& g) {
    auto f = try_decode_formula(g);
    if (!f) throw NotAClassExpression("not the code of a formula");
    return from_formula(*f);
  }
  Formula formula() const { return decode_formula(code); }
};

/// Sub(code, v, Num(code)): the expression applied to its own number.
inline GodelNumber diag(const ClassExpression& e) {
  return rel::sub(e.code, GodelNumber(e.free_var.code()), rel::num(e.code.value()));
}

/// The same value by symbolic substitution.
inline GodelNumber diag_symbolic(const ClassExpression& e) {
  return encode_formula(substitute_sym(e.formula(), e.free_var, Sign::numeral(e.code.value())));
}

/// f_d(n): diag of the class expression coded by n, or 0.
inline GodelNumber tmr_diag(const GodelNumber& n) {
  auto f = try_decode_formula(n);
  if (!f || free_variables(*f).size() != 1) return GodelNumber();
  return diag(ClassExpression::from_formula(*f));
}

// ------------------------------------------------------------ the sentences

struct DiagonalReport {
  GodelNumber q;              // the two-variable formula fed in
  Variable first, second;     // bound by the generalization, diagonalized
  GodelNumber p;              // [∀first q]
  GodelNumber sentence_code;  // Sub(p, second, Num(p))
  GodelNumber alt_code;       // [∀first q(first, Num(p))]

  std::string text() const {
    std::ostringstream out;
    out << "q: " << format_factored(q) << "\n"
        << "first_var: " << first.name() << "\n"
        << "second_var: " << second.name() << "\n"
        << "p: " << format_factored(p) << "\n"
        << "sentence_code: " << format_factored(sentence_code) << "\n"
        << "alt_code: " << format_factored(alt_code) << "\n"
        << "identity: " << (sentence_code == alt_code ? "holds" : "VIOLATED") << "\n";
    return out.str();
  }
};

namespace detail {

inline Formula require_free_vars(const GodelNumber& q, const Variable& first, const Variable& second) {
  auto f = try_decode_formula(q);
  if (!f) throw NotAFormulaCode("q is not the code of a formula");
  // other free variables (say the predicate heads) are left alone
  auto fv = free_variables(*f);
  if (first == second || !fv.count(first) || !fv.count(second))
    throw WrongFreeVariables("q must have " + first.name() + " and " + second.name() + " as two distinct free variables");
  return *f;
}

inline DiagonalReport build_diagonal(const GodelNumber& q, const Variable& first, const Variable& second) {
  GodelNumber u(first.code()), v(second.code());
  DiagonalReport r{q, first, second, rel::gen_c(u, q), {}, {}};
  GodelNumber np = rel::num(r.p.value());
  r.sentence_code = rel::sub(r.p, v, np);
  r.alt_code = rel::gen_c(u, rel::sub(q, v, np));
  if (!(r.sentence_code == r.alt_code)) throw IdentityViolation("Sub(p, x, Num(p)) differs from Gen(n, Sub(q, x, Num(p)))");
  return r;
}

}  // namespace detail

/// φ_p(x) = ∀n φ_q(n, x), then φ_p(p) two ways.
inline DiagonalReport goedel_construction(const GodelNumber& q, const Variable& first, const Variable& second) {
  detail::require_free_vars(q, first, second);
  return detail::build_diagonal(q, first, second);
}

/// The Rosser-shaped matrix ¬q(n, x) ∨ ∃z q(z, x), z a variable of n's type
/// not occurring in q.
inline Formula rosser_matrix(const Formula& q, const Variable& first) {
  auto used = all_variables(q);
  Variable z{1, first.type};
  while (used.count(z)) ++z.index;
  return Formula::dis(Formula::neg(q), exists(z, substitute_sym(q, first, Sign::var(z))));
}

inline DiagonalReport rosser_construction(const GodelNumber& q, const Variable& first, const Variable& second) {
  Formula f = detail::require_free_vars(q, first, second);
  return detail::build_diagonal(encode_formula(rosser_matrix(f, first)), first, second);
}

// ------------------------------------------------------------ ω-scan

struct OmegaScanReport {
  GodelNumber expression;
  Variable var;
  std::vector<proof::SearchResult> instances;  // k = 0..K
  proof::SearchResult universal_negation;

  bool omega_witness() const {
    if (!universal_negation.found()) return false;
    for (const auto& r : instances)
      if (!r.found()) return false;
    return true;
  }

  std::string text() const {
    std::ostringstream out;
    auto line = [&](const std::string& key, const proof::SearchResult& r) {
      out << key << ": ";
      if (r.found())
        out << "witness " << format_factored(*r.witness) << " lines " << r.proof.size();
      else
        out << "exhausted (" << r.stop_name() << ") examined " << r.examined << " of " << r.total;
      out << "\n";
    };
    out << "expression: " << format_factored(expression) << "\n"
        << "variable: " << var.name() << "\n"
        << "K: " << (instances.empty() ? 0 : instances.size() - 1) << "\n";
    for (std::size_t k = 0; k < instances.size(); ++k) line("instance_" + std::to_string(k), instances[k]);
    line("universal_negation", universal_negation);
    out << "omega_witness: " << (omega_witness() ? "true" : "false") << "\n";
    return out.str();
  }
};

/// Searches a proof of e(Num(k)) for k = 0..K and of ¬∀v e.
inline OmegaScanReport omega_scan(const ClassExpression& e, std::uint64_t K, const proof::SearchBudget& budget,
                                  const proof::AxiomSet& ax = proof::AxiomSet::standard(),
                                  const proof::SearchOptions& opt = {}, std::stop_token stop = {}) {
  OmegaScanReport r{e.code, e.free_var, {}, {}};
  Formula f = e.formula();
  for (std::uint64_t k = 0; k <= K; ++k) {
    Formula inst = substitute_sym(f, e.free_var, Sign::numeral(k));
    r.instances.push_back(proof::ProvSearch(inst, ax, opt).run(budget, stop));
  }
  r.universal_negation = proof::ProvSearch(Formula::neg(Formula::gen(e.free_var, f)), ax, opt).run(budget, stop);
  return r;
}

}  // namespace arithmos
