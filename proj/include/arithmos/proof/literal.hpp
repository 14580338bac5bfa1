#pragma once

#include "arithmos/proof/axioms.hpp"
#include "arithmos/relations/literal.hpp"

// Literal evaluators for relations 34-45, under the same rules as the ones
// for 1-33: printed loops run as written, referenced relations are fast.
// Conjuncts that mention only outer loop indexes are tested before the inner
// loops start, which is logically the same formula.
//
// Every formula code is at least 2^289 (each formula contains an elementary
// formula, whose head variable has a code of at least 17^2), so a loop that can
// only succeed at a formula code runs min(x + 1, 2^289) times before it can
// stop. The schema relations check that floor against the work ceiling first.

namespace arithmos::proof::lit {

using rel::exists_bounded;
using rel::exists_pruned;
using rel::Limit;
using rel::Step;
using rel::step_if;
using rel::WorkCounter;

namespace detail {

inline Natural formula_floor(const GodelNumber& x) {
  if (x.log2_estimate() >= 289) return pow_nat(2, 289);
  return x.value() + 1;
}

inline GodelNumber code(const Natural& n) { return GodelNumber(n); }

}  // namespace detail

inline bool z_ax(const GodelNumber& x, WorkCounter& w) {
  w.tick();
  const auto& c = constants();
  return x == c.z1 || x == c.z2 || x == c.z3;
}

inline bool a1_ax(const GodelNumber& x, WorkCounter& w) {
  w.require(detail::formula_floor(x), "A1-Ax");
  return exists_bounded(Limit::of(x), [&](const Natural& y) {
    GodelNumber gy = detail::code(y);
    return rel::is_formula(gy) && x == rel::implies_c(rel::dis_c(gy, gy), gy);
  }, w);
}

namespace detail {

// ∃p ≤ x ∃q ≤ x (IsFormula(p) ∧ IsFormula(q) ∧ x = F(p, q))
template <class F>
bool two_formulas(const GodelNumber& x, WorkCounter& w, const char* what, F&& build) {
  w.require(formula_floor(x), what);
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& p) {
    GodelNumber gp = code(p);
    if (!rel::is_formula(gp)) return false;
    return exists_bounded(lim, [&](const Natural& q) {
      GodelNumber gq = code(q);
      return rel::is_formula(gq) && x == build(gp, gq);
    }, w);
  }, w);
}

}  // namespace detail

inline bool a2_ax(const GodelNumber& x, WorkCounter& w) {
  return detail::two_formulas(x, w, "A2-Ax", [](const GodelNumber& p, const GodelNumber& q) {
    return rel::implies_c(p, rel::dis_c(p, q));
  });
}

inline bool a3_ax(const GodelNumber& x, WorkCounter& w) {
  return detail::two_formulas(x, w, "A3-Ax", [](const GodelNumber& p, const GodelNumber& q) {
    return rel::implies_c(rel::dis_c(p, q), rel::dis_c(q, p));
  });
}

inline bool a4_ax(const GodelNumber& x, WorkCounter& w) {
  w.require(detail::formula_floor(x), "A4-Ax");
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& p) {
    GodelNumber gp = detail::code(p);
    if (!rel::is_formula(gp)) return false;
    return exists_bounded(lim, [&](const Natural& q) {
      GodelNumber gq = detail::code(q);
      if (!rel::is_formula(gq)) return false;
      return exists_bounded(lim, [&](const Natural& r) {
        GodelNumber gr = detail::code(r);
        return rel::is_formula(gr) &&
               x == rel::implies_c(rel::implies_c(gp, gq), rel::implies_c(rel::dis_c(gr, gp), rel::dis_c(gr, gq)));
      }, w);
    }, w);
  }, w);
}

/// Relation 36, one level deep: the disjunction of the fast A_i-Ax.
inline bool a_ax(const GodelNumber& x, WorkCounter& w) {
  w.tick();
  return proof::a1_ax(x) || proof::a2_ax(x) || proof::a3_ax(x) || proof::a4_ax(x);
}

/// Relation 37. `v Free n, y` needs n ≤ Len(y), so n stops there; w is pinned
/// to m TermOf z by its first conjunct.
inline bool q_rel(const GodelNumber& z, const GodelNumber& y, const GodelNumber& v, WorkCounter& w) {
  Natural ly = rel::len(y), lz = rel::len(z);
  bool hit = exists_pruned(Limit::of(y), [&](const Natural& n) {
    if (n > ly) return Step::Stop;
    if (!rel::free_at_rel(v, n, y)) return Step::No;
    return step_if(exists_bounded(Limit::of(lz), [&](const Natural& m) {
      GodelNumber t = rel::term_of(m, z);
      return t <= z && rel::bound_rel(t, n, y);
    }, w));
  }, w);
  return !hit;
}

inline bool l1_ax(const GodelNumber& x, WorkCounter& w) {
  // for v = 0 the y loop runs to x, and nothing below 2^289 is a formula
  Natural floor = detail::formula_floor(x);
  if (x.log2_estimate() < 289) floor = floor * floor;
  w.require(floor, "L1-Ax");
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& v) {
    GodelNumber gv = detail::code(v);
    return exists_bounded(lim, [&](const Natural& y) {
      GodelNumber gy = detail::code(y);
      if (!rel::is_formula(gy)) return false;
      return exists_bounded(lim, [&](const Natural& z) {
        GodelNumber gz = detail::code(z);
        return exists_bounded(lim, [&](const Natural& n) {
          return rel::var_of_type(n, gv) && rel::type_n(n, gz) && proof::q_rel(gz, gy, gv) &&
                 x == rel::implies_c(rel::gen_c(gv, gy), rel::sub(gy, gv, gz));
        }, w);
      }, w);
    }, w);
  }, w);
}

/// Relation 39, with v not free in p: the printed text drops the negation that
/// the schema itself carries.
inline bool l2_ax(const GodelNumber& x, WorkCounter& w) {
  w.require(detail::formula_floor(x), "L2-Ax");
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& v) {
    GodelNumber gv = detail::code(v);
    if (!rel::is_var(gv)) return false;
    return exists_bounded(lim, [&](const Natural& q) {
      GodelNumber gq = detail::code(q);
      if (!rel::is_formula(gq)) return false;
      return exists_bounded(lim, [&](const Natural& p) {
        GodelNumber gp = detail::code(p);
        return rel::is_formula(gp) && !rel::free_in(gv, gp) &&
               x == rel::implies_c(rel::gen_c(gv, rel::dis_c(gp, gq)), rel::dis_c(gp, rel::gen_c(gv, gq)));
      }, w);
    }, w);
  }, w);
}

inline bool r_ax(const GodelNumber& x, WorkCounter& w) {
  w.require(detail::formula_floor(x), "R-Ax");
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& u) {
    GodelNumber gu = detail::code(u);
    return exists_bounded(lim, [&](const Natural& v) {
      GodelNumber gv = detail::code(v);
      GodelNumber head = rel::concat(rel::sym_of(gu), rel::paren(rel::sym_of(gv)));
      return exists_bounded(lim, [&](const Natural& y) {
        GodelNumber gy = detail::code(y);
        if (rel::free_in(gu, gy) || !rel::is_formula(gy)) return false;
        return exists_bounded(lim, [&](const Natural& n) {
          return rel::var_of_type(n, gv) && rel::var_of_type(n + 1, gu) &&
                 x == rel::ex_c(gu, rel::gen_c(gv, rel::equal_c(head, gy)));
        }, w);
      }, w);
    }, w);
  }, w);
}

/// Relation 41 read as ∃n ≤ x (x = n Th z4). n Th z4 grows strictly with n.
inline bool m_ax(const GodelNumber& x, WorkCounter& w) {
  const GodelNumber& z4 = constants().z4;
  return exists_pruned(Limit::of(x), [&](const Natural& n) {
    GodelNumber t = rel::type_elev(n, z4);
    if (t > x) return Step::Stop;
    return step_if(t == x);
  }, w);
}

/// Relation 42, one level deep. Extra axioms of the set are added as further
/// disjuncts.
inline bool is_axiom(const GodelNumber& x, const AxiomSet& ax, WorkCounter& w) {
  w.tick();
  if (ax.uses_standard() && (proof::z_ax(x) || proof::a_ax(x) || proof::l1_ax(x) || proof::l2_ax(x) ||
                             proof::r_ax(x) || proof::m_ax(x)))
    return true;
  for (const auto& e : ax.extras())
    if (encode_formula(e.second) == x) return true;
  return false;
}

inline bool proof_array(const GodelNumber& x, const AxiomSet& ax, WorkCounter& w) {
  Natural L = rel::len(x);
  if (!(L > 0)) return false;
  for (Natural n = 0; n <= L; ++n) {
    w.tick();
    if (n == 0) continue;
    GodelNumber tn = rel::term_of(n, x);
    if (proof::is_axiom(tn, ax)) continue;
    bool ok = false;
    for (Natural p = 0; p < n && !ok; ++p)
      for (Natural q = 0; q < n && !ok; ++q) {
        w.tick();
        ok = p > 0 && q > 0 && rel::imm_con_rel(tn, rel::term_of(p, x), rel::term_of(q, x));
      }
    if (!ok) return false;
  }
  return true;
}

inline bool proof_of(const GodelNumber& x, const GodelNumber& y, const AxiomSet& ax, WorkCounter& w) {
  return proof_array(x, ax, w) && rel::term_of(rel::len(x), x) == y;
}

}  // namespace arithmos::proof::lit
