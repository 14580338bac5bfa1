#pragma once

#include <functional>
#include <set>
#include <vector>

#include "arithmos/formula.hpp"

namespace arithmos {

namespace detail {

// Calls visit(position, variable, bound_here) for every variable occurrence in
// flatten(f); bound_here is true when the occurrence lies inside the span of a
// generalization over that same variable (the binder itself included).
inline void walk_occurrences(const Formula& f, Natural pos, std::vector<Variable>& scope,
                             const std::function<void(const Natural&, const Variable&, bool)>& visit) {
  auto in_scope = [&](const Variable& v) {
    for (const auto& s : scope)
      if (s == v) return true;
    return false;
  };
  switch (f.kind()) {
    case Formula::Kind::Elem: {
      visit(pos, f.head(), in_scope(f.head()));
      if (f.arg().base) {
        Natural p = pos + 2 + f.arg().succ;
        visit(p, *f.arg().base, in_scope(*f.arg().base));
      }
      return;
    }
    case Formula::Kind::Neg:
      walk_occurrences(f.inner(), pos + 2, scope, visit);
      return;
    case Formula::Kind::Dis:
      walk_occurrences(f.left(), pos + 1, scope, visit);
      walk_occurrences(f.right(), pos + f.left().length() + 4, scope, visit);
      return;
    case Formula::Kind::Gen:
      scope.push_back(f.binder());
      visit(pos, f.binder(), true);
      walk_occurrences(f.body(), pos + 3, scope, visit);
      scope.pop_back();
      return;
  }
}

inline void walk_occurrences(const Formula& f,
                             const std::function<void(const Natural&, const Variable&, bool)>& visit) {
  std::vector<Variable> scope;
  walk_occurrences(f, Natural(1), scope, visit);
}

// Spans [first, last] of every generalization over v.
inline void gen_spans(const Formula& f, const Variable& v, const Natural& pos,
                      std::vector<std::pair<Natural, Natural>>& out) {
  switch (f.kind()) {
    case Formula::Kind::Elem:
      return;
    case Formula::Kind::Neg:
      gen_spans(f.inner(), v, pos + 2, out);
      return;
    case Formula::Kind::Dis:
      gen_spans(f.left(), v, pos + 1, out);
      gen_spans(f.right(), v, pos + f.left().length() + 4, out);
      return;
    case Formula::Kind::Gen:
      if (f.binder() == v) out.emplace_back(pos, pos + f.length() - 1);
      gen_spans(f.body(), v, pos + 3, out);
      return;
  }
}

}  // namespace detail

/// 1-based places in flatten(f) where v occurs free, ascending.
inline std::vector<Natural> free_positions(const Formula& f, const Variable& v) {
  std::vector<Natural> out;
  detail::walk_occurrences(f, [&](const Natural& p, const Variable& w, bool bound) {
    if (w == v && !bound) out.push_back(p);
  });
  return out;
}

/// Places where v occurs and is bound.
inline std::vector<Natural> bound_occurrences(const Formula& f, const Variable& v) {
  std::vector<Natural> out;
  detail::walk_occurrences(f, [&](const Natural& p, const Variable& w, bool bound) {
    if (w == v && bound) out.push_back(p);
  });
  return out;
}

/// Every place of flatten(f), symbol or not, inside the scope of a
/// generalization over v.
inline bool bound_at(const Formula& f, const Variable& v, const Natural& n) {
  std::vector<std::pair<Natural, Natural>> spans;
  detail::gen_spans(f, v, Natural(1), spans);
  for (const auto& [a, b] : spans)
    if (a <= n && n <= b) return true;
  return false;
}

inline bool free_at(const Formula& f, const Variable& v, const Natural& n) {
  auto fp = free_positions(f, v);
  return std::find(fp.begin(), fp.end(), n) != fp.end();
}

/// Variables with at least one free occurrence, in code order.
inline std::set<Variable> free_variables(const Formula& f) {
  std::set<Variable> out;
  detail::walk_occurrences(f, [&](const Natural&, const Variable& w, bool bound) {
    if (!bound) out.insert(w);
  });
  return out;
}

inline std::set<Variable> all_variables(const Formula& f) {
  std::set<Variable> out;
  detail::walk_occurrences(f, [&](const Natural&, const Variable& w, bool) { out.insert(w); });
  return out;
}

namespace detail {

inline Formula substitute_rec(const Formula& f, const Variable& v, const Sign& t, std::vector<Variable>& scope,
                              const std::set<Variable>& tvars) {
  auto check_capture = [&] {
    for (const auto& w : scope)
      if (tvars.count(w)) throw CaptureError("substituted sign contains " + w.name() + ", bound at a free place of " + v.name());
  };
  switch (f.kind()) {
    case Formula::Kind::Elem: {
      Variable head = f.head();
      Sign arg = f.arg();
      if (head == v) {
        check_capture();
        head = *t.base;
      }
      if (arg.base && *arg.base == v) {
        check_capture();
        arg = Sign{arg.succ + t.succ, t.base};
      }
      return Formula::elem(head, arg);
    }
    case Formula::Kind::Neg:
      return Formula::neg(substitute_rec(f.inner(), v, t, scope, tvars));
    case Formula::Kind::Dis:
      return Formula::dis(substitute_rec(f.left(), v, t, scope, tvars), substitute_rec(f.right(), v, t, scope, tvars));
    case Formula::Kind::Gen: {
      if (f.binder() == v) return f;
      scope.push_back(f.binder());
      Formula body = substitute_rec(f.body(), v, t, scope, tvars);
      scope.pop_back();
      return Formula::gen(f.binder(), std::move(body));
    }
  }
  return f;
}

}  // namespace detail

/// Replaces every free occurrence of v by t. Throws CaptureError when a
/// variable of t is bound at a place where v is free.
inline Formula substitute_sym(const Formula& f, const Variable& v, const Sign& t) {
  if (t.type() != v.type) throw Error("substituted sign must have the variable's type");
  if (v.type > 1 && (t.succ != 0 || !t.base)) throw Error("sign of type > 1 must be a variable");
  std::set<Variable> tvars;
  if (t.base) tvars.insert(*t.base);
  std::vector<Variable> scope;
  return detail::substitute_rec(f, v, t, scope, tvars);
}

/// Raises every variable's type by n in a symbol string.
inline SymbolString type_elevate_symbols(const SymbolString& s, std::uint32_t n) {
  SymbolString out;
  for (const auto& r : s.runs()) {
    auto v = Variable::from_code(r.code);
    if (v) {
      v->type += n;
      out.push(v->code(), r.count);
    } else {
      out.push(r.code, r.count);
    }
  }
  return out;
}

/// Raises every variable's type by n. Formulas containing 0 or f stop being
/// formulas for n > 0 (0 stays type 1); those throw NotWellFormed.
inline Formula type_elevate_sym(const Formula& f, std::uint32_t n) {
  if (n == 0) return f;
  return parse_symbols(type_elevate_symbols(flatten(f), n));
}

}  // namespace arithmos
