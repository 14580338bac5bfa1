#pragma once

#include <functional>
#include <string>
#include <utility>

#include "arithmos/codec.hpp"
#include "arithmos/relations/fast.hpp"
#include "arithmos/substitution.hpp"

namespace arithmos::proof {

// ------------------------------------------------------------ shapes

namespace shape {

using P = const Formula*;

/// a → b, i.e. Dis(Neg(a), b).
inline bool implies(const Formula& f, P& a, P& b) {
  if (f.kind() != Formula::Kind::Dis || f.left().kind() != Formula::Kind::Neg) return false;
  a = &f.left().inner();
  b = &f.right();
  return true;
}

inline bool dis(const Formula& f, P& a, P& b) {
  if (f.kind() != Formula::Kind::Dis) return false;
  a = &f.left();
  b = &f.right();
  return true;
}

/// a ∧ b, i.e. Neg(Dis(Neg(a), Neg(b))).
inline bool conj(const Formula& f, P& a, P& b) {
  if (f.kind() != Formula::Kind::Neg) return false;
  const Formula& d = f.inner();
  if (d.kind() != Formula::Kind::Dis || d.left().kind() != Formula::Kind::Neg || d.right().kind() != Formula::Kind::Neg)
    return false;
  a = &d.left().inner();
  b = &d.right().inner();
  return true;
}

/// a ↔ b, i.e. (a → b) ∧ (b → a).
inline bool equiv(const Formula& f, P& a, P& b) {
  P l, r, a2, b2;
  if (!conj(f, l, r) || !implies(*l, a, b) || !implies(*r, b2, a2)) return false;
  return *a == *a2 && *b == *b2;
}

}  // namespace shape

// ------------------------------------------------------------ the constants

/// First variable of a type that does not occur in any of the given signs.
inline Variable fresh_variable(std::uint32_t type, std::initializer_list<Sign> avoid) {
  for (std::uint32_t i = 1;; ++i) {
    Variable v{i, type};
    bool used = false;
    for (const auto& s : avoid)
      if (s.base && *s.base == v) used = true;
    if (!used) return v;
  }
}

/// a = b as ∀X (X(a) ↔ X(b)), X the first fresh variable of the next type.
inline Formula leibniz_equal(const Sign& a, const Sign& b) {
  if (a.type() != b.type()) throw Error("equality between signs of different types");
  Variable X = fresh_variable(a.type() + 1, {a, b});
  return Formula::gen(X, equiv(Formula::elem(X, a), Formula::elem(X, b)));
}

struct AxiomConstants {
  Formula i1, i2, i3, v1;
  GodelNumber z1, z2, z3, z4;
};

inline AxiomConstants make_constants() {
  const Variable n{1, 1}, m{2, 1}, x{1, 1}, A{1, 2}, B{2, 2};
  auto succ = [](Variable v) { return Sign{1, v}; };
  // I.1: f(n) ≠ 0
  Formula i1 = Formula::neg(leibniz_equal(succ(n), Sign::zero()));
  // I.2: f(n) = f(m) → n = m
  Formula i2 = implies(leibniz_equal(succ(n), succ(m)), leibniz_equal(Sign::var(n), Sign::var(m)));
  // I.3: (0 ∈ A ∧ ∀n [n ∈ A → f(n) ∈ A]) → ∀n (n ∈ A)
  Formula i3 = implies(conj(Formula::elem(A, Sign::zero()),
                            Formula::gen(n, implies(Formula::elem(A, Sign::var(n)), Formula::elem(A, succ(n))))),
                       Formula::gen(n, Formula::elem(A, Sign::var(n))));
  // V.1: ∀x (x ∈ A ↔ x ∈ B) → A = B
  Formula v1 = implies(Formula::gen(x, equiv(Formula::elem(A, Sign::var(x)), Formula::elem(B, Sign::var(x)))),
                       leibniz_equal(Sign::var(A), Sign::var(B)));
  return {i1, i2, i3, v1, encode_formula(i1), encode_formula(i2), encode_formula(i3), encode_formula(v1)};
}

inline const AxiomConstants& constants() {
  static const AxiomConstants c = make_constants();
  return c;
}

// ------------------------------------------------------------ schemas

/// (y ∨ y) → y
inline bool is_a1(const Formula& f) {
  shape::P a, b, l, r;
  return shape::implies(f, a, b) && shape::dis(*a, l, r) && *l == *r && *r == *b;
}

/// p → (p ∨ q)
inline bool is_a2(const Formula& f) {
  shape::P a, b, l, r;
  return shape::implies(f, a, b) && shape::dis(*b, l, r) && *l == *a;
}

/// (p ∨ q) → (q ∨ p)
inline bool is_a3(const Formula& f) {
  shape::P a, b, p, q, q2, p2;
  return shape::implies(f, a, b) && shape::dis(*a, p, q) && shape::dis(*b, q2, p2) && *p == *p2 && *q == *q2;
}

/// (p → q) → ((r ∨ p) → (r ∨ q))
inline bool is_a4(const Formula& f) {
  shape::P a, b, p, q, rp, rq, r1, p2, r2, q2;
  return shape::implies(f, a, b) && shape::implies(*a, p, q) && shape::implies(*b, rp, rq) && shape::dis(*rp, r1, p2) &&
         shape::dis(*rq, r2, q2) && *r1 == *r2 && *p == *p2 && *q == *q2;
}

namespace detail {

// Walks y and its claimed substitution instance s side by side and reads off
// the sign that replaced the first free occurrence of v.
inline bool find_replacement(const Formula& y, const Formula& s, const Variable& v, bool bound, std::optional<Sign>& z) {
  if (y.kind() != s.kind()) return false;
  switch (y.kind()) {
    case Formula::Kind::Elem: {
      if (!bound && !z && y.head() == v) z = Sign::var(s.head());
      const Sign& ya = y.arg();
      const Sign& sa = s.arg();
      if (!bound && !z && ya.base && *ya.base == v) {
        if (sa.succ < ya.succ) return false;
        z = Sign{sa.succ - ya.succ, sa.base};
      }
      return true;
    }
    case Formula::Kind::Neg:
      return find_replacement(y.inner(), s.inner(), v, bound, z);
    case Formula::Kind::Dis:
      return find_replacement(y.left(), s.left(), v, bound, z) && find_replacement(y.right(), s.right(), v, bound, z);
    case Formula::Kind::Gen:
      if (!(y.binder() == s.binder())) return false;
      return find_replacement(y.body(), s.body(), v, bound || y.binder() == v, z);
  }
  return false;
}

}  // namespace detail

/// The sign z of an L1 instance (∀v y) → y[v := z], if f is one.
inline std::optional<Sign> l1_witness(const Formula& f) {
  shape::P a, b;
  if (!shape::implies(f, a, b) || a->kind() != Formula::Kind::Gen) return std::nullopt;
  const Variable& v = a->binder();
  const Formula& y = a->body();
  std::optional<Sign> z;
  if (!detail::find_replacement(y, *b, v, false, z)) return std::nullopt;
  if (!z) z = Sign::var(v);  // no free occurrence: any sign of v's type
  if (z->type() != v.type || !z->valid()) return std::nullopt;
  if (v.type > 1 && (z->succ != 0 || !z->base)) return std::nullopt;
  try {
    if (!(substitute_sym(y, v, *z) == *b)) return std::nullopt;
  } catch (const CaptureError&) {
    return std::nullopt;
  }
  return z;
}

inline bool is_l1(const Formula& f) { return l1_witness(f).has_value(); }

/// (∀v (p ∨ q)) → (p ∨ ∀v q), v not free in p
inline bool is_l2(const Formula& f) {
  shape::P a, b, p, q, p2, g;
  if (!shape::implies(f, a, b) || a->kind() != Formula::Kind::Gen) return false;
  if (!shape::dis(a->body(), p, q) || !shape::dis(*b, p2, g) || g->kind() != Formula::Kind::Gen) return false;
  const Variable& v = a->binder();
  if (!(g->binder() == v) || !(*p == *p2) || !(g->body() == *q)) return false;
  return free_positions(*p, v).empty();
}

/// ∃u ∀v (u(v) ↔ y), u one type above v and not free in y
inline bool is_r(const Formula& f) {
  if (f.kind() != Formula::Kind::Neg || f.inner().kind() != Formula::Kind::Gen) return false;
  const Variable& u = f.inner().binder();
  const Formula& n1 = f.inner().body();
  if (n1.kind() != Formula::Kind::Neg || n1.inner().kind() != Formula::Kind::Gen) return false;
  const Variable& v = n1.inner().binder();
  shape::P e, y;
  if (!shape::equiv(n1.inner().body(), e, y)) return false;
  if (e->kind() != Formula::Kind::Elem || !(e->head() == u) || !(e->arg() == Sign::var(v))) return false;
  if (u.type != v.type + 1) return false;
  return free_positions(*y, u).empty();
}

/// The n with f = n Th z4, if any.
inline std::optional<std::uint32_t> m_level(const Formula& f) {
  const Formula& z4 = constants().v1;
  SymbolString zs = flatten(z4), fs = flatten(f);
  if (!(zs.size() == fs.size()) || zs.runs().size() != fs.runs().size()) return std::nullopt;
  std::optional<std::uint32_t> n;
  for (std::size_t i = 0; i < zs.runs().size() && !n; ++i) {
    auto zv = Variable::from_code(zs.runs()[i].code);
    auto fv = Variable::from_code(fs.runs()[i].code);
    if (zv && fv && fv->type >= zv->type) n = fv->type - zv->type;
  }
  if (!n) return std::nullopt;
  if (!(type_elevate_symbols(zs, *n) == fs)) return std::nullopt;
  return n;
}

inline bool is_m(const Formula& f) { return m_level(f).has_value(); }

inline bool is_z(const GodelNumber& g) {
  const auto& c = constants();
  return g == c.z1 || g == c.z2 || g == c.z3;
}

/// Schema ids in recognition order.
inline const std::vector<std::string>& schema_ids() {
  static const std::vector<std::string> ids{"Z", "A1", "A2", "A3", "A4", "L1", "L2", "R", "M"};
  return ids;
}

inline bool matches_schema(const std::string& id, const Formula& f, const GodelNumber& g) {
  if (id == "Z") return is_z(g);
  if (id == "A1") return is_a1(f);
  if (id == "A2") return is_a2(f);
  if (id == "A3") return is_a3(f);
  if (id == "A4") return is_a4(f);
  if (id == "L1") return is_l1(f);
  if (id == "L2") return is_l2(f);
  if (id == "R") return is_r(f);
  if (id == "M") return is_m(f);
  return false;
}

// ------------------------------------------------------------ axiom sets

/// The axiom recognizer behind relations 42-46: the standard schemas (which
/// may be switched off) followed by extra axioms given as formulas.
class AxiomSet {
 public:
  static AxiomSet standard() { return AxiomSet(true); }
  static AxiomSet only_extras() { return AxiomSet(false); }

  AxiomSet& add(std::string id, const Formula& f) {
    if (id.empty()) id = "X" + std::to_string(extras_.size() + 1);
    for (const auto& s : schema_ids())
      if (s == id) throw Error("extra axiom id '" + id + "' collides with a schema id");
    GodelNumber g = encode_formula(f);
    extras_.push_back({std::move(id), f});
    extra_codes_.emplace(g, extras_.size() - 1);
    return *this;
  }
  AxiomSet with(std::string id, const Formula& f) const {
    AxiomSet copy = *this;
    copy.add(std::move(id), f);
    return copy;
  }

  bool uses_standard() const { return standard_; }
  const std::vector<std::pair<std::string, Formula>>& extras() const { return extras_; }

  /// First matching schema id, then extra id; nullopt if g is no axiom.
  std::optional<std::string> match(const GodelNumber& g) const {
    auto f = try_decode_formula(g);
    if (!f) return std::nullopt;
    return match(*f, g);
  }
  std::optional<std::string> match(const Formula& f) const { return match(f, encode_formula(f)); }

  std::optional<std::string> match(const Formula& f, const GodelNumber& g) const {
    if (standard_)
      for (const auto& id : schema_ids())
        if (matches_schema(id, f, g)) return id;
    auto it = extra_codes_.find(g);
    if (it != extra_codes_.end()) return extras_[it->second].first;
    return std::nullopt;
  }

  /// Does f match the named schema or extra axiom?
  bool matches(const std::string& id, const Formula& f) const {
    GodelNumber g = encode_formula(f);
    if (standard_)
      for (const auto& s : schema_ids())
        if (s == id) return matches_schema(id, f, g);
    auto it = extra_codes_.find(g);
    return it != extra_codes_.end() && extras_[it->second].first == id;
  }

  /// Concrete axioms worth seeding a search with.
  std::vector<Formula> seeds() const {
    std::vector<Formula> out;
    if (standard_) {
      const auto& c = constants();
      out = {c.i1, c.i2, c.i3, c.v1};
    }
    for (const auto& e : extras_) out.push_back(e.second);
    return out;
  }

 private:
  explicit AxiomSet(bool standard) : standard_(standard) {}
  bool standard_;
  std::vector<std::pair<std::string, Formula>> extras_;
  std::unordered_map<GodelNumber, std::size_t> extra_codes_;
};

// ------------------------------------------------------------ relations 34-42

namespace detail {

template <class Pred>
bool on_formula(const GodelNumber& x, Pred&& pred) {
  auto f = try_decode_formula(x);
  return f && pred(*f);
}

}  // namespace detail

inline bool z_ax(const GodelNumber& x) { return is_z(x); }
inline bool a1_ax(const GodelNumber& x) { return detail::on_formula(x, is_a1); }
inline bool a2_ax(const GodelNumber& x) { return detail::on_formula(x, is_a2); }
inline bool a3_ax(const GodelNumber& x) { return detail::on_formula(x, is_a3); }
inline bool a4_ax(const GodelNumber& x) { return detail::on_formula(x, is_a4); }
inline bool a_ax(const GodelNumber& x) {
  return detail::on_formula(x, [](const Formula& f) { return is_a1(f) || is_a2(f) || is_a3(f) || is_a4(f); });
}

/// Relation 37: no variable among the terms of z is bound in y at a place
/// where v is free.
inline bool q_rel(const GodelNumber& z, const GodelNumber& y, const GodelNumber& v) {
  auto fy = try_decode_formula(y);
  auto var = rel::detail::as_variable(v);
  if (!fy || !var) return true;
  auto places = free_positions(*fy, *var);
  if (places.empty() || z.is_zero()) return true;
  for (const auto& r : rel::terms_of(z)) {
    auto w = rel::detail::as_variable(r.value);
    if (!w) continue;
    for (const auto& n : places)
      if (bound_at(*fy, *w, n)) return false;
  }
  return true;
}

inline bool l1_ax(const GodelNumber& x) { return detail::on_formula(x, is_l1); }
inline bool l2_ax(const GodelNumber& x) { return detail::on_formula(x, is_l2); }
inline bool r_ax(const GodelNumber& x) { return detail::on_formula(x, is_r); }
inline bool m_ax(const GodelNumber& x) { return detail::on_formula(x, is_m); }
inline bool is_axiom(const GodelNumber& x, const AxiomSet& ax = AxiomSet::standard()) { return ax.match(x).has_value(); }

}  // namespace arithmos::proof
