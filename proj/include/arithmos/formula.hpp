#pragma once

#include <memory>
#include <optional>
#include <set>
#include <utility>

#include "arithmos/error.hpp"
#include "arithmos/symbols.hpp"

namespace arithmos {

/// A sign of some type: for type 1, `succ` copies of f in front of 0 or a
/// type-1 variable; for type n > 1, a lone variable of type n.
struct Sign {
  Natural succ = 0;
  std::optional<Variable> base;  // nullopt is the sign "0"

  static Sign zero() { return {}; }
  static Sign numeral(const Natural& n) { return Sign{n, std::nullopt}; }
  static Sign var(Variable v) { return Sign{0, v}; }

  std::uint32_t type() const { return base ? base->type : 1; }
  bool valid() const { return succ == 0 || !base || base->type == 1; }
  SymbolString symbols() const {
    SymbolString s;
    s.push(sym::succ, succ);
    s.push(base ? base->code() : sym::zero);
    return s;
  }
  friend bool operator==(const Sign& a, const Sign& b) { return a.succ == b.succ && a.base == b.base; }
};

class Formula {
 public:
  enum class Kind { Elem, Neg, Dis, Gen };

  static Formula elem(Variable head, Sign arg);
  static Formula neg(Formula inner);
  static Formula dis(Formula left, Formula right);
  static Formula gen(Variable binder, Formula body);

  Kind kind() const;
  const Variable& head() const;    // Elem
  const Sign& arg() const;         // Elem
  const Formula& inner() const;    // Neg
  const Formula& left() const;     // Dis
  const Formula& right() const;    // Dis
  const Variable& binder() const;  // Gen
  const Formula& body() const;     // Gen
  /// Length of the flattened symbol string.
  const Natural& length() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  Variable var;
  Sign arg;
  std::optional<Formula> a, b;
  Natural length;
  std::size_t hash;
};

inline Formula Formula::elem(Variable head, Sign arg) {
  if (!arg.valid()) throw Error("successor applied to a variable of type > 1");
  if (head.type != arg.type() + 1) throw Error("elementary formula head must have type of argument + 1");
  // head ( f..f base )
  Natural len = arg.succ + 4;
  std::size_t h = detail::hash_combine(0x11, head.code());
  h = detail::hash_combine(h, detail::hash_nat(arg.succ));
  h = detail::hash_combine(h, arg.base ? arg.base->code() : 1);
  return Formula(std::make_shared<const Node>(Node{Kind::Elem, head, std::move(arg), {}, {}, len, h}));
}

inline Formula Formula::neg(Formula inner) {
  Natural len = inner.length() + 3;
  std::size_t h = detail::hash_combine(0x22, inner.hash());
  return Formula(std::make_shared<const Node>(Node{Kind::Neg, {}, {}, std::move(inner), {}, len, h}));
}

inline Formula Formula::dis(Formula left, Formula right) {
  Natural len = left.length() + right.length() + 5;
  std::size_t h = detail::hash_combine(detail::hash_combine(0x33, left.hash()), right.hash());
  return Formula(std::make_shared<const Node>(Node{Kind::Dis, {}, {}, std::move(left), std::move(right), len, h}));
}

inline Formula Formula::gen(Variable binder, Formula body) {
  Natural len = body.length() + 4;
  std::size_t h = detail::hash_combine(detail::hash_combine(0x44, binder.code()), body.hash());
  return Formula(std::make_shared<const Node>(Node{Kind::Gen, binder, {}, std::move(body), {}, len, h}));
}

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const Variable& Formula::head() const { return node_->var; }
inline const Sign& Formula::arg() const { return node_->arg; }
inline const Formula& Formula::inner() const { return *node_->a; }
inline const Formula& Formula::left() const { return *node_->a; }
inline const Formula& Formula::right() const { return *node_->b; }
inline const Variable& Formula::binder() const { return node_->var; }
inline const Formula& Formula::body() const { return *node_->a; }
inline const Natural& Formula::length() const { return node_->length; }
inline std::size_t Formula::hash() const { return node_->hash; }

inline bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.length != b.length) return false;
  switch (a.kind) {
    case Formula::Kind::Elem:
      return a.var == b.var && a.arg == b.arg;
    case Formula::Kind::Neg:
      return *a.a == *b.a;
    case Formula::Kind::Dis:
      return *a.a == *b.a && *a.b == *b.b;
    case Formula::Kind::Gen:
      return a.var == b.var && *a.a == *b.a;
  }
  return false;
}

// Derived connectives, desugared into the four primitive shapes.
inline Formula implies(Formula a, Formula b) { return Formula::dis(Formula::neg(std::move(a)), std::move(b)); }
inline Formula conj(Formula a, Formula b) {
  return Formula::neg(Formula::dis(Formula::neg(std::move(a)), Formula::neg(std::move(b))));
}
inline Formula equiv(const Formula& a, const Formula& b) { return conj(implies(a, b), implies(b, a)); }
inline Formula exists(Variable v, Formula a) {
  return Formula::neg(Formula::gen(v, Formula::neg(std::move(a))));
}

namespace detail {

inline void flatten_into(const Formula& f, SymbolString& out) {
  switch (f.kind()) {
    case Formula::Kind::Elem:
      out.push(f.head().code());
      out.push(sym::lpar);
      out.append(f.arg().symbols());
      out.push(sym::rpar);
      return;
    case Formula::Kind::Neg:
      out.push(sym::neg);
      out.push(sym::lpar);
      flatten_into(f.inner(), out);
      out.push(sym::rpar);
      return;
    case Formula::Kind::Dis:
      out.push(sym::lpar);
      flatten_into(f.left(), out);
      out.push(sym::rpar);
      out.push(sym::dis);
      out.push(sym::lpar);
      flatten_into(f.right(), out);
      out.push(sym::rpar);
      return;
    case Formula::Kind::Gen:
      out.push(f.binder().code());
      out.push(sym::gen);
      out.push(sym::lpar);
      flatten_into(f.body(), out);
      out.push(sym::rpar);
      return;
  }
}

// Reads a run-length string one symbol at a time; runs of f are consumed whole.
class SymbolCursor {
 public:
  explicit SymbolCursor(const SymbolString& s) : runs_(s.runs()) {}

  bool done() const { return ri_ >= runs_.size(); }
  std::uint64_t peek() const { return runs_[ri_].code; }
  std::optional<std::uint64_t> peek2() const {
    if (done()) return std::nullopt;
    if (used_ + 1 < runs_[ri_].count) return runs_[ri_].code;
    if (ri_ + 1 < runs_.size()) return runs_[ri_ + 1].code;
    return std::nullopt;
  }
  /// 1-based position of the next symbol.
  Natural position() const { return pos_ + 1; }
  void advance() {
    ++pos_;
    if (++used_ == runs_[ri_].count) {
      ++ri_;
      used_ = 0;
    }
  }
  /// Consumes the rest of the current run if it is `code`; returns how many.
  Natural take_all(std::uint64_t code) {
    if (done() || peek() != code) return 0;
    Natural n = runs_[ri_].count - used_;
    pos_ += n;
    ++ri_;
    used_ = 0;
    return n;
  }

 private:
  const std::vector<SymbolRun>& runs_;
  std::size_t ri_ = 0;
  Natural used_ = 0;
  Natural pos_ = 0;
};

inline std::size_t npos(const Natural& n) { return n > SIZE_MAX ? SIZE_MAX : n.convert_to<std::size_t>(); }

inline void expect(SymbolCursor& c, std::uint64_t code, const char* what) {
  if (c.done()) throw NotWellFormed(std::string("expected ") + what + ", found end", npos(c.position()));
  if (c.peek() != code) throw NotWellFormed(std::string("expected ") + what, npos(c.position()));
  c.advance();
}

inline Formula parse_formula(SymbolCursor& c, int depth) {
  if (depth > 20000) throw NotWellFormed("nesting too deep", npos(c.position()));
  if (c.done()) throw NotWellFormed("expected formula, found end", npos(c.position()));
  std::uint64_t s = c.peek();
  if (s == sym::neg) {
    c.advance();
    expect(c, sym::lpar, "'('");
    Formula inner = parse_formula(c, depth + 1);
    expect(c, sym::rpar, "')'");
    return Formula::neg(std::move(inner));
  }
  if (s == sym::lpar) {
    c.advance();
    Formula left = parse_formula(c, depth + 1);
    expect(c, sym::rpar, "')'");
    expect(c, sym::dis, "disjunction sign");
    expect(c, sym::lpar, "'('");
    Formula right = parse_formula(c, depth + 1);
    expect(c, sym::rpar, "')'");
    return Formula::dis(std::move(left), std::move(right));
  }
  auto v = Variable::from_code(s);
  if (!v) throw NotWellFormed("expected formula", npos(c.position()));
  Natural vpos = c.position();
  c.advance();
  if (c.done()) throw NotWellFormed("expected '(' or generalization sign, found end", npos(c.position()));
  if (c.peek() == sym::gen) {
    c.advance();
    expect(c, sym::lpar, "'('");
    Formula body = parse_formula(c, depth + 1);
    expect(c, sym::rpar, "')'");
    return Formula::gen(*v, std::move(body));
  }
  expect(c, sym::lpar, "'('");
  if (v->type < 2) throw NotWellFormed("type-1 variable cannot head an elementary formula", npos(vpos));
  Sign arg;
  if (v->type == 2) {
    arg.succ = c.take_all(sym::succ);
    if (c.done()) throw NotWellFormed("expected sign, found end", npos(c.position()));
    std::uint64_t b = c.peek();
    if (b != sym::zero) {
      auto bv = Variable::from_code(b);
      if (!bv || bv->type != 1) throw NotWellFormed("expected sign of type 1", npos(c.position()));
      arg.base = bv;
    }
    c.advance();
  } else {
    if (c.done()) throw NotWellFormed("expected sign, found end", npos(c.position()));
    auto bv = Variable::from_code(c.peek());
    if (!bv || bv->type + 1 != v->type) throw NotWellFormed("expected variable of type one lower", npos(c.position()));
    arg.base = bv;
    c.advance();
  }
  expect(c, sym::rpar, "')'");
  return Formula::elem(*v, std::move(arg));
}

}  // namespace detail

inline SymbolString flatten(const Formula& f) {
  SymbolString s;
  detail::flatten_into(f, s);
  return s;
}

/// Inverse of flatten. Throws NotWellFormed with the 1-based failing place.
inline Formula parse_symbols(const SymbolString& s) {
  detail::SymbolCursor c(s);
  Formula f = detail::parse_formula(c, 0);
  if (!c.done()) throw NotWellFormed("trailing symbols", detail::npos(c.position()));
  return f;
}

inline std::optional<Formula> try_parse_symbols(const SymbolString& s) {
  try {
    return parse_symbols(s);
  } catch (const NotWellFormed&) {
    return std::nullopt;
  }
}

}  // namespace arithmos

template <>
struct std::hash<arithmos::Formula> {
  std::size_t operator()(const arithmos::Formula& f) const { return f.hash(); }
};
