#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "arithmos/formula.hpp"

namespace arithmos {

// Surface grammar, whitespace-insensitive:
//   F    := ~(F) | (F)|(F) | (F)->(F) | (F)&(F) | (F)<->(F) | (F)
//         | ALL var (F) | EX var (F) | var(sign)
//   sign := 0 | f sign | f^<k> sign | var
//   var  := v<index>_<type>
// `f^<k>` abbreviates k successor signs so numerals of huge numbers stay printable.

namespace detail {

class SurfaceParser {
 public:
  explicit SurfaceParser(std::string_view text) : s_(text) {}

  Formula formula_only() {
    Formula f = formula();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return f;
  }
  Sign sign_only() {
    Sign t = sign();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return t;
  }
  Variable variable_only() {
    skip();
    Variable v = variable();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void need(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  bool at_keyword(std::string_view kw) {
    skip();
    if (s_.substr(i_, kw.size()) != kw) return false;
    std::size_t j = i_ + kw.size();
    return j >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[j]));
  }

  Natural number() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return Natural(std::string(s_.substr(start, i_ - start)));
  }

  Variable variable() {
    skip();
    if (i_ >= s_.size() || s_[i_] != 'v') fail("expected variable");
    ++i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected variable index");
    Natural idx = number();
    if (i_ >= s_.size() || s_[i_] != '_') fail("expected '_' in variable");
    ++i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected variable type");
    Natural type = number();
    if (idx < 1 || type < 1) fail("variable index and type start at 1");
    if (idx >= prime_table_size() - 6 || type > 64) fail("variable out of range");
    return Variable{idx.convert_to<std::uint32_t>(), type.convert_to<std::uint32_t>()};
  }

  Sign sign() {
    Natural succ = 0;
    for (;;) {
      skip();
      if (i_ < s_.size() && s_[i_] == 'f') {
        ++i_;
        if (i_ < s_.size() && s_[i_] == '^') {
          ++i_;
          succ += number();
        } else {
          succ += 1;
        }
        continue;
      }
      break;
    }
    skip();
    if (i_ < s_.size() && s_[i_] == '0') {
      ++i_;
      return Sign{succ, std::nullopt};
    }
    std::size_t at = i_;
    Variable v = variable();
    if (succ > 0 && v.type != 1) {
      i_ = at;
      fail("successor applied to a variable of type > 1");
    }
    return Sign{succ, v};
  }

  Formula formula() {
    skip();
    std::size_t at = i_;
    if (eat("~")) {
      need("(");
      Formula inner = formula();
      need(")");
      return Formula::neg(std::move(inner));
    }
    if (at_keyword("ALL") || at_keyword("EX")) {
      bool all = at_keyword("ALL");
      i_ += all ? 3 : 2;
      Variable v = variable();
      need("(");
      Formula body = formula();
      need(")");
      return all ? Formula::gen(v, std::move(body)) : exists(v, std::move(body));
    }
    if (eat("(")) {
      Formula left = formula();
      need(")");
      skip();
      enum class Op { None, Or, Imp, And, Iff } op = Op::None;
      if (eat("<->"))
        op = Op::Iff;
      else if (eat("->"))
        op = Op::Imp;
      else if (eat("|"))
        op = Op::Or;
      else if (eat("&"))
        op = Op::And;
      if (op == Op::None) return left;
      need("(");
      Formula right = formula();
      need(")");
      switch (op) {
        case Op::Or:
          return Formula::dis(std::move(left), std::move(right));
        case Op::Imp:
          return implies(std::move(left), std::move(right));
        case Op::And:
          return conj(std::move(left), std::move(right));
        case Op::Iff:
          return equiv(left, right);
        case Op::None:
          break;
      }
    }
    if (i_ < s_.size() && s_[i_] == 'v') {
      Variable head = variable();
      need("(");
      std::size_t arg_at = i_;
      Sign arg = sign();
      need(")");
      if (head.type != arg.type() + 1) {
        i_ = arg_at;
        fail("head type must be argument type + 1");
      }
      return Formula::elem(head, std::move(arg));
    }
    i_ = at;
    fail("expected formula");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Formula parse_surface(std::string_view text) { return detail::SurfaceParser(text).formula_only(); }
inline Sign parse_sign(std::string_view text) { return detail::SurfaceParser(text).sign_only(); }
inline Variable parse_variable(std::string_view text) { return detail::SurfaceParser(text).variable_only(); }

inline std::string print_sign(const Sign& t) {
  std::string out;
  if (t.succ > 8) {
    out = "f^" + t.succ.str() + " ";
  } else {
    out.append(t.succ.convert_to<std::size_t>(), 'f');
  }
  out += t.base ? t.base->name() : "0";
  return out;
}

inline std::string print_surface(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Elem:
      return f.head().name() + "(" + print_sign(f.arg()) + ")";
    case Formula::Kind::Neg:
      return "~(" + print_surface(f.inner()) + ")";
    case Formula::Kind::Dis:
      return "(" + print_surface(f.left()) + ")|(" + print_surface(f.right()) + ")";
    case Formula::Kind::Gen:
      return "ALL " + f.binder().name() + " (" + print_surface(f.body()) + ")";
  }
  return {};
}

}  // namespace arithmos
