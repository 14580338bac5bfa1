#pragma once

#include <vector>

#include "arithmos/godel_number.hpp"
#include "arithmos/symbols.hpp"

namespace arithmos::rel {

// Formula recognizer working directly on the exponent list of a code. It pairs
// parentheses with a stack and then checks each bracketed span against the
// four formula shapes (elementary, negation, disjunction, generalization).
// Deliberately shares no code with the recursive-descent parser so the two can
// be checked against each other.

namespace detail {

struct Tok {
  std::uint64_t code;
  std::uint32_t vtype;  // 0 unless a variable
  bool succ_run;        // a block of one or more f
};

class Recognizer {
 public:
  explicit Recognizer(std::vector<Tok> t) : t_(std::move(t)), match_(t_.size(), npos) {}

  bool run() {
    if (t_.empty()) return false;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_[i].code == sym::lpar) {
        stack.push_back(i);
      } else if (t_[i].code == sym::rpar) {
        if (stack.empty()) return false;
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    if (!stack.empty()) return false;
    return span(0, t_.size() - 1);
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bool is(std::size_t i, std::uint64_t code, std::size_t hi) const { return i <= hi && t_[i].code == code && !t_[i].succ_run; }

  bool sign(std::size_t a, std::size_t b, std::uint32_t type) const {
    if (a > b) return false;
    if (type == 1) {
      if (t_[a].succ_run) ++a;
      if (a != b) return false;
      return t_[a].code == sym::zero || t_[a].vtype == 1;
    }
    return a == b && t_[a].vtype == type;
  }

  // Does tokens [a, b] form a formula?
  bool span(std::size_t a, std::size_t b) const {
    if (a > b || b >= t_.size()) return false;
    const Tok& h = t_[a];
    if (h.succ_run) return false;
    if (h.code == sym::neg) {
      return is(a + 1, sym::lpar, b) && match_[a + 1] == b && span(a + 2, b - 1);
    }
    if (h.code == sym::lpar) {
      std::size_t k = match_[a];
      if (k >= b || !is(k + 1, sym::dis, b) || !is(k + 2, sym::lpar, b) || match_[k + 2] != b) return false;
      return span(a + 1, k - 1) && span(k + 3, b - 1);
    }
    if (h.vtype == 0) return false;
    if (is(a + 1, sym::gen, b)) {
      return is(a + 2, sym::lpar, b) && match_[a + 2] == b && span(a + 3, b - 1);
    }
    if (is(a + 1, sym::lpar, b) && match_[a + 1] == b && h.vtype >= 2) {
      return sign(a + 2, b - 1, h.vtype - 1);
    }
    return false;
  }

  std::vector<Tok> t_;
  std::vector<std::size_t> match_;
};

}  // namespace detail

/// True iff x is the code of a well-formed formula.
inline bool recognize_formula(const GodelNumber& x) {
  if (!x.is_sequence() || x.is_empty_sequence()) return false;
  std::vector<detail::Tok> toks;
  for (const auto& r : x.runs()) {
    auto c = r.value.as_u64();
    if (!c) return false;
    std::uint32_t vt = 0;
    if (!is_primitive_code(*c)) {
      auto v = Variable::from_code(*c);
      if (!v) return false;
      vt = v->type;
    }
    if (*c == sym::succ) {
      toks.push_back({*c, 0, true});
      continue;
    }
    if (r.count > (1u << 22)) throw TooLarge("run too long to recognize");
    toks.insert(toks.end(), r.count.convert_to<std::size_t>(), detail::Tok{*c, vt, false});
  }
  return detail::Recognizer(std::move(toks)).run();
}

}  // namespace arithmos::rel
