#pragma once

#include <map>
#include <unordered_map>

#include "arithmos/relations/fast.hpp"
#include "arithmos/relations/mu.hpp"

// Literal evaluators: each relation's own printed quantifiers, μ-searches and
// recursions are iterated as written, in the printed order, with every
// iteration charged to a WorkCounter. Relations referenced inside a definition
// are evaluated by their fast counterparts (each of which is separately held
// to its own literal definition).
//
// Two exact shortcuts are used, both sound for any predicate of the stated form:
//   * Step::Stop ends a search once a conjunct of the form `x = F(i)` with F
//     strictly increasing in the loop index i has F(i) > x, or once a lower
//     bound conjunct `i > c` is known, the search starts at c + 1.
//   * one-point rule: `μz ≤ B ∃u ∃v (A(u, v) ∧ z = F(u, v))` is the least
//     F(u, v) over the (u, v) satisfying A, if that is ≤ B, and 0 otherwise.

namespace arithmos::rel::lit {

namespace detail {

inline Natural need_nat(const GodelNumber& g, const char* what) {
  if (!g.materializable(1 << 16)) throw LiteralInfeasible(std::string(what) + ": argument too large to iterate over");
  return g.value();
}

inline GodelNumber code(const Natural& n) { return GodelNumber(n); }

// x | y on naturals, with the printed reading (x divisible by y).
inline bool nat_divides(const Natural& x, const Natural& y) {
  if (y == 0) return x == 0;
  return x % y == 0;
}

}  // namespace detail

// ------------------------------------------------------------ 1-7

inline bool divides(const GodelNumber& gx, const GodelNumber& gy, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "Divides"), y = detail::need_nat(gy, "Divides");
  return exists_pruned(Limit::of(x), [&](const Natural& z) {
    Natural p = y * z;
    if (p == x) return Step::Yes;
    return (y > 0 && p > x) ? Step::Stop : Step::No;
  }, w);
}

inline bool is_prime_rel(const GodelNumber& gx, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "IsPrime");
  if (!(x > 1)) return false;
  return !exists_bounded(Limit::of(x), [&](const Natural& z) { return z != 1 && z != x && detail::nat_divides(x, z); }, w);
}

/// n PrimeOf x. The recursion depends only on the previous value, so once a
/// value repeats the rest of the sequence is periodic.
inline GodelNumber prime_of(const Natural& n, const GodelNumber& gx, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "PrimeOf");
  auto next = [&](const Natural& prev) {
    return mu_pruned(Limit::of(x), [&](const Natural& y) {
      return step_if(is_prime(y) && detail::nat_divides(x, y));
    }, w, prev + 1);
  };
  std::vector<Natural> seq{Natural(0)};
  std::map<Natural, std::size_t> seen{{Natural(0), 0}};
  for (Natural k = 0; k < n;) {
    Natural cur = next(seq.back());
    ++k;
    auto it = seen.find(cur);
    if (it != seen.end()) {
      Natural period = k - it->second;
      Natural rest = (n - k) % period;
      return detail::code(seq[it->second + rest.convert_to<std::size_t>()]);
    }
    seen.emplace(cur, seq.size());
    seq.push_back(cur);
  }
  return detail::code(seq.back());
}

inline Natural factorial(const Natural& n, WorkCounter& w) {
  Natural r = 1;
  for (Natural k = 1; k <= n; ++k) {
    w.tick();
    r *= k;
  }
  return r;
}

/// Prime(n): each step searches above the previous prime; the bound
/// Prime(k)! + 1 only matters while it is small enough to compute.
inline GodelNumber nth_prime_rel(const Natural& n, WorkCounter& w) {
  Natural cur = 0;
  for (Natural k = 0; k < n; ++k) {
    std::optional<Natural> bound;
    if (cur <= 20) bound = rel::factorial(cur) + 1;
    Natural prev = cur;
    cur = mu_pruned(bound ? Limit::of(*bound) : Limit::unreachable(),
                    [&](const Natural& y) { return step_if(is_prime(y)); }, w, prev + 1);
  }
  return detail::code(cur);
}

inline GodelNumber term_of(const Natural& n, const GodelNumber& gx, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "TermOf");
  Natural p = rel::prime_of(n, gx).value();
  return detail::code(mu_pruned(Limit::of(x), [&](const Natural& y) {
    if (p >= 2 && x > 0) {
      if (y > bit_length(x)) return Step::Stop;  // p^y > x, so x | p^y fails from here on
    }
    Natural py = p == 0 ? Natural(y == 0 ? 1 : 0) : pow_nat(p, y.convert_to<std::uint64_t>());
    bool a = detail::nat_divides(x, py);
    if (!a && p >= 2) return Step::Stop;
    bool b = detail::nat_divides(x, py * p);
    return step_if(a && !b);
  }, w));
}

inline Natural len(const GodelNumber& x, WorkCounter& w) {
  return mu_pruned(Limit::of(x), [&](const Natural& y) {
    return step_if(!rel::prime_of(y, x).is_zero() && rel::prime_of(y + 1, x).is_zero());
  }, w);
}

// ------------------------------------------------------------ 8-17

namespace detail {

inline std::vector<GodelNumber> expand_terms(const GodelNumber& x) {
  std::vector<GodelNumber> out;
  for (const auto& r : terms_of(x)) {
    if (r.count > 4096) throw LiteralInfeasible("sequence too long for literal evaluation");
    out.insert(out.end(), r.count.convert_to<std::size_t>(), r.value);
  }
  return out;
}

}  // namespace detail

inline GodelNumber concat(const GodelNumber& x, const GodelNumber& y, WorkCounter& w) {
  auto tx = detail::expand_terms(x);
  auto ty = detail::expand_terms(y);
  std::size_t lx = tx.size(), ly = ty.size();
  // Prime(Len(x) + Len(y))^(x + y)
  Limit lim = Limit::unreachable();
  if (x.materializable(256) && y.materializable(256)) {
    Natural e = x.value() + y.value();
    Natural p = lx + ly == 0 ? Natural(0) : Natural(nth_prime(lx + ly));
    if (p == 0)
      lim = Limit::of(Natural(e == 0 ? 1 : 0));
    else if (bit_length(p) * e < 4096)
      lim = Limit::of(pow_nat(p, e.convert_to<std::uint64_t>()));
  }
  return detail::code(mu_pruned(lim, [&](const Natural& z) {
    GodelNumber gz(z);
    for (std::size_t n = 0; n <= lx; ++n)
      if (!(rel::term_of(n, gz) == (n == 0 ? GodelNumber(0) : tx[n - 1]))) return Step::No;
    for (std::size_t n = 1; n <= ly; ++n)
      if (!(rel::term_of(n + lx, gz) == ty[n - 1])) return Step::No;
    return Step::Yes;
  }, w));
}

inline GodelNumber sym_of(const GodelNumber& x) { return rel::sym_of(x); }

inline GodelNumber paren(const GodelNumber& x) { return rel::concat(rel::concat(rel::sym_of(sym::lpar), x), rel::sym_of(sym::rpar)); }

inline bool var_of_type(const Natural& n, const GodelNumber& gx, WorkCounter& w) {
  if (n == 0) return false;
  Natural x = detail::need_nat(gx, "Var");
  std::uint64_t e = n > 64 * 1024 ? 64 * 1024 : n.convert_to<std::uint64_t>();
  if (bit_length(x) < e) return false;  // z^n > x already for z = 2
  return exists_pruned(Limit::of(x), [&](const Natural& z) {
    Natural zn = pow_nat(z, e);
    if (z >= 2 && zn > x) return Step::Stop;
    return step_if(z > 13 && is_prime(z) && zn == x);
  }, w);
}

inline bool is_var(const GodelNumber& gx, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "IsVar");
  return exists_pruned(Limit::of(x), [&](const Natural& n) {
    // z > 13 forces z^n >= 17^n
    if (n >= 1 && n.convert_to<double>() * 4.08 > static_cast<double>(bit_length(x)) + 1) {
      if (pow_nat(17, n.convert_to<std::uint64_t>()) > x) return Step::Stop;
    }
    return step_if(rel::var_of_type(n, gx));
  }, w);
}

inline GodelNumber neg_c(const GodelNumber& x) { return rel::concat(rel::sym_of(sym::neg), rel::paren(x)); }
inline GodelNumber dis_c(const GodelNumber& x, const GodelNumber& y) {
  return rel::concat(rel::concat(rel::paren(x), rel::sym_of(sym::dis)), rel::paren(y));
}
inline GodelNumber gen_c(const GodelNumber& x, const GodelNumber& y) {
  return rel::concat(rel::concat(rel::sym_of(x), rel::sym_of(sym::gen)), rel::paren(y));
}

inline GodelNumber iter_succ(const Natural& n, const GodelNumber& x, WorkCounter& w) {
  GodelNumber cur = x;
  for (Natural k = 0; k < n; ++k) {
    w.tick();
    cur = rel::concat(rel::sym_of(sym::succ), cur);
  }
  return cur;
}

inline GodelNumber num(const Natural& n, WorkCounter& w) { return iter_succ(n, rel::sym_of(sym::zero), w); }

// ------------------------------------------------------------ 18-23

inline bool type1(const GodelNumber& x, WorkCounter& w) {
  // ∃m ≤ x ∃n ≤ x ([m = 1 ∨ 1 Var m] ∧ x = n S Sym(m)); loops ordered n outer.
  return exists_pruned(Limit::of(x), [&](const Natural& n) {
    if (rel::iter_succ(n, rel::sym_of(1)) > x) return Step::Stop;  // least value over m ≥ 1
    bool found = exists_pruned(Limit::of(x), [&](const Natural& m) {
      if (m == 0) return Step::No;  // Sym(0) = 1 is neither 0 nor a variable
      GodelNumber cand = rel::iter_succ(n, rel::sym_of(detail::code(m)));
      if (cand > x) return Step::Stop;
      return step_if((m == 1 || rel::var_of_type(1, detail::code(m))) && cand == x);
    }, w);
    return step_if(found);
  }, w);
}

inline bool type_n(const Natural& n, const GodelNumber& x, WorkCounter& w) {
  if (n == 1) return rel::type1(x);
  if (!(n > 1)) return false;
  return exists_pruned(Limit::of(x), [&](const Natural& v) {
    GodelNumber s = rel::sym_of(detail::code(v));
    if (s > x) return Step::Stop;
    return step_if(rel::var_of_type(n, detail::code(v)) && s == x);
  }, w);
}

inline bool elementary(const GodelNumber& gx, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "EF");
  // y = 0 is never a witness, and its inner loops run in full
  w.require((x + 1) * (x + 1), "EF");
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& y) {
    GodelNumber gy = detail::code(y);
    GodelNumber ey = rel::paren(gy);
    return exists_bounded(lim, [&](const Natural& z) {
      GodelNumber gz = detail::code(z);
      return exists_bounded(lim, [&](const Natural& n) {
        return rel::type_n(n, gy) && rel::type_n(n + 1, gz) && rel::concat(gz, ey) == gx;
      }, w);
    }, w);
  }, w);
}

inline bool op_rel(const GodelNumber& x, const GodelNumber& y, const GodelNumber& z, WorkCounter& w) {
  if (x == rel::neg_c(y)) return true;
  if (x == rel::dis_c(y, z)) return true;
  return exists_pruned(Limit::of(x), [&](const Natural& v) {
    GodelNumber g = rel::gen_c(detail::code(v), y);
    if (v >= 1 && g > x) return Step::Stop;  // 2^v · (terms independent of v)
    return step_if(rel::is_var(detail::code(v)) && g == x);
  }, w);
}

inline bool formula_sequence(const GodelNumber& x, WorkCounter& w) {
  Natural L = rel::len(x);
  if (!(L > 0)) return false;
  for (Natural n = 0; n <= L; ++n) {
    w.tick();
    if (n == 0) continue;
    GodelNumber tn = rel::term_of(n, x);
    if (rel::elementary(tn)) continue;
    bool ok = false;
    for (Natural p = 0; p < n && !ok; ++p) {
      for (Natural q = 0; q < n && !ok; ++q) {
        w.tick();
        ok = p > 0 && q > 0 && rel::op_rel(tn, rel::term_of(p, x), rel::term_of(q, x));
      }
    }
    if (!ok) return false;
  }
  return true;
}

inline bool is_formula(const GodelNumber& x, WorkCounter& w) {
  Natural L = rel::len(x);
  // Prime(Len(x)^2)^(x · Len(x)^2)
  std::optional<Natural> bound;
  if (x.materializable(64)) {
    Natural e = x.value() * L * L;
    Natural p = L == 0 ? Natural(0) : Natural(rel::nth_prime_rel(L * L).value());
    if (p == 0)
      bound = Natural(e == 0 ? 1 : 0);
    else if (e < 4096 && bit_length(p) * e < 4096)
      bound = pow_nat(p, e.convert_to<std::uint64_t>());
  }
  // a witness n has x as a term, so n ≥ 2^x
  if (rel::is_formula(x)) {
    if (!x.materializable(64) || x.value() > 4096) throw LiteralInfeasible("IsFormula: the least witness is at least 2^x");
    Natural least = pow_nat(2, x.value().convert_to<std::uint64_t>());
    w.require(bound && *bound < least ? *bound + 1 : least, "IsFormula");
  } else {
    if (!bound) throw LiteralInfeasible("IsFormula: bound too large to iterate to");
    w.require(*bound + 1, "IsFormula");
  }
  Limit lim = bound ? Limit::of(*bound) : Limit::unreachable();
  return exists_bounded(lim, [&](const Natural& n) {
    GodelNumber gn = detail::code(n);
    return rel::formula_sequence(gn) && x == rel::term_of(rel::len(gn), gn);
  }, w);
}

// ------------------------------------------------------------ 24-31

inline bool bound_rel(const GodelNumber& v, const Natural& n, const GodelNumber& gx, WorkCounter& w) {
  if (!rel::is_var(v) || !rel::is_formula(gx)) return false;
  Natural x = detail::need_nat(gx, "Bound");
  w.require((x + 1) * (x + 1), "Bound");  // a = 0 runs the b and c loops in full
  Limit lim = Limit::of(x);
  return exists_bounded(lim, [&](const Natural& a) {
    GodelNumber ga = detail::code(a);
    Natural la = rel::len(ga);
    return exists_bounded(lim, [&](const Natural& b) {
      GodelNumber gb = detail::code(b);
      GodelNumber g = rel::gen_c(v, gb);
      return exists_bounded(lim, [&](const Natural& c) {
        return rel::concat(rel::concat(ga, g), detail::code(c)) == gx && rel::is_formula(gb) && la + 1 <= n &&
               n <= la + rel::len(g);
      }, w);
    }, w);
  }, w);
}

namespace detail {

// Memo of the fast `v Free n, x` for one (v, x).
class FreeMemo {
 public:
  FreeMemo(const GodelNumber& v, const GodelNumber& x) : v_(v), x_(x) {}
  bool at(const Natural& n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    bool r = rel::free_at_rel(v_, n, x_);
    memo_.emplace(n, r);
    return r;
  }

 private:
  GodelNumber v_, x_;
  std::map<Natural, bool> memo_;
};

}  // namespace detail

inline bool free_at_rel(const GodelNumber& v, const Natural& n, const GodelNumber& x) {
  return rel::is_var(v) && rel::is_formula(x) && v == rel::term_of(n, x) && n <= rel::len(x) && !rel::bound_rel(v, n, x);
}

inline bool free_in(const GodelNumber& v, const GodelNumber& x, WorkCounter& w) {
  return exists_bounded(Limit::of(rel::len(x)), [&](const Natural& n) { return rel::free_at_rel(v, n, x); }, w);
}

/// Sb x(n / y), through the one-point rule on z.
inline GodelNumber sb(const GodelNumber& gx, const Natural& n, const GodelNumber& y, WorkCounter& w) {
  Natural x = detail::need_nat(gx, "Sb");
  // the outer loop keeps the least z, so it always runs to the end
  w.require(x + 1, "Sb");
  Limit lim = Limit::of(x);
  GodelNumber sym_t = rel::sym_of(rel::term_of(n, gx));
  std::optional<GodelNumber> best;
  exists_bounded(lim, [&](const Natural& u) {
    GodelNumber gu = detail::code(u);
    if (!(n == rel::len(gu) + 1)) return false;
    GodelNumber head = rel::concat(gu, sym_t);
    exists_bounded(lim, [&](const Natural& v) {
      GodelNumber gv = detail::code(v);
      if (rel::concat(head, gv) == gx) {
        GodelNumber z = rel::concat(rel::concat(gu, y), gv);
        if (!best || z < *best) best = z;
      }
      return false;
    }, w);
    return false;
  }, w);
  if (!best) return 0;
  // μz ≤ Prime(Len(x) + Len(y))^(x + y); skipped when the bound is astronomically
  // above every candidate
  Natural lx = rel::len(gx), ly = rel::len(y);
  if (y.materializable(256)) {
    Natural e = x + y.value();
    if (lx + ly == 0) {
      if (*best > GodelNumber(e == 0 ? 1 : 0)) return 0;
    } else {
      Natural p = rel::nth_prime_rel(lx + ly).value();
      if (bit_length(p) * e < (1u << 20) && *best > GodelNumber(pow_nat(p, e.convert_to<std::uint64_t>()))) return 0;
    }
  }
  return *best;
}

/// k St v, x, following the recursion from 0 St upward.
inline Natural st(const Natural& k, const GodelNumber& v, const GodelNumber& x, WorkCounter& w) {
  detail::FreeMemo fr(v, x);
  Natural L = rel::len(x);
  // 0 St: μn ≤ Len(x) (v Free n, x ∧ ¬∃p ≤ Len(x) [p > n ∧ v Free p, x])
  auto search = [&](const Natural& top, bool inclusive) {
    Limit lim = Limit::of(inclusive ? top : (top == 0 ? Natural(0) : Natural(top - 1)));
    if (!inclusive && top == 0) return Natural(0);
    return mu_pruned(lim, [&](const Natural& n) {
      if (!fr.at(n)) return Step::No;
      bool later = exists_bounded(lim, [&](const Natural& p) { return p > n && fr.at(p); }, w);
      return step_if(!later);
    }, w);
  };
  Natural cur = search(L, true);
  for (Natural j = 0; j < k; ++j) cur = search(cur, false);
  return cur;
}

inline Natural num_free(const GodelNumber& v, const GodelNumber& x, WorkCounter& w) {
  return mu_pruned(Limit::of(rel::len(x)), [&](const Natural& n) { return step_if(rel::st(n, v, x) == 0); }, w);
}

inline GodelNumber sub_k(const Natural& k, const GodelNumber& x, const GodelNumber& v, const GodelNumber& y, WorkCounter& w) {
  GodelNumber cur = x;
  for (Natural j = 0; j < k; ++j) {
    w.tick();
    cur = rel::sb(cur, rel::st(j, v, x), y);
  }
  return cur;
}

inline GodelNumber sub(const GodelNumber& x, const GodelNumber& v, const GodelNumber& y, WorkCounter& w) {
  return sub_k(rel::num_free(v, x), x, v, y, w);
}

// ------------------------------------------------------------ 32-33, 43

inline GodelNumber implies_c(const GodelNumber& x, const GodelNumber& y) { return rel::dis_c(rel::neg_c(x), y); }
inline GodelNumber con_c(const GodelNumber& x, const GodelNumber& y) {
  return rel::neg_c(rel::dis_c(rel::neg_c(x), rel::neg_c(y)));
}
inline GodelNumber equal_c(const GodelNumber& x, const GodelNumber& y) {
  return rel::con_c(rel::implies_c(x, y), rel::implies_c(y, x));
}
inline GodelNumber ex_c(const GodelNumber& v, const GodelNumber& y) { return rel::neg_c(rel::gen_c(v, rel::neg_c(y))); }

/// n Th x, reading `1 PrimeOf (k TermOf x)^n` as (1 PrimeOf (k TermOf x))^n.
inline GodelNumber type_elev(const Natural& n, const GodelNumber& x, WorkCounter& w) {
  std::optional<Natural> bound;
  if (x.materializable(64)) {
    Natural xv = x.value();
    if (xv <= 1) {
      bound = xv;
    } else if (n < 64) {
      Natural xn = pow_nat(xv, n.convert_to<std::uint64_t>());
      if (bit_length(xv) * xn < 4096) bound = pow_nat(xv, xn.convert_to<std::uint64_t>());
    }
  }
  // the search runs up to the least solution, which the fast evaluator knows
  GodelNumber least = rel::type_elev(n, x);
  if (!least.materializable(128)) throw LiteralInfeasible("Th: the least solution is far beyond any work ceiling");
  w.require(bound && *bound < least.value() ? *bound + 1 : least.value() + 1, "Th");
  Limit lim = bound ? Limit::of(*bound) : Limit::unreachable();
  Natural L = rel::len(x);
  std::vector<GodelNumber> tx;
  for (Natural k = 0; k <= L; ++k) tx.push_back(rel::term_of(k, x));
  return detail::code(mu_pruned(lim, [&](const Natural& y) {
    GodelNumber gy = detail::code(y);
    for (Natural k = 0; k <= L; ++k) {
      const GodelNumber& t = tx[k.convert_to<std::size_t>()];
      GodelNumber ty = rel::term_of(k, gy);
      bool small = t <= GodelNumber(13);
      if (small) {
        if (!(ty == t)) return Step::No;
      } else {
        Natural p = rel::prime_of(1, t).value();
        if (!(ty == GodelNumber(t.value() * pow_nat(p, n.convert_to<std::uint64_t>())))) return Step::No;
      }
    }
    return Step::Yes;
  }, w));
}

inline bool imm_con_rel(const GodelNumber& x, const GodelNumber& y, const GodelNumber& z, WorkCounter& w) {
  if (y == rel::implies_c(z, x)) return true;
  return exists_pruned(Limit::of(x), [&](const Natural& v) {
    GodelNumber g = rel::gen_c(detail::code(v), y);
    if (v >= 1 && g > x) return Step::Stop;
    return step_if(rel::is_var(detail::code(v)) && g == x);
  }, w);
}

}  // namespace arithmos::rel::lit
