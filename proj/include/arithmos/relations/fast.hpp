#pragma once

#include <algorithm>
#include <vector>

#include "arithmos/codec.hpp"
#include "arithmos/relations/recognizer.hpp"
#include "arithmos/substitution.hpp"

// Fast evaluators for the arithmetized syntax relations. Each one is
// extensionally equal to the printed bounded definition (checked against the
// literal evaluators), including the degenerate corners those definitions
// produce on non-codes:
//   * x|y reads "x is divisible by y", so 0 is divisible by everything;
//   * n PrimeOf x is periodic in n with period Len(x)+1 (the μ restarts after
//     the largest prime divisor fails), and so is n TermOf x;
//   * x * y is 0 when both operands have length 0.

namespace arithmos::rel {

// ---------------------------------------------------------------- machine ints

namespace u64 {

inline bool divides(std::uint64_t x, std::uint64_t y) { return y == 0 ? x == 0 : x % y == 0; }

inline bool is_prime(std::uint64_t x) { return is_prime_u64(x); }

/// Distinct prime divisors of x in increasing order, with exponents.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factors(std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (x < 2) return out;
  for (std::uint64_t p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
    if (x % p) continue;
    std::uint64_t e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

inline std::uint64_t len(std::uint64_t x) { return x == 0 ? 0 : factors(x).size(); }

inline std::uint64_t prime_of(std::uint64_t n, std::uint64_t x) {
  if (x == 0) return 0;
  auto f = factors(x);
  std::uint64_t k = n % (f.size() + 1);
  return k == 0 ? 0 : f[k - 1].first;
}

inline std::uint64_t term_of(std::uint64_t n, std::uint64_t x) {
  if (x == 0) return 0;
  auto f = factors(x);
  std::uint64_t k = n % (f.size() + 1);
  return k == 0 ? 0 : f[k - 1].second;
}

}  // namespace u64

// ------------------------------------------------------------ term views

/// Exponents of x's distinct prime divisors, in increasing prime order.
inline std::vector<Run> terms_of(const GodelNumber& x) {
  if (x.is_zero()) return {};
  if (x.is_sequence()) return x.runs();
  std::vector<Run> out;
  for (const auto& [p, e] : factorize(x.plain())) out.push_back(Run{GodelNumber(e), 1});
  return out;
}

inline Natural len(const GodelNumber& x) {
  if (x.is_zero()) return 0;
  if (x.is_sequence()) return x.seq_length();
  return factorize(x.plain()).size();
}

/// The k-th term (1-based) of a run list; k must be in range.
inline const GodelNumber& run_at(const std::vector<Run>& runs, Natural k) {
  for (const auto& r : runs) {
    if (k <= r.count) return r.value;
    k -= r.count;
  }
  throw Error("term index out of range");
}

inline GodelNumber prime_of(const Natural& n, const GodelNumber& x) {
  if (x.is_zero()) return 0;
  Natural L = len(x);
  Natural k = n % (L + 1);
  if (k == 0) return 0;
  if (x.is_sequence()) {
    if (k > prime_table_size()) throw TooLarge("prime index beyond table");
    return GodelNumber(nth_prime(k.convert_to<std::uint64_t>()));
  }
  return GodelNumber(factorize(x.plain())[k.convert_to<std::size_t>() - 1].first);
}

inline GodelNumber term_of(const Natural& n, const GodelNumber& x) {
  if (x.is_zero()) return 0;
  if (!x.is_sequence()) {
    auto f = factorize(x.plain());
    std::size_t k = (n % (f.size() + 1)).convert_to<std::size_t>();
    return k == 0 ? GodelNumber(0) : GodelNumber(f[k - 1].second);
  }
  Natural k = n % (x.seq_length() + 1);
  if (k == 0) return 0;
  return run_at(x.runs(), k);
}

// ------------------------------------------------------------ relations 1-17

inline bool divides(const GodelNumber& x, const GodelNumber& y) {
  if (y.is_zero()) return x.is_zero();
  if (x.is_zero()) return true;
  auto xs = x.as_u64(), ys = y.as_u64();
  if (xs && ys) return u64::divides(*xs, *ys);
  if (y.materializable() && x.materializable()) return x.value() % y.value() == 0;
  throw TooLarge("divisibility of unmaterializable numbers");
}

inline bool is_prime_rel(const GodelNumber& x) {
  if (x.is_sequence()) return x.runs().size() == 1 && x.runs()[0].count == 1 && x.runs()[0].value == GodelNumber(1);
  return is_prime(x.plain());
}

inline Natural factorial(const Natural& n) {
  if (n > 100000) throw TooLarge("factorial argument too large");
  Natural r;
  mpz_fac_ui(r.backend().data(), n.convert_to<unsigned long>());
  return r;
}

/// Prime(0) = 0, Prime(n) = n-th prime.
inline GodelNumber nth_prime_rel(const Natural& n) {
  if (n == 0) return 0;
  if (n > prime_table_size()) throw TooLarge("prime index beyond table");
  return GodelNumber(nth_prime(n.convert_to<std::uint64_t>()));
}

inline GodelNumber concat(const GodelNumber& x, const GodelNumber& y) {
  auto a = terms_of(x);
  auto b = terms_of(y);
  if (a.empty() && b.empty()) return 0;
  a.insert(a.end(), b.begin(), b.end());
  return GodelNumber::sequence(std::move(a));
}

inline GodelNumber sym_of(const GodelNumber& x) {
  if (x.is_zero()) return GodelNumber::empty_sequence();
  return GodelNumber::sequence({Run{x, 1}});
}

inline GodelNumber paren(const GodelNumber& x) { return concat(concat(sym_of(sym::lpar), x), sym_of(sym::rpar)); }

inline bool var_of_type(const Natural& n, const GodelNumber& x) {
  if (n == 0 || x.is_sequence() || x.is_zero()) return false;
  const Natural& v = x.plain();
  if (n > bit_length(v)) return false;
  Natural r;
  if (!mpz_root(r.backend().data(), v.backend().data(), n.convert_to<unsigned long>())) return false;
  return r > 13 && is_prime(r);
}

inline bool is_var(const GodelNumber& x) {
  if (x.is_sequence() || x.is_zero()) return false;
  const Natural& v = x.plain();
  if (auto s = to_u64(v)) return Variable::from_code(*s).has_value();
  for (unsigned long n = 1; n <= bit_length(v); ++n) {
    Natural r;
    if (mpz_root(r.backend().data(), v.backend().data(), n) && r > 13 && is_prime(r)) return true;
    if (r < 17) break;
  }
  return false;
}

inline GodelNumber neg_c(const GodelNumber& x) { return concat(sym_of(sym::neg), paren(x)); }
inline GodelNumber dis_c(const GodelNumber& x, const GodelNumber& y) {
  return concat(concat(paren(x), sym_of(sym::dis)), paren(y));
}
inline GodelNumber gen_c(const GodelNumber& x, const GodelNumber& y) {
  return concat(concat(sym_of(x), sym_of(sym::gen)), paren(y));
}

/// n S x: n successor signs in front of x (0 S x = x, untouched).
inline GodelNumber iter_succ(const Natural& n, const GodelNumber& x) {
  if (n == 0) return x;
  auto t = terms_of(x);
  t.insert(t.begin(), Run{GodelNumber(sym::succ), n});
  return GodelNumber::sequence(std::move(t));
}

inline GodelNumber num(const Natural& n) { return iter_succ(n, sym_of(sym::zero)); }

// ------------------------------------------------------------ relations 18-23

namespace detail {

inline std::optional<std::uint64_t> single_small(const Run& r) {
  if (r.count != 1) return std::nullopt;
  return r.value.as_u64();
}

}  // namespace detail

inline bool type1(const GodelNumber& x) {
  if (!x.is_sequence()) return false;
  const auto& rs = x.runs();
  if (rs.empty() || rs.size() > 2) return false;
  const Run& last = rs.back();
  if (last.count != 1) return false;
  auto b = last.value.as_u64();
  if (!b) return false;
  if (rs.size() == 2 && !(rs[0].value == GodelNumber(sym::succ))) return false;
  if (*b == sym::zero) return true;
  auto v = Variable::from_code(*b);
  return v && v->type == 1;
}

inline bool type_n(const Natural& n, const GodelNumber& x) {
  if (n == 1) return type1(x);
  if (n < 2 || !x.is_sequence() || x.runs().size() != 1) return false;
  return var_of_type(n, x.runs()[0].value) && x.runs()[0].count == 1;
}

inline bool elementary(const GodelNumber& x) {
  if (!x.is_sequence()) return false;
  const auto& rs = x.runs();
  // head ( sign )
  if (rs.size() < 4 || rs.size() > 5) return false;
  auto head = detail::single_small(rs[0]);
  auto open = detail::single_small(rs[1]);
  auto close = detail::single_small(rs.back());
  if (!head || !open || !close || *open != sym::lpar || *close != sym::rpar) return false;
  auto hv = Variable::from_code(*head);
  if (!hv || hv->type < 2) return false;
  std::vector<Run> inner(rs.begin() + 2, rs.end() - 1);
  return type_n(hv->type - 1, GodelNumber::sequence(std::move(inner)));
}

inline bool is_formula(const GodelNumber& x) { return recognize_formula(x); }

namespace detail {

// First term of x if x is a sequence code starting with a variable followed by 9.
inline std::optional<GodelNumber> gen_binder(const GodelNumber& x) {
  if (!x.is_sequence() || x.runs().size() < 2) return std::nullopt;
  const auto& rs = x.runs();
  if (rs[0].count != 1 || !(rs[1].value == GodelNumber(sym::gen))) return std::nullopt;
  if (!is_var(rs[0].value)) return std::nullopt;
  return rs[0].value;
}

}  // namespace detail

inline bool op_rel(const GodelNumber& x, const GodelNumber& y, const GodelNumber& z) {
  if (x == neg_c(y)) return true;
  if (x == dis_c(y, z)) return true;
  auto v = detail::gen_binder(x);
  return v && x == gen_c(*v, y);
}

/// Relation 22: a sequence of formulas each elementary or built from earlier ones.
inline bool formula_sequence(const GodelNumber& x) {
  Natural L = len(x);
  if (L == 0) return false;
  if (L > (1u << 16)) throw TooLarge("formula sequence too long");
  std::vector<GodelNumber> t;
  for (const auto& r : terms_of(x)) t.insert(t.end(), r.count.convert_to<std::size_t>(), r.value);
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (elementary(t[n])) continue;
    bool ok = false;
    auto v = detail::gen_binder(t[n]);
    for (std::size_t p = 0; p < n && !ok; ++p) {
      if (t[n] == neg_c(t[p]) || (v && t[n] == gen_c(*v, t[p]))) ok = true;
      for (std::size_t q = 0; q < n && !ok; ++q)
        if (t[n] == dis_c(t[p], t[q])) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

// ------------------------------------------------------------ relations 24-31

namespace detail {

inline std::optional<Variable> as_variable(const GodelNumber& v) {
  auto c = v.as_u64();
  if (!c) return std::nullopt;
  return Variable::from_code(*c);
}

}  // namespace detail

inline bool bound_rel(const GodelNumber& v, const Natural& n, const GodelNumber& x) {
  if (!is_var(v) || !is_formula(x)) return false;
  auto var = detail::as_variable(v);
  if (!var) return false;
  return bound_at(decode_formula(x), *var, n);
}

/// Free places of v in x, ascending; empty unless v is a variable and x a formula.
inline std::vector<Natural> free_places(const GodelNumber& v, const GodelNumber& x) {
  if (!is_var(v) || !is_formula(x)) return {};
  auto var = detail::as_variable(v);
  if (!var) return {};
  return free_positions(decode_formula(x), *var);
}

inline bool free_at_rel(const GodelNumber& v, const Natural& n, const GodelNumber& x) {
  auto fp = free_places(v, x);
  return std::binary_search(fp.begin(), fp.end(), n);
}

inline bool free_in(const GodelNumber& v, const GodelNumber& x) { return !free_places(v, x).empty(); }

namespace detail {

// Terms [from, from+count) of a run list, 1-based.
inline std::vector<Run> slice(const std::vector<Run>& runs, Natural from, Natural count) {
  std::vector<Run> out;
  for (const auto& r : runs) {
    if (count == 0) break;
    if (from > r.count) {
      from -= r.count;
      continue;
    }
    Natural avail = r.count - from + 1;
    Natural take = avail < count ? avail : count;
    out.push_back(Run{r.value, take});
    count -= take;
    from = 1;
  }
  return out;
}

}  // namespace detail

/// Relation 27: replace the n-th term of x by the terms of y.
inline GodelNumber sb(const GodelNumber& x, const Natural& n, const GodelNumber& y) {
  if (x.is_zero()) return n == 1 ? concat(0, y) : GodelNumber(0);
  if (!x.is_sequence() || x.is_empty_sequence()) return 0;
  const Natural& L = x.seq_length();
  if (n == 0 || n > L + 1) return 0;
  if (n == L + 1) return concat(x, y);
  auto out = detail::slice(x.runs(), 1, n - 1);
  auto mid = terms_of(y);
  out.insert(out.end(), mid.begin(), mid.end());
  auto tail = detail::slice(x.runs(), n + 1, L - n);
  out.insert(out.end(), tail.begin(), tail.end());
  if (out.empty()) return 0;
  return GodelNumber::sequence(std::move(out));
}

/// Relation 28: the (k+1)-th free place of v in x counted from the right, or 0.
inline Natural st(const Natural& k, const GodelNumber& v, const GodelNumber& x) {
  auto fp = free_places(v, x);
  if (k >= fp.size()) return 0;
  return fp[fp.size() - 1 - k.convert_to<std::size_t>()];
}

inline Natural num_free(const GodelNumber& v, const GodelNumber& x) { return free_places(v, x).size(); }

/// Relation 30: Sub_k, replacing the k right-most free places of v in x by y.
inline GodelNumber sub_k(const Natural& k, const GodelNumber& x, const GodelNumber& v, const GodelNumber& y) {
  if (k == 0) return x;
  auto fp = free_places(v, x);
  if (k > fp.size()) return 0;
  GodelNumber cur = x;
  for (std::size_t i = 0; i < k; ++i) cur = sb(cur, fp[fp.size() - 1 - i], y);
  return cur;
}

inline GodelNumber sub(const GodelNumber& x, const GodelNumber& v, const GodelNumber& y) {
  auto fp = free_places(v, x);
  GodelNumber cur = x;
  for (std::size_t i = 0; i < fp.size(); ++i) cur = sb(cur, fp[fp.size() - 1 - i], y);
  return cur;
}

// ------------------------------------------------------------ relations 32-33

inline GodelNumber implies_c(const GodelNumber& x, const GodelNumber& y) { return dis_c(neg_c(x), y); }
inline GodelNumber con_c(const GodelNumber& x, const GodelNumber& y) { return neg_c(dis_c(neg_c(x), neg_c(y))); }
inline GodelNumber equal_c(const GodelNumber& x, const GodelNumber& y) {
  return con_c(implies_c(x, y), implies_c(y, x));
}
inline GodelNumber ex_c(const GodelNumber& v, const GodelNumber& y) { return neg_c(gen_c(v, neg_c(y))); }

namespace detail {

// t * (least prime divisor of t)^n, for a term t > 13.
inline GodelNumber elevate_term(const GodelNumber& t, const Natural& n) {
  if (t.is_sequence()) {
    // even: least prime divisor 2, so the first exponent grows by n
    std::vector<Run> rs = t.runs();
    GodelNumber first = GodelNumber(rs[0].value.value() + n);
    std::vector<Run> out{Run{first, 1}};
    if (rs[0].count > 1) out.push_back(Run{rs[0].value, rs[0].count - 1});
    out.insert(out.end(), rs.begin() + 1, rs.end());
    return GodelNumber::sequence(std::move(out));
  }
  const Natural& v = t.plain();
  Natural p = factorize(v).front().first;
  if (n > (1u << 20)) throw TooLarge("type elevation exponent too large");
  return GodelNumber(v * pow_nat(p, n.convert_to<std::uint64_t>()));
}

}  // namespace detail

/// Relation 33: n-th type elevation. Formulas go through the symbolic
/// elevation; other codes are elevated term by term as printed.
inline GodelNumber type_elev(const Natural& n, const GodelNumber& x) {
  if (len(x) == 0) return 0;
  if (is_formula(x) && n < (1u << 16)) {
    return encode_symbols(type_elevate_symbols(decode_symbols(x), n.convert_to<std::uint32_t>()));
  }
  std::vector<Run> out;
  for (const auto& r : terms_of(x)) {
    bool small = r.value.as_u64() && *r.value.as_u64() <= 13;
    out.push_back(Run{small ? r.value : detail::elevate_term(r.value, n), r.count});
  }
  return GodelNumber::sequence(std::move(out));
}

/// Relation 43.
inline bool imm_con_rel(const GodelNumber& x, const GodelNumber& y, const GodelNumber& z) {
  if (y == implies_c(z, x)) return true;
  auto v = detail::gen_binder(x);
  return v && x == gen_c(*v, y);
}

}  // namespace arithmos::rel
