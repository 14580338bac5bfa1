#pragma once

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "arithmos/codec.hpp"

// Bijective base-n string numbering, its lifting to sequences of strings, and
// the enumeration of well-formed formulas in numbering order.
//
// Characters are numbered 1..n and the first character is the least
// significant digit, so f_n orders strings by length and then by their last
// character, second-to-last, and so on. The WFF enumeration ranks and unranks
// in that order by counting grammar derivations with a prescribed suffix.

namespace arithmos::numbering {

using Digits = std::vector<std::uint32_t>;

/// f_n(s) = Σ code(c_i) · n^(i-1); f_n of the empty string is 0.
inline Natural f_n(const Digits& s, std::uint32_t n) {
  if (n == 0) throw Error("alphabet size must be at least 1");
  Natural r = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (*it < 1 || *it > n) throw Error("character code outside 1.." + std::to_string(n));
    r = r * n + *it;
  }
  return r;
}

inline Digits f_n_inverse(Natural k, std::uint32_t n) {
  if (n == 0) throw Error("alphabet size must be at least 1");
  Digits out;
  while (k > 0) {
    Natural d = (k - 1) % n + 1;
    out.push_back(d.convert_to<std::uint32_t>());
    k = (k - d) / n;
  }
  return out;
}

/// g_n(S) = Π p_i^(f_n(s_i)); the empty product is 0 by the stated convention.
inline GodelNumber g_n(const std::vector<Digits>& S, std::uint32_t n) {
  if (S.empty()) return 0;
  std::vector<Natural> ex;
  bool gap = false;
  for (const auto& s : S) {
    ex.push_back(f_n(s, n));
    if (ex.back() == 0) gap = true;
  }
  if (!gap) return encode_seq(ex);
  Natural v = 1;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (ex[i] > (1u << 24)) throw TooLarge("g_n exponent too large");
    v *= pow_nat(nth_prime(i + 1), ex[i].convert_to<std::uint64_t>());
  }
  return GodelNumber(v);
}

/// Symbol codes assigned to the characters 1..n, in order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::uint64_t> codes) : codes_(std::move(codes)) {
    if (codes_.empty()) throw Error("alphabet must not be empty");
    for (std::size_t i = 0; i < codes_.size(); ++i) {
      if (!is_symbol_code(codes_[i])) throw Error(std::to_string(codes_[i]) + " is not a symbol code");
      if (!digit_.emplace(codes_[i], static_cast<std::uint32_t>(i + 1)).second)
        throw Error("duplicate symbol code " + std::to_string(codes_[i]));
    }
  }

  /// The seven primitive signs plus v1_1 and v1_2.
  static Alphabet reduced() { return Alphabet({1, 3, 5, 7, 9, 11, 13, 17, 289}); }

  /// Comma-separated symbol codes, e.g. "1,3,5,7,9,11,13,17,289".
  static Alphabet parse(const std::string& spec) {
    std::vector<std::uint64_t> codes;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
      if (a == std::string::npos) throw SyntaxError("empty alphabet entry", 0);
      item = item.substr(a, b - a + 1);
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(item, &used);
      } catch (const std::exception&) {
        throw SyntaxError("bad alphabet entry '" + item + "'", 0);
      }
      if (used != item.size()) throw SyntaxError("bad alphabet entry '" + item + "'", 0);
      codes.push_back(v);
    }
    return Alphabet(std::move(codes));
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(codes_.size()); }
  std::uint64_t code(std::uint32_t d) const { return codes_.at(d - 1); }
  std::optional<std::uint32_t> digit(std::uint64_t code) const {
    auto it = digit_.find(code);
    if (it == digit_.end()) return std::nullopt;
    return it->second;
  }
  bool has(std::uint64_t code) const { return digit_.count(code) != 0; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }

  SymbolString symbols(const Digits& s) const {
    SymbolString out;
    for (auto d : s) out.push(code(d));
    return out;
  }
  /// Digits of a symbol string, or nullopt if it uses a symbol outside the alphabet.
  std::optional<Digits> digits(const SymbolString& s) const {
    Digits out;
    if (s.size() > (1u << 20)) return std::nullopt;
    for (const auto& r : s.runs()) {
      auto d = digit(r.code);
      if (!d) return std::nullopt;
      out.insert(out.end(), r.count.convert_to<std::size_t>(), *d);
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> digit_;
};

/// WFF_L through the formula parser.
inline bool is_wff_parsed(const Alphabet& a, const Digits& s) { return try_parse_symbols(a.symbols(s)).has_value(); }

// Single-pass recognizer over characters, for scanning many strings. The
// grammar is LL(1): the first character, and for variables the second,
// selects the production.
class WffRecognizer {
 public:
  explicit WffRecognizer(const Alphabet& a) : info_(a.size() + 1) {
    for (std::uint32_t d = 1; d <= a.size(); ++d) {
      auto c = a.code(d);
      if (auto v = Variable::from_code(c)) info_[d].type = v->type;
      else info_[d].prim = c;
    }
  }

  bool operator()(const std::uint32_t* s, std::size_t n) const {
    std::size_t i = 0;
    return formula(s, n, i, 0) && i == n;
  }
  bool operator()(const Digits& s) const { return (*this)(s.data(), s.size()); }

 private:
  struct Info {
    std::uint64_t prim = 0;
    std::uint32_t type = 0;
  };
  bool is(const std::uint32_t* s, std::size_t n, std::size_t i, std::uint64_t code) const {
    return i < n && info_[s[i]].prim == code;
  }
  bool formula(const std::uint32_t* s, std::size_t n, std::size_t& i, int depth) const {
    if (i >= n || depth > 4096) return false;
    const Info& h = info_[s[i]];
    if (h.prim == sym::neg) {
      if (!is(s, n, i + 1, sym::lpar)) return false;
      i += 2;
      if (!formula(s, n, i, depth + 1) || !is(s, n, i, sym::rpar)) return false;
      ++i;
      return true;
    }
    if (h.prim == sym::lpar) {
      ++i;
      if (!formula(s, n, i, depth + 1) || !is(s, n, i, sym::rpar) || !is(s, n, i + 1, sym::dis) || !is(s, n, i + 2, sym::lpar)) return false;
      i += 3;
      if (!formula(s, n, i, depth + 1) || !is(s, n, i, sym::rpar)) return false;
      ++i;
      return true;
    }
    if (h.type == 0) return false;
    if (is(s, n, i + 1, sym::gen)) {
      if (!is(s, n, i + 2, sym::lpar)) return false;
      i += 3;
      if (!formula(s, n, i, depth + 1) || !is(s, n, i, sym::rpar)) return false;
      ++i;
      return true;
    }
    if (h.type < 2 || !is(s, n, i + 1, sym::lpar)) return false;
    i += 2;
    std::uint32_t want = h.type - 1;
    if (want == 1) {
      while (is(s, n, i, sym::succ)) ++i;
      if (i >= n) return false;
      const Info& b = info_[s[i]];
      if (b.prim != sym::zero && b.type != 1) return false;
    } else if (i >= n || info_[s[i]].type != want) {
      return false;
    }
    ++i;
    if (!is(s, n, i, sym::rpar)) return false;
    ++i;
    return true;
  }

  std::vector<Info> info_;
};

/// WFF_L on a string of characters: does it spell a formula?
inline bool is_wff(const Alphabet& a, const Digits& s) { return WffRecognizer(a)(s); }

// Counts derivations of the formula grammar restricted to an alphabet.
// Grammar: F -> h(S_t) | ¬(F) | (F)∨(F) | b∏(F), S_1 -> f…f base, S_t -> var.
class WffEnumerator {
 public:
  explicit WffEnumerator(Alphabet a) : a_(std::move(a)) { build(); }

  const Alphabet& alphabet() const { return a_; }

  /// Number of formulas with exactly `len` characters.
  Natural count(std::size_t len) {
    std::lock_guard<std::mutex> lk(mu_);
    sigma_.clear();
    return count_f(len, 0);
  }

  /// E(m): f_n of the m-th formula (0-based) in numbering order.
  Natural E(const Natural& m) { return f_n(unrank(m), a_.size()); }

  Digits unrank(Natural m) {
    std::lock_guard<std::mutex> lk(mu_);
    if (productions_.empty()) throw Error("alphabet admits no formulas");
    std::size_t len = 1;
    for (;; ++len) {
      sigma_.clear();
      Natural c = count_f(len, 0);
      if (m < c) break;
      m -= c;
      if (len > 100000) throw TooLarge("formula index too large");
    }
    Digits suffix;
    for (std::size_t pos = 0; pos < len; ++pos) {
      bool chosen = false;
      for (std::uint32_t d = 1; d <= a_.size(); ++d) {
        Digits trial;
        trial.reserve(suffix.size() + 1);
        trial.push_back(d);
        trial.insert(trial.end(), suffix.begin(), suffix.end());
        set_sigma(trial);
        Natural c = count_f(len, sigma_.size());
        if (m < c) {
          suffix = std::move(trial);
          chosen = true;
          break;
        }
        m -= c;
      }
      if (!chosen) throw Error("unrank: inconsistent counts");
    }
    return suffix;
  }

  /// h_n^{-1}(m).
  Formula wff_at(const Natural& m) { return parse_symbols(a_.symbols(unrank(m))); }

  /// h_n(f): position of f in numbering order. Throws if f uses other symbols.
  Natural wff_index(const Formula& f) {
    auto ds = a_.digits(flatten(f));
    if (!ds) throw Error("formula uses a symbol outside the alphabet");
    return rank(*ds);
  }

  Natural rank(const Digits& s) {
    std::lock_guard<std::mutex> lk(mu_);
    Natural r = 0;
    for (std::size_t len = 1; len < s.size(); ++len) {
      sigma_.clear();
      r += count_f(len, 0);
    }
    Digits suffix;
    for (std::size_t pos = s.size(); pos-- > 0;) {
      for (std::uint32_t d = 1; d < s[pos]; ++d) {
        Digits trial{d};
        trial.insert(trial.end(), suffix.begin(), suffix.end());
        set_sigma(trial);
        r += count_f(s.size(), sigma_.size());
      }
      suffix.insert(suffix.begin(), s[pos]);
    }
    return r;
  }

  /// Constructive bound for the next formula after s: f_n(¬(s)) when the
  /// alphabet has ¬ and parentheses, else f_n(b∏(s)) for some variable b.
  std::optional<Natural> successor_bound(const Digits& s) const {
    Digits w;
    if (a_.has(sym::neg) && a_.has(sym::lpar) && a_.has(sym::rpar)) {
      w = {*a_.digit(sym::neg), *a_.digit(sym::lpar)};
    } else if (!binders_.empty() && a_.has(sym::gen) && a_.has(sym::lpar) && a_.has(sym::rpar)) {
      w = {binders_.front(), *a_.digit(sym::gen), *a_.digit(sym::lpar)};
    } else {
      return std::nullopt;
    }
    w.insert(w.end(), s.begin(), s.end());
    w.push_back(*a_.digit(sym::rpar));
    return f_n(w, a_.size());
  }

 private:
  // An item is a terminal digit or a nonterminal.
  enum class Kind { Term, F, Sign };
  struct Item {
    Kind kind;
    std::uint32_t value;  // digit for Term, type for Sign
  };
  using Production = std::vector<Item>;

  void build() {
    auto d = [&](std::uint64_t c) { return a_.digit(c); };
    std::vector<Variable> vars;
    for (auto c : a_.codes())
      if (auto v = Variable::from_code(c)) vars.push_back(*v);
    for (const auto& v : vars) binders_.push_back(*d(v.code()));
    auto lp = d(sym::lpar), rp = d(sym::rpar);
    if (lp && rp) {
      for (const auto& h : vars)
        if (h.type >= 2) productions_.push_back({{Kind::Term, *d(h.code())}, {Kind::Term, *lp}, {Kind::Sign, h.type - 1}, {Kind::Term, *rp}});
      if (auto n = d(sym::neg)) productions_.push_back({{Kind::Term, *n}, {Kind::Term, *lp}, {Kind::F, 0}, {Kind::Term, *rp}});
      if (auto o = d(sym::dis))
        productions_.push_back({{Kind::Term, *lp}, {Kind::F, 0}, {Kind::Term, *rp}, {Kind::Term, *o}, {Kind::Term, *lp}, {Kind::F, 0}, {Kind::Term, *rp}});
      if (auto g = d(sym::gen))
        for (auto b : binders_) productions_.push_back({{Kind::Term, b}, {Kind::Term, *g}, {Kind::Term, *lp}, {Kind::F, 0}, {Kind::Term, *rp}});
    }
    // elementary formulas need at least one head; drop everything otherwise
    bool any_elem = false;
    for (const auto& p : productions_)
      if (p.size() == 4 && p[2].kind == Kind::Sign) any_elem = true;
    if (!any_elem) productions_.clear();
    if (auto z = d(sym::zero)) sign1_bases_.push_back(*z);
    for (const auto& v : vars) {
      if (v.type == 1) sign1_bases_.push_back(*d(v.code()));
      else sign_vars_[v.type].push_back(*d(v.code()));
    }
    succ_ = d(sym::succ);
  }

  void set_sigma(const Digits& s) {
    if (s != sigma_) {
      sigma_ = s;
      memo_sigma_.clear();
    }
  }

  static std::uint64_t key(std::size_t len, std::size_t p, std::uint32_t tag) {
    return (static_cast<std::uint64_t>(len) << 32) | (static_cast<std::uint64_t>(p) << 8) | tag;
  }

  // Formulas of length len whose last p characters are sigma_[0, p).
  Natural count_f(std::size_t len, std::size_t p) {
    if (p > len) return 0;
    auto& memo = p == 0 ? memo_plain_ : memo_sigma_;
    auto k = key(len, p, 0);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    Natural total = 0;
    if (p == len) {
      total = exact_f(0, len) ? 1 : 0;
    } else {
      for (const auto& prod : productions_) total += count_seq(prod, prod.size(), len, p);
    }
    memo.emplace(k, total);
    return total;
  }

  Natural count_sign(std::uint32_t type, std::size_t len, std::size_t p) {
    if (p > len) return 0;
    if (p == len) return exact_sign(type, 0, len) ? 1 : 0;
    if (type >= 2) {
      auto it = sign_vars_.find(type);
      if (len != 1 || it == sign_vars_.end()) return 0;
      return p == 0 ? Natural(it->second.size()) : Natural(0);
    }
    // f^(len-1) base
    if (len > 1 && !succ_) return 0;
    if (p == 0) return sign1_bases_.size();
    // p ≥ 1: the last character is the base, the rest are f
    Natural c = 0;
    for (auto b : sign1_bases_)
      if (b == sigma_[p - 1]) c = 1;
    for (std::size_t i = 0; i + 1 < p; ++i)
      if (sigma_[i] != *succ_) return 0;
    return c;
  }

  // Does sigma_[from, to) spell a formula / a sign of the type?
  bool exact_f(std::size_t from, std::size_t to) {
    Digits s(sigma_.begin() + static_cast<std::ptrdiff_t>(from), sigma_.begin() + static_cast<std::ptrdiff_t>(to));
    return is_wff_parsed(a_, s);
  }
  bool exact_sign(std::uint32_t type, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    if (type >= 2) {
      if (to - from != 1) return false;
      auto it = sign_vars_.find(type);
      if (it == sign_vars_.end()) return false;
      for (auto v : it->second)
        if (v == sigma_[from]) return true;
      return false;
    }
    for (std::size_t i = from; i + 1 < to; ++i)
      if (!succ_ || sigma_[i] != *succ_) return false;
    for (auto b : sign1_bases_)
      if (b == sigma_[to - 1]) return true;
    return false;
  }

  // Strings of length len derived from items[0, idx) whose last p characters are sigma_[0, p).
  Natural count_seq(const Production& items, std::size_t idx, std::size_t len, std::size_t p) {
    if (idx == 0) return (len == 0 && p == 0) ? 1 : 0;
    if (len < idx) return 0;  // every item takes at least one character
    const Item& it = items[idx - 1];
    if (it.kind == Kind::Term) {
      if (p > 0) {
        if (sigma_[p - 1] != it.value) return 0;
        return count_seq(items, idx - 1, len - 1, p - 1);
      }
      return count_seq(items, idx - 1, len - 1, 0);
    }
    Natural total = 0;
    std::size_t rest_min = idx - 1;
    for (std::size_t k = 1; k + rest_min <= len; ++k) {
      if (p == 0 || k >= p) {
        Natural c = it.kind == Kind::F ? count_f(k, p) : count_sign(it.value, k, p);
        if (c == 0) continue;
        Natural r = count_seq(items, idx - 1, len - k, 0);
        total += c * r;
      } else {
        bool ok = it.kind == Kind::F ? exact_f(p - k, p) : exact_sign(it.value, p - k, p);
        if (!ok) continue;
        total += count_seq(items, idx - 1, len - k, p - k);
      }
    }
    return total;
  }

  Alphabet a_;
  std::vector<Production> productions_;
  std::vector<std::uint32_t> binders_;
  std::vector<std::uint32_t> sign1_bases_;
  std::map<std::uint32_t, std::vector<std::uint32_t>> sign_vars_;
  std::optional<std::uint32_t> succ_;

  std::mutex mu_;
  Digits sigma_;
  std::unordered_map<std::uint64_t, Natural> memo_plain_;
  std::unordered_map<std::uint64_t, Natural> memo_sigma_;
};

/// The printed definition of E as a bounded μ-search: the least k above prev
/// whose string is a formula, searched up to the constructive bound (or
/// hard_limit, whichever is smaller). Used as the oracle for WffEnumerator.
inline std::optional<Natural> next_wff_by_scan(const WffEnumerator& e, const std::optional<Natural>& prev, const Natural& hard_limit) {
  const Alphabet& a = e.alphabet();
  WffRecognizer wff(a);
  std::optional<Natural> bound;
  Natural start = 0;
  if (prev) {
    bound = e.successor_bound(f_n_inverse(*prev, a.size()));
    start = *prev + 1;
  }
  for (Natural k = start; k <= hard_limit && (!bound || k <= *bound); ++k)
    if (wff(f_n_inverse(k, a.size()))) return k;
  return std::nullopt;
}

/// Every formula code in [0, limit], in increasing order, by visiting each
/// string once. The counter is incremented in place in bijective base n.
template <class Visit>
void scan_wff_codes(const Alphabet& a, std::uint64_t limit, Visit&& visit) {
  WffRecognizer wff(a);
  const std::uint32_t n = a.size();
  Digits s;
  for (std::uint64_t k = 0; k <= limit; ++k) {
    if (k > 0) {
      std::size_t i = 0;
      while (i < s.size() && s[i] == n) s[i++] = 1;
      if (i == s.size()) s.push_back(1);
      else ++s[i];
    }
    if (wff(s)) visit(k);
  }
}

}  // namespace arithmos::numbering
