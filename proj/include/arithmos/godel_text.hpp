#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "arithmos/godel_number.hpp"

namespace arithmos {

// Factored text: `2^289 * 3^11 * 5^17 * 7^13`. Exponents that are themselves
// large sequence codes nest in parentheses. Long runs of one exponent over
// consecutive primes print as `p[i..j]^e` (prime indexes i through j), which is
// what keeps numerals of huge numbers printable.

namespace detail {

inline constexpr std::uint64_t decimal_limit = 1000000;
inline constexpr std::uint64_t run_abbrev = 8;

inline std::string format_factored_impl(const GodelNumber& g);

inline std::string format_exponent(const GodelNumber& e) {
  if (!e.is_sequence()) return e.plain().str();
  if (e.log2_estimate() < 20 && e.value() < decimal_limit) return e.value().str();
  return "(" + format_factored_impl(e) + ")";
}

inline std::string format_factored_impl(const GodelNumber& g) {
  if (g.is_zero()) return "0";
  if (!g.is_sequence()) {
    std::vector<std::pair<Natural, Natural>> fs;
    try {
      fs = factorize(g.plain());
    } catch (const TooLarge&) {
      return g.plain().str();
    }
    std::string out;
    for (const auto& [p, e] : fs) {
      if (!out.empty()) out += " * ";
      out += p.str() + "^" + e.str();
    }
    return out;
  }
  if (g.is_empty_sequence()) return "1";
  std::string out;
  Natural index = 1;
  const Natural table = prime_table_size();
  for (const auto& r : g.runs()) {
    std::string e = format_exponent(r.value);
    if (r.count >= run_abbrev) {
      if (!out.empty()) out += " * ";
      out += "p[" + index.str() + ".." + (index + r.count - 1).str() + "]^" + e;
      index += r.count;
      continue;
    }
    for (std::uint64_t k = 0; k < r.count.convert_to<std::uint64_t>(); ++k, ++index) {
      if (!out.empty()) out += " * ";
      if (index <= table)
        out += std::to_string(nth_prime(index.convert_to<std::uint64_t>())) + "^" + e;
      else
        out += "p[" + index.str() + "]^" + e;
    }
  }
  return out;
}

class FactoredParser {
 public:
  explicit FactoredParser(std::string_view s) : s_(s) {}

  GodelNumber parse_all() {
    GodelNumber g = product();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return g;
  }

 private:
  struct Factor {
    Natural index;  // 0 when the base is a prime outside the table or not prime
    Natural base;
    Natural count;
    GodelNumber exponent;
  };

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i_); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Natural digits() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return Natural(std::string(s_.substr(start, i_ - start)));
  }

  GodelNumber exponent() {
    if (eat('(')) {
      GodelNumber g = product();
      if (!eat(')')) fail("expected ')'");
      return g;
    }
    return GodelNumber(digits());
  }

  Factor factor() {
    skip();
    Factor f;
    if (i_ < s_.size() && s_[i_] == 'p') {
      ++i_;
      if (!eat('[')) fail("expected '['");
      Natural a = digits();
      Natural b = a;
      skip();
      if (s_.substr(i_, 2) == "..") {
        i_ += 2;
        b = digits();
      }
      if (!eat(']')) fail("expected ']'");
      if (a < 1 || b < a) fail("bad prime index range");
      f.index = a;
      f.count = b - a + 1;
    } else {
      f.base = digits();
      f.count = 1;
      auto small = to_u64(f.base);
      if (small && *small <= detail::prime_table().primes.back()) f.index = prime_index(*small);
    }
    f.exponent = eat('^') ? exponent() : GodelNumber(1);
    return f;
  }

  GodelNumber product() {
    std::vector<Factor> fs;
    fs.push_back(factor());
    while (eat('*')) fs.push_back(factor());
    if (fs.size() == 1 && fs[0].index == 0 && fs[0].exponent == GodelNumber(1)) return GodelNumber(fs[0].base);
    bool contiguous = true;
    Natural next = 1;
    for (const auto& f : fs) {
      if (f.index == 0 || f.index != next || f.exponent.is_zero()) contiguous = false;
      next = f.index + f.count;
    }
    if (contiguous) {
      std::vector<Run> runs;
      for (auto& f : fs) runs.push_back(Run{f.exponent, f.count});
      return GodelNumber::sequence(std::move(runs));
    }
    Natural value = 1;
    Natural last = 0;
    for (const auto& f : fs) {
      if (f.index == 0 && f.base == 0) fail("prime index ranges must start at 1 and be contiguous");
      if (f.count > 4096) throw TooLarge("gapped factored number too large");
      for (Natural k = 0; k < f.count; ++k) {
        Natural p = f.index != 0 ? Natural(nth_prime((f.index + k).convert_to<std::uint64_t>())) : f.base;
        if (!is_prime(p)) fail("factor base is not prime");
        if (p <= last) fail("primes must be strictly increasing");
        last = p;
        if (!f.exponent.materializable(1 << 20)) throw TooLarge("exponent too large");
        Natural e = f.exponent.value();
        if (e > (1u << 24)) throw TooLarge("exponent too large");
        value *= pow_nat(p, e.convert_to<std::uint64_t>());
      }
    }
    return GodelNumber(value);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline std::string format_factored(const GodelNumber& g) { return detail::format_factored_impl(g); }

inline std::string format_decimal(const GodelNumber& g) { return g.value().str(); }

/// Decimal up to 10^6, factored above.
inline std::string format_auto(const GodelNumber& g) {
  if (g.log2_estimate() < 20 && g.value() <= detail::decimal_limit) return g.value().str();
  return format_factored(g);
}

/// Accepts decimal digits or the factored form.
inline GodelNumber parse_godel(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  text = text.substr(a, b - a);
  if (text.empty()) throw SyntaxError("empty number", 0);
  bool plain = true;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) plain = false;
  if (plain) return GodelNumber(Natural(std::string(text)));
  return detail::FactoredParser(text).parse_all();
}

}  // namespace arithmos
