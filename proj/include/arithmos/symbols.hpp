#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithmos/natural.hpp"

namespace arithmos {

/// Codes of the seven primitive signs.
namespace sym {
inline constexpr std::uint64_t zero = 1;
inline constexpr std::uint64_t succ = 3;
inline constexpr std::uint64_t neg = 5;
inline constexpr std::uint64_t dis = 7;
inline constexpr std::uint64_t gen = 9;
inline constexpr std::uint64_t lpar = 11;
inline constexpr std::uint64_t rpar = 13;
}  // namespace sym

inline constexpr bool is_primitive_code(std::uint64_t c) { return c <= 13 && (c & 1) == 1; }

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) return std::nullopt;
    r *= b;
  }
  return r;
}

inline std::uint64_t iroot(std::uint64_t x, std::uint64_t n) {
  if (n == 1) return x;
  auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(x), 1.0 / static_cast<double>(n))));
  for (std::uint64_t c = r > 2 ? r - 2 : 0; c <= r + 2; ++c) {
    auto p = checked_pow(c, n);
    if (p && *p == x) return c;
  }
  return 0;
}

}  // namespace detail

/// The index-th variable of a type: code NthPrime(index + 6) ^ type.
struct Variable {
  std::uint32_t index = 1;
  std::uint32_t type = 1;

  std::uint64_t base_prime() const { return nth_prime(std::uint64_t{index} + 6); }
  std::uint64_t code() const {
    auto c = detail::checked_pow(base_prime(), type);
    if (!c) throw TooLarge("variable code exceeds 64 bits");
    return *c;
  }
  /// Inverse of code(); nullopt when c is not a variable.
  static std::optional<Variable> from_code(std::uint64_t c) {
    if (c <= 13) return std::nullopt;
    for (std::uint64_t n = 1; n < 64; ++n) {
      std::uint64_t r = detail::iroot(c, n);
      auto least = detail::checked_pow(17, n);
      if (!least || *least > c) break;
      if (r == 0) continue;
      if (r > 13 && is_prime_u64(r)) {
        auto idx = prime_index(r);
        if (idx == 0) return std::nullopt;
        return Variable{static_cast<std::uint32_t>(idx - 6), static_cast<std::uint32_t>(n)};
      }
    }
    return std::nullopt;
  }
  std::string name() const { return "v" + std::to_string(index) + "_" + std::to_string(type); }

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline bool is_symbol_code(std::uint64_t c) { return is_primitive_code(c) || Variable::from_code(c).has_value(); }

/// A maximal block of one symbol repeated count times.
struct SymbolRun {
  std::uint64_t code;
  Natural count;
  friend bool operator==(const SymbolRun&, const SymbolRun&) = default;
};

/// Run-length symbol string. Adjacent runs always carry different codes.
class SymbolString {
 public:
  SymbolString() = default;
  SymbolString(std::initializer_list<std::uint64_t> codes) {
    for (auto c : codes) push(c);
  }
  explicit SymbolString(const std::vector<std::uint64_t>& codes) {
    for (auto c : codes) push(c);
  }

  void push(std::uint64_t code, const Natural& count = 1) {
    if (count == 0) return;
    if (!runs_.empty() && runs_.back().code == code)
      runs_.back().count += count;
    else
      runs_.push_back(SymbolRun{code, count});
    size_ += count;
  }
  void append(const SymbolString& s) {
    for (const auto& r : s.runs_) push(r.code, r.count);
  }

  const std::vector<SymbolRun>& runs() const { return runs_; }
  const Natural& size() const { return size_; }
  bool empty() const { return runs_.empty(); }

  /// Expanded codes. Throws TooLarge for astronomically long strings.
  std::vector<std::uint64_t> codes() const {
    if (size_ > (1u << 26)) throw TooLarge("symbol string too long to expand");
    std::vector<std::uint64_t> out;
    out.reserve(size_.convert_to<std::size_t>());
    for (const auto& r : runs_) out.insert(out.end(), r.count.convert_to<std::size_t>(), r.code);
    return out;
  }

  friend bool operator==(const SymbolString& a, const SymbolString& b) { return a.runs_ == b.runs_; }

 private:
  std::vector<SymbolRun> runs_;
  Natural size_ = 0;
};

}  // namespace arithmos
