#pragma once

#include <vector>

#include "arithmos/formula.hpp"
#include "arithmos/godel_number.hpp"

namespace arithmos {

/// Prime-exponent code of a sequence of naturals >= 1. encode_seq({}) = 1.
inline GodelNumber encode_seq(const std::vector<Natural>& a) {
  std::vector<Run> runs;
  runs.reserve(a.size());
  for (const auto& x : a) {
    if (x < 1) throw NotASequenceCode("sequence elements must be >= 1");
    runs.push_back(Run{GodelNumber(x), 1});
  }
  return GodelNumber::sequence(std::move(runs));
}

inline GodelNumber encode_seq(const std::vector<GodelNumber>& a) { return GodelNumber::from_terms(a); }

/// Terms of a sequence code, expanded.
inline std::vector<GodelNumber> decode_seq(const GodelNumber& g) {
  if (g.is_zero()) throw ZeroInput("0 is not a sequence code");
  if (!g.is_sequence()) throw NotASequenceCode("factorization has a prime gap");
  if (g.seq_length() > (1u << 26)) throw TooLarge("sequence too long to expand");
  std::vector<GodelNumber> out;
  for (const auto& r : g.runs()) out.insert(out.end(), r.count.convert_to<std::size_t>(), r.value);
  return out;
}

inline GodelNumber encode_symbols(const SymbolString& s) {
  std::vector<Run> runs;
  runs.reserve(s.runs().size());
  for (const auto& r : s.runs()) runs.push_back(Run{GodelNumber(r.code), r.count});
  return GodelNumber::sequence(std::move(runs));
}

/// Reads a sequence code as a symbol string. Throws NotWellFormed when a term
/// is not a symbol code.
inline SymbolString decode_symbols(const GodelNumber& g) {
  if (g.is_zero()) throw ZeroInput("0 is not a sequence code");
  if (!g.is_sequence()) throw NotASequenceCode("factorization has a prime gap");
  SymbolString s;
  Natural pos = 1;
  for (const auto& r : g.runs()) {
    auto c = r.value.as_u64();
    if (!c || !is_symbol_code(*c)) throw NotWellFormed("term is not a symbol code", detail::npos(pos));
    s.push(*c, r.count);
    pos += r.count;
  }
  return s;
}

inline std::optional<SymbolString> try_decode_symbols(const GodelNumber& g) {
  if (!g.is_sequence()) return std::nullopt;
  SymbolString s;
  for (const auto& r : g.runs()) {
    auto c = r.value.as_u64();
    if (!c || !is_symbol_code(*c)) return std::nullopt;
    s.push(*c, r.count);
  }
  return s;
}

inline GodelNumber encode_formula(const Formula& f) { return encode_symbols(flatten(f)); }

inline Formula decode_formula(const GodelNumber& g) { return parse_symbols(decode_symbols(g)); }

inline std::optional<Formula> try_decode_formula(const GodelNumber& g) {
  auto s = try_decode_symbols(g);
  if (!s) return std::nullopt;
  return try_parse_symbols(*s);
}

inline GodelNumber encode_proof(const std::vector<Formula>& fs) {
  std::vector<GodelNumber> codes;
  codes.reserve(fs.size());
  for (const auto& f : fs) codes.push_back(encode_formula(f));
  return GodelNumber::from_terms(codes);
}

inline GodelNumber encode_sign(const Sign& s) { return encode_symbols(s.symbols()); }

}  // namespace arithmos
