#pragma once

#include <fstream>
#include <regex>
#include <sstream>

#include "arithmos/proof/axioms.hpp"
#include "arithmos/surface.hpp"

namespace arithmos::proof {

/// How one line of a proof array was justified, or why it failed.
struct LineVerdict {
  std::size_t line = 0;  // 1-based
  bool ok = false;
  std::string rule;      // "axiom A1", "mp 2 1", "gen 1 v1_1"
  std::string reason;    // set when !ok
  std::string also;      // an immediate-consequence reading of an axiom line
};

struct Verdict {
  bool accepted = false;
  std::vector<LineVerdict> lines;
  std::string error;  // whole-array failure (empty array, wrong conclusion)

  std::optional<std::size_t> first_failure() const {
    for (const auto& l : lines)
      if (!l.ok) return l.line;
    return std::nullopt;
  }
  /// One `N: OK <rule>` / `N: FAIL <reason>` line per step.
  std::string trace() const {
    std::string out;
    for (const auto& l : lines)
      out += std::to_string(l.line) + (l.ok ? ": OK " + l.rule : ": FAIL " + l.reason) +
             (l.also.empty() ? "" : " (also " + l.also + ")") + "\n";
    if (!error.empty()) out += "FAIL " + error + "\n";
    return out;
  }
};

namespace detail {

inline std::string var_name(const GodelNumber& v) {
  auto var = rel::detail::as_variable(v);
  return var ? var->name() : v.value().str();
}

// Relation 43 with the witnesses: MP with y = z → x, or x = v Gen y.
inline std::optional<std::string> immediate(const std::vector<GodelNumber>& t, std::size_t n) {
  auto binder = rel::detail::gen_binder(t[n]);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q)
      if (t[p] == rel::implies_c(t[q], t[n])) return "mp " + std::to_string(p + 1) + " " + std::to_string(q + 1);
    if (binder && t[n] == rel::gen_c(*binder, t[p])) return "gen " + std::to_string(p + 1) + " " + var_name(*binder);
  }
  return std::nullopt;
}

inline std::vector<GodelNumber> proof_terms(const GodelNumber& g) {
  if (g.is_zero()) throw ZeroInput("0 is not a proof array");
  if (!g.is_sequence()) throw NotASequenceCode("proof array code has a prime gap");
  if (g.is_empty_sequence()) throw EmptyArray("a proof array needs at least one line");
  return decode_seq(g);
}

}  // namespace detail

/// Relation 44 on explicit terms, line by line.
inline Verdict check_terms(const std::vector<GodelNumber>& t, const AxiomSet& ax) {
  Verdict v;
  v.accepted = !t.empty();
  if (t.empty()) v.error = "empty proof array";
  for (std::size_t n = 0; n < t.size(); ++n) {
    LineVerdict lv{n + 1, false, "", "", ""};
    if (auto id = ax.match(t[n])) {
      lv.ok = true;
      lv.rule = "axiom " + *id;
      if (auto r = detail::immediate(t, n)) lv.also = *r;
    } else if (auto r = detail::immediate(t, n)) {
      lv.ok = true;
      lv.rule = *r;
    } else {
      lv.reason = try_decode_formula(t[n]) ? "not an axiom and no immediate consequence of earlier lines"
                                           : "not a formula";
      v.accepted = false;
    }
    v.lines.push_back(std::move(lv));
  }
  return v;
}

/// Relation 44. Throws NotASequenceCode / EmptyArray on malformed codes.
inline Verdict check_proof_array(const GodelNumber& g, const AxiomSet& ax = AxiomSet::standard()) {
  return check_terms(detail::proof_terms(g), ax);
}

/// Relation 45.
inline Verdict check_proof_of(const GodelNumber& g, const GodelNumber& target, const AxiomSet& ax = AxiomSet::standard()) {
  auto t = detail::proof_terms(g);
  Verdict v = check_terms(t, ax);
  if (!(t.back() == target)) {
    v.accepted = false;
    v.error = "last line is not the target formula";
  }
  return v;
}

inline bool proof_array(const GodelNumber& g, const AxiomSet& ax = AxiomSet::standard()) {
  try {
    return check_proof_array(g, ax).accepted;
  } catch (const Error&) {
    return false;
  }
}

inline bool proof_of(const GodelNumber& g, const GodelNumber& target, const AxiomSet& ax = AxiomSet::standard()) {
  try {
    return check_proof_of(g, target, ax).accepted;
  } catch (const Error&) {
    return false;
  }
}

// ------------------------------------------------------------ scripts

struct ScriptLine {
  std::size_t number = 0;
  std::size_t source_line = 0;
  Formula formula;
  enum class Kind { Axiom, AxiomId, MP, Gen, None } kind = Kind::None;
  std::string axiom_id;
  std::size_t p = 0, q = 0;
  std::optional<Variable> var;
};

inline std::vector<ScriptLine> parse_script(std::istream& in) {
  std::vector<ScriptLine> out;
  std::string raw;
  std::size_t src = 0;
  static const std::regex head(R"(^\s*(\d+)\s*:(.*)$)");
  while (std::getline(in, raw)) {
    ++src;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::smatch m;
    if (!std::regex_match(raw, m, head)) throw LineParseError("expected 'N: formula ; justification'", src);
    std::size_t number = std::stoul(m[1].str());
    if (number != out.size() + 1)
      throw LineParseError("line numbers must run 1, 2, 3, ... (got " + m[1].str() + ")", src);
    std::string rest = m[2].str();
    auto semi = rest.find(';');
    std::string text = rest.substr(0, semi);
    std::string just = semi == std::string::npos ? "" : rest.substr(semi + 1);
    auto formula = [&] {
      try {
        return parse_surface(text);
      } catch (const SyntaxError& e) {
        throw LineParseError(std::string("formula: ") + e.what(), src);
      }
    };
    ScriptLine line{number, src, formula(), ScriptLine::Kind::None, {}, 0, 0, std::nullopt};
    std::istringstream js(just);
    std::string word;
    js >> word;
    auto index = [&](const std::string& w) -> std::size_t {
      if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
        throw LineParseError("expected a line number, got '" + w + "'", src);
      return std::stoul(w);
    };
    if (word.empty()) {
      line.kind = ScriptLine::Kind::None;
    } else if (word == "axiom") {
      line.kind = ScriptLine::Kind::Axiom;
    } else if (word.rfind("axiom:", 0) == 0) {
      line.kind = ScriptLine::Kind::AxiomId;
      line.axiom_id = word.substr(6);
    } else if (word == "mp") {
      std::string a, b;
      js >> a >> b;
      line.kind = ScriptLine::Kind::MP;
      line.p = index(a);
      line.q = index(b);
    } else if (word == "gen") {
      std::string a, v;
      js >> a >> v;
      line.kind = ScriptLine::Kind::Gen;
      line.p = index(a);
      try {
        line.var = parse_variable(v);
      } catch (const SyntaxError&) {
        throw LineParseError("bad variable '" + v + "'", src);
      }
    } else {
      throw LineParseError("unknown justification '" + word + "'", src);
    }
    std::string extra;
    if (js >> extra) throw LineParseError("trailing text '" + extra + "'", src);
    out.push_back(std::move(line));
  }
  return out;
}

struct CompiledScript {
  GodelNumber code;
  std::vector<Formula> formulas;
  Verdict verdict;  // per-line result of the stated justifications
};

/// Checks each line against its justification and encodes the array. Lines
/// without a justification are checked like relation 44: axiom, else any
/// earlier (p, q).
inline CompiledScript compile_script(const std::vector<ScriptLine>& lines, const AxiomSet& ax = AxiomSet::standard()) {
  CompiledScript out;
  std::vector<GodelNumber> t;
  out.verdict.accepted = !lines.empty();
  if (lines.empty()) out.verdict.error = "empty proof";
  for (const auto& l : lines) {
    out.formulas.push_back(l.formula);
    t.push_back(encode_formula(l.formula));
    std::size_t n = t.size() - 1;
    LineVerdict lv{l.number, false, "", "", ""};
    auto earlier = [&](std::size_t i) { return i >= 1 && i < l.number; };
    switch (l.kind) {
      case ScriptLine::Kind::Axiom:
        if (auto id = ax.match(l.formula, t[n])) {
          lv.ok = true;
          lv.rule = "axiom " + *id;
        } else {
          lv.reason = "not an axiom";
        }
        break;
      case ScriptLine::Kind::AxiomId:
        if (ax.matches(l.axiom_id, l.formula)) {
          lv.ok = true;
          lv.rule = "axiom " + l.axiom_id;
        } else {
          lv.reason = "not an instance of " + l.axiom_id;
        }
        break;
      case ScriptLine::Kind::MP:
        if (!earlier(l.p) || !earlier(l.q)) {
          lv.reason = "mp must cite earlier lines";
        } else if (t[l.p - 1] == rel::implies_c(t[l.q - 1], t[n])) {
          lv.ok = true;
          lv.rule = "mp " + std::to_string(l.p) + " " + std::to_string(l.q);
        } else {
          lv.reason = "line " + std::to_string(l.p) + " is not line " + std::to_string(l.q) + " -> this line";
        }
        break;
      case ScriptLine::Kind::Gen:
        if (!earlier(l.p)) {
          lv.reason = "gen must cite an earlier line";
        } else if (t[n] == rel::gen_c(GodelNumber(l.var->code()), t[l.p - 1])) {
          lv.ok = true;
          lv.rule = "gen " + std::to_string(l.p) + " " + l.var->name();
        } else {
          lv.reason = "not the generalization of line " + std::to_string(l.p) + " over " + l.var->name();
        }
        break;
      case ScriptLine::Kind::None:
        if (auto id = ax.match(l.formula, t[n])) {
          lv.ok = true;
          lv.rule = "axiom " + *id;
        } else if (auto r = detail::immediate(t, n)) {
          lv.ok = true;
          lv.rule = *r;
        } else {
          lv.reason = "no justification found";
        }
        break;
    }
    if (!lv.ok) out.verdict.accepted = false;
    out.verdict.lines.push_back(std::move(lv));
  }
  out.code = GodelNumber::from_terms(t);
  return out;
}

/// Throws JustificationFailed at the first line that does not verify.
inline GodelNumber compile_script_strict(const std::vector<ScriptLine>& lines, const AxiomSet& ax = AxiomSet::standard()) {
  auto c = compile_script(lines, ax);
  if (auto bad = c.verdict.first_failure())
    throw JustificationFailed(c.verdict.lines[*bad - 1].reason, *bad);
  if (!c.verdict.accepted) throw EmptyArray(c.verdict.error);
  return c.code;
}

inline std::vector<ScriptLine> read_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_script(in);
}

// ------------------------------------------------------------ axiom files

/// Extra axioms, one `<id>: <surface formula>` per line; a line reading
/// `only-extras` drops the standard schemas. `#` starts a comment line.
inline AxiomSet parse_axiom_file(std::istream& in) {
  std::vector<std::pair<std::string, Formula>> extras;
  bool standard = true;
  std::string raw;
  std::size_t src = 0;
  static const std::regex entry(R"(^\s*([A-Za-z_][A-Za-z0-9_.-]*)\s*:(.*)$)");
  while (std::getline(in, raw)) {
    ++src;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    if (raw.substr(first, 11) == "only-extras" && raw.find_first_not_of(" \t", first + 11) == std::string::npos) {
      standard = false;
      continue;
    }
    std::smatch m;
    if (!std::regex_match(raw, m, entry)) throw LineParseError("expected '<id>: <formula>'", src);
    try {
      extras.emplace_back(m[1].str(), parse_surface(m[2].str()));
    } catch (const SyntaxError& e) {
      throw LineParseError(std::string("formula: ") + e.what(), src);
    }
  }
  AxiomSet ax = standard ? AxiomSet::standard() : AxiomSet::only_extras();
  for (auto& [id, f] : extras) ax.add(id, f);
  return ax;
}

inline AxiomSet read_axiom_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_axiom_file(in);
}

}  // namespace arithmos::proof
