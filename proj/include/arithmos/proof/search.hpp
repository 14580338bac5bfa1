#pragma once

#include <algorithm>
#include <chrono>
#include <stop_token>
#include <unordered_set>

#include "arithmos/proof/checker.hpp"

// Bounded stand-ins for relation 46. A search enumerates candidate proof
// arrays in increasing code order and stops at the first one that checks. The
// candidates are the arrays of at most max_lines lines that end in the target
// and draw their other lines from a finite pool: the target, caller hints, the
// axiom set's seeds, and everything reachable from those by stripping a
// generalization or splitting an implication. Exhaustion never means the
// target is unprovable.

namespace arithmos::proof {

/// At least one ceiling must be set.
struct SearchBudget {
  std::optional<std::uint64_t> max_candidates;
  std::optional<GodelNumber> max_candidate_code;
  std::optional<std::chrono::milliseconds> wall_clock;

  static SearchBudget candidates(std::uint64_t n) { return {n, std::nullopt, std::nullopt}; }
  static SearchBudget code(GodelNumber c) { return {std::nullopt, std::move(c), std::nullopt}; }
};

struct SearchOptions {
  std::size_t max_lines = 3;
  std::size_t pool_limit = 12;
  std::vector<Formula> hints;
};

struct SearchResult {
  enum class Stop { Found, Candidates, Code, Time, Cancelled, Space };
  Stop stop = Stop::Space;
  std::optional<GodelNumber> witness;
  std::vector<Formula> proof;
  std::uint64_t examined = 0;  // candidates checked so far, over all runs
  std::uint64_t total = 0;     // size of the candidate space
  std::optional<GodelNumber> frontier;  // code of the next unchecked candidate

  bool found() const { return stop == Stop::Found; }
  std::string stop_name() const {
    switch (stop) {
      case Stop::Found: return "found";
      case Stop::Candidates: return "candidate budget";
      case Stop::Code: return "code budget";
      case Stop::Time: return "wall clock";
      case Stop::Cancelled: return "cancelled";
      case Stop::Space: return "candidate space exhausted";
    }
    return "";
  }
};

class ProvSearch {
 public:
  using Accept = std::function<bool(const GodelNumber& candidate)>;

  ProvSearch(const Formula& target, AxiomSet ax, SearchOptions opt = {}) : target_(target), ax_(std::move(ax)), opt_(std::move(opt)) {
    target_code_ = encode_formula(target_);
    build();
  }

  /// Replaces the ProofOf test (Rosser search). Must be set before run().
  void set_accept(Accept a) { accept_ = std::move(a); }

  const Formula& target() const { return target_; }
  const std::vector<Formula>& pool() const { return pool_; }
  std::uint64_t space() const { return cands_.size(); }

  /// Continues from the frontier until a witness, a ceiling, or cancellation.
  /// Ceilings are totals, so running again with a larger budget resumes.
  SearchResult run(const SearchBudget& b, std::stop_token stop = {}) {
    if (!b.max_candidates && !b.max_candidate_code && !b.wall_clock) throw Error("search budget needs at least one ceiling");
    auto start = std::chrono::steady_clock::now();
    SearchResult r;
    r.total = cands_.size();
    while (next_ < cands_.size()) {
      const Candidate& c = cands_[next_];
      if (found_ && *found_ == next_) return finish(r, SearchResult::Stop::Found);
      if (stop.stop_requested()) return finish(r, SearchResult::Stop::Cancelled);
      if (b.max_candidates && next_ >= *b.max_candidates) return finish(r, SearchResult::Stop::Candidates);
      if (b.max_candidate_code && c.code > *b.max_candidate_code) return finish(r, SearchResult::Stop::Code);
      if (b.wall_clock && std::chrono::steady_clock::now() - start > *b.wall_clock) return finish(r, SearchResult::Stop::Time);
      if (accept_ ? accept_(c.code) : check_proof_of(c.code, target_code_, ax_).accepted) {
        found_ = next_;
        return finish(r, SearchResult::Stop::Found);
      }
      ++next_;
    }
    return finish(r, SearchResult::Stop::Space);
  }

 private:
  struct Candidate {
    std::vector<std::uint32_t> lines;  // pool indexes
    GodelNumber code;
  };

  void add(const Formula& f) {
    if (pool_.size() >= opt_.pool_limit) return;
    GodelNumber g = encode_formula(f);
    if (seen_.insert(g).second) {
      pool_.push_back(f);
      codes_.push_back(g);
    }
  }

  void build() {
    add(target_);
    for (const auto& h : opt_.hints) add(h);
    for (const auto& s : ax_.seeds()) add(s);
    for (std::size_t i = 0; i < pool_.size() && pool_.size() < opt_.pool_limit; ++i) {
      Formula f = pool_[i];
      shape::P a, b;
      if (f.kind() == Formula::Kind::Gen) add(f.body());
      if (shape::implies(f, a, b)) {
        add(*a);
        add(*b);
      }
    }
    // every sequence of pool lines of length < max_lines, followed by the target
    std::vector<std::vector<std::uint32_t>> prefixes{{}};
    for (std::size_t len = 1; len < opt_.max_lines; ++len) {
      std::vector<std::vector<std::uint32_t>> grown;
      for (const auto& p : prefixes)
        if (p.size() == len - 1)
          for (std::uint32_t i = 0; i < pool_.size(); ++i) {
            auto q = p;
            q.push_back(i);
            grown.push_back(std::move(q));
          }
      prefixes.insert(prefixes.end(), grown.begin(), grown.end());
    }
    for (auto& p : prefixes) {
      p.push_back(0);
      std::vector<GodelNumber> terms;
      for (auto i : p) terms.push_back(codes_[i]);
      cands_.push_back({p, GodelNumber::from_terms(terms)});
    }
    std::sort(cands_.begin(), cands_.end(), [](const Candidate& a, const Candidate& b) { return a.code < b.code; });
  }

  SearchResult finish(SearchResult& r, SearchResult::Stop s) {
    r.stop = s;
    r.examined = next_;
    if (s == SearchResult::Stop::Found) {
      r.examined = next_ + 1;
      const Candidate& c = cands_[next_];
      r.witness = c.code;
      for (auto i : c.lines) r.proof.push_back(pool_[i]);
    } else if (next_ < cands_.size()) {
      r.frontier = cands_[next_].code;
    }
    return r;
  }

  Formula target_;
  GodelNumber target_code_;
  AxiomSet ax_;
  SearchOptions opt_;
  Accept accept_;
  std::vector<Formula> pool_;
  std::vector<GodelNumber> codes_;
  std::unordered_set<GodelNumber> seen_;
  std::vector<Candidate> cands_;
  std::size_t next_ = 0;
  std::optional<std::size_t> found_;
};

inline Formula require_formula(const GodelNumber& x) {
  auto f = try_decode_formula(x);
  if (!f) throw NotAFormulaCode("not the code of a formula");
  return *f;
}

inline SearchResult prov_search(const GodelNumber& x, const SearchBudget& b, const AxiomSet& ax = AxiomSet::standard(),
                                const SearchOptions& opt = {}, std::stop_token stop = {}) {
  ProvSearch s(require_formula(x), ax, opt);
  return s.run(b, stop);
}

// ------------------------------------------------------------ Rosser

/// x proves y, and no candidate refutation of y with code ≤ x checks.
inline bool rosser_proves(const GodelNumber& x, const GodelNumber& y, const AxiomSet& ax = AxiomSet::standard(),
                          const SearchOptions& opt = {}) {
  if (!proof_of(x, y, ax)) return false;
  auto f = try_decode_formula(y);
  if (!f) return false;
  ProvSearch refute(Formula::neg(*f), ax, opt);
  return !refute.run(SearchBudget::code(x)).found();
}

inline SearchResult rosser_prov_search(const GodelNumber& y, const SearchBudget& b, const AxiomSet& ax = AxiomSet::standard(),
                                       const SearchOptions& opt = {}, std::stop_token stop = {}) {
  ProvSearch s(require_formula(y), ax, opt);
  s.set_accept([&](const GodelNumber& c) { return rosser_proves(c, y, ax, opt); });
  return s.run(b, stop);
}

// ------------------------------------------------------------ consistency

struct ConsistencyReport {
  SearchResult proof_of_phi, proof_of_neg;
  bool inconsistency_witness() const { return proof_of_phi.found() && proof_of_neg.found(); }
  std::string verdict() const { return inconsistency_witness() ? "InconsistencyWitness" : "Inconclusive"; }
};

inline ConsistencyReport consistency_probe(const GodelNumber& phi, const SearchBudget& b, const AxiomSet& ax = AxiomSet::standard(),
                                           const SearchOptions& opt = {}) {
  Formula f = require_formula(phi);
  ConsistencyReport r;
  r.proof_of_phi = ProvSearch(f, ax, opt).run(b);
  r.proof_of_neg = ProvSearch(Formula::neg(f), ax, opt).run(b);
  return r;
}

}  // namespace arithmos::proof
