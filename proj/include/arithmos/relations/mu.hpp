#pragma once

#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

#include "arithmos/godel_number.hpp"

namespace arithmos::rel {

/// ARITHMOS_WORK_CEILING, or 2^64 - 1 when unset or unparsable.
inline std::uint64_t work_ceiling_from_env() {
  const char* s = std::getenv("ARITHMOS_WORK_CEILING");
  if (!s || !*s) return std::numeric_limits<std::uint64_t>::max();
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used, 10);
    if (used != std::string(s).size()) return std::numeric_limits<std::uint64_t>::max();
    return v;
  } catch (const std::exception&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

// Counts iterations actually performed by literal evaluation. Exceeding the
// ceiling raises LiteralInfeasible instead of running on.
class WorkCounter {
 public:
  explicit WorkCounter(std::uint64_t ceiling = work_ceiling_from_env()) : ceiling_(ceiling) {}

  void tick() {
    if (++used_ > ceiling_) throw LiteralInfeasible("literal evaluation exceeded the work ceiling of " + std::to_string(ceiling_) + " iterations");
  }
  /// Fails up front when a loop is certain to run more iterations than remain.
  void require(const Natural& iterations, const std::string& what) const {
    if (iterations > Natural(ceiling_ - used_))
      throw LiteralInfeasible(what + ": needs at least " + iterations.str() + " iterations, over the work ceiling of " + std::to_string(ceiling_));
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  std::uint64_t ceiling_;
  std::uint64_t used_ = 0;
};

/// An upper bound for a loop index. Bounds too large to reach within any
/// work ceiling are kept symbolic.
class Limit {
 public:
  static Limit of(const Natural& n) { return Limit(n); }
  static Limit of(const GodelNumber& g) {
    if (g.log2_estimate() > 160) return Limit(std::nullopt);
    return Limit(g.value());
  }
  static Limit unreachable() { return Limit(std::nullopt); }

  bool admits(const Natural& y) const { return !value_ || y <= *value_; }
  bool reachable() const { return value_.has_value(); }

 private:
  explicit Limit(std::optional<Natural> v) : value_(std::move(v)) {}
  std::optional<Natural> value_;
};

/// μy ≤ bound pred(y), or 0 when no such y. Evaluation order 0, 1, 2, ...
template <class Pred>
Natural mu_bounded(const Natural& bound, Pred&& pred) {
  for (Natural y = 0; y <= bound; ++y)
    if (pred(y)) return y;
  return 0;
}

template <class Pred>
Natural mu_bounded(const Natural& bound, Pred&& pred, WorkCounter& w) {
  for (Natural y = 0; y <= bound; ++y) {
    w.tick();
    if (pred(y)) return y;
  }
  return 0;
}

/// Outcome of one step of a pruned search. Stop asserts that no larger index
/// can satisfy the predicate either, so the search may end early.
enum class Step { No, Yes, Stop };

template <class Pred>
Natural mu_pruned(const Limit& lim, Pred&& pred, WorkCounter& w, Natural from = 0) {
  for (Natural y = from; lim.admits(y); ++y) {
    w.tick();
    Step s = pred(y);
    if (s == Step::Yes) return y;
    if (s == Step::Stop) return 0;
  }
  return 0;
}

template <class Pred>
bool exists_pruned(const Limit& lim, Pred&& pred, WorkCounter& w, Natural from = 0) {
  for (Natural y = from; lim.admits(y); ++y) {
    w.tick();
    Step s = pred(y);
    if (s == Step::Yes) return true;
    if (s == Step::Stop) return false;
  }
  return false;
}

template <class Pred>
bool exists_bounded(const Limit& lim, Pred&& pred, WorkCounter& w) {
  return exists_pruned(lim, [&](const Natural& y) { return pred(y) ? Step::Yes : Step::No; }, w);
}

inline Step step_if(bool b) { return b ? Step::Yes : Step::No; }

}  // namespace arithmos::rel
