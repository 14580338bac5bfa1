#pragma once

#include <array>
#include <cmath>
#include <unordered_map>

#include "arithmos/relations/mu.hpp"
#include "arithmos/relations/fast.hpp"

// Machine-integer literal evaluators for the small-argument conformance grid,
// plus a shared ascending scan that answers many `x * y` searches at once.

namespace arithmos::rel::lit::u64 {

using std::uint64_t;

inline bool nat_divides(uint64_t x, uint64_t y) { return y == 0 ? x == 0 : x % y == 0; }

inline bool divides(uint64_t x, uint64_t y, WorkCounter& w) {
  for (uint64_t z = 0; z <= x; ++z) {
    w.tick();
    unsigned __int128 p = static_cast<unsigned __int128>(y) * z;
    if (p == x) return true;
    if (y > 0 && p > x) return false;
  }
  return false;
}

inline bool is_prime(uint64_t x, WorkCounter& w) {
  if (x <= 1) return false;
  for (uint64_t z = 0; z <= x; ++z) {
    w.tick();
    if (z != 1 && z != x && nat_divides(x, z)) return false;
  }
  return true;
}

/// The n PrimeOf x recursion for one x, followed until a value repeats.
class PrimeOfChain {
 public:
  PrimeOfChain(uint64_t x, WorkCounter& w) {
    seq_.push_back(0);
    std::unordered_map<uint64_t, std::size_t> seen{{0, 0}};
    for (;;) {
      uint64_t prev = seq_.back(), found = 0;
      for (uint64_t y = prev + 1; y <= x; ++y) {
        w.tick();
        if (is_prime_u64(y) && nat_divides(x, y)) {
          found = y;
          break;
        }
      }
      auto it = seen.find(found);
      if (it != seen.end()) {
        cycle_start_ = it->second;
        break;
      }
      seen.emplace(found, seq_.size());
      seq_.push_back(found);
    }
  }
  uint64_t at(uint64_t n) const {
    if (n < seq_.size()) return seq_[n];
    uint64_t period = seq_.size() - cycle_start_;
    return seq_[cycle_start_ + (n - cycle_start_) % period];
  }

 private:
  std::vector<uint64_t> seq_;
  std::size_t cycle_start_ = 0;
};

inline uint64_t prime_of(uint64_t n, uint64_t x, WorkCounter& w) { return PrimeOfChain(x, w).at(n); }

/// Prime(0), ..., Prime(count) by the printed recursion.
inline std::vector<uint64_t> prime_chain(uint64_t count, WorkCounter& w) {
  std::vector<uint64_t> out{0};
  for (uint64_t k = 0; k < count; ++k) {
    uint64_t prev = out.back();
    // bound Prime(k)! + 1, which exceeds 2^64 once Prime(k) > 20
    uint64_t bound = UINT64_MAX;
    if (prev <= 20) {
      bound = 1;
      for (uint64_t i = 2; i <= prev; ++i) bound *= i;
      bound += 1;
    }
    uint64_t found = 0;
    for (uint64_t y = prev + 1; y <= bound; ++y) {
      w.tick();
      if (is_prime_u64(y)) {
        found = y;
        break;
      }
    }
    out.push_back(found);
  }
  return out;
}

/// n TermOf x given p = n PrimeOf x.
inline uint64_t term_of_with(uint64_t p, uint64_t x, WorkCounter& w) {
  unsigned __int128 py = 1;  // p^y, saturating past x
  for (uint64_t y = 0; y <= x; ++y) {
    w.tick();
    unsigned __int128 next = py * p;
    auto div = [&](unsigned __int128 v) { return v == 0 ? x == 0 : (v <= x && x % static_cast<uint64_t>(v) == 0); };
    bool a = div(py);
    if (!a && p >= 2) return 0;
    if (a && !div(next)) return y;
    py = next > x && p >= 2 ? static_cast<unsigned __int128>(x) + 1 : next;
  }
  return 0;
}

inline uint64_t term_of(uint64_t n, uint64_t x, WorkCounter& w) { return term_of_with(rel::u64::prime_of(n, x), x, w); }

inline uint64_t len(uint64_t x, WorkCounter& w) {
  for (uint64_t y = 0; y <= x; ++y) {
    w.tick();
    if (rel::u64::prime_of(y, x) > 0 && rel::u64::prime_of(y + 1, x) == 0) return y;
  }
  return 0;
}

inline bool var_of_type(uint64_t n, uint64_t x, WorkCounter& w) {
  if (n == 0) return false;
  for (uint64_t z = 0; z <= x; ++z) {
    w.tick();
    unsigned __int128 zn = 1;
    for (uint64_t i = 0; i < n && zn <= x; ++i) zn *= z;
    if (z >= 2 && zn > x) return false;
    if (z > 13 && is_prime_u64(z) && zn == x) return true;
  }
  return false;
}

inline bool fast_var_of_type(uint64_t n, uint64_t x) {
  if (n == 0 || x < 17) return false;
  auto v = Variable::from_code(x);
  return v && v->type == n;
}

inline bool is_var(uint64_t x, WorkCounter& w) {
  for (uint64_t n = 0; n <= x; ++n) {
    w.tick();
    if (n >= 1) {
      unsigned __int128 p = 1;
      for (uint64_t i = 0; i < n && p <= x; ++i) p *= 17;
      if (p > x) return false;
    }
    if (fast_var_of_type(n, x)) return true;
  }
  return false;
}

}  // namespace arithmos::rel::lit::u64

namespace arithmos::rel::lit {

// Least z with prescribed leading terms, for many targets at once. The
// predicate of `x * y` reads z only through n TermOf z for n ≤ Len(x)+Len(y),
// so one ascending pass over z, factoring each z once, evaluates it for every
// target in the order the μ-search would.
class ConcatScan {
 public:
  /// Registers a nonempty target term list; returns its id.
  std::size_t add(const std::vector<std::uint32_t>& terms) {
    std::size_t node = 0;
    if (!terms.empty() && terms[0] < root_.size()) root_[terms[0]] = true;
    for (auto t : terms) {
      auto key = child_key(node, t);
      auto it = edges_.find(key);
      if (it == edges_.end()) {
        nodes_.push_back({});
        it = edges_.emplace(key, nodes_.size() - 1).first;
      }
      node = it->second;
    }
    if (!nodes_[node].id) {
      nodes_[node].id = answers_.size();
      answers_.push_back(0);
    }
    return *nodes_[node].id;
  }

  /// Scans z = 2 .. limit (0 and 1 satisfy no nonempty target); limit < 2^32.
  void run(std::uint64_t limit, WorkCounter& w) {
    if (limit >= (std::uint64_t{1} << 32)) throw Error("scan limit must be below 2^32");
    limit_ = limit;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    std::vector<std::uint32_t> primes;
    {
      std::vector<bool> comp(root + 1);
      for (std::uint64_t i = 2; i <= root; ++i) {
        if (comp[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= root; j += i) comp[j] = true;
      }
    }
    constexpr std::uint64_t seg = 1 << 16;
    constexpr int max_terms = 16;
    std::vector<std::uint32_t> rem(seg);
    std::vector<std::array<std::uint8_t, max_terms>> ex(seg);
    std::vector<std::uint8_t> cnt(seg);
    std::size_t open = answers_.size();
    for (std::uint64_t lo = 2; lo <= limit && open > 0; lo += seg) {
      std::uint64_t hi = std::min(limit + 1, lo + seg);
      std::uint64_t n = hi - lo;
      for (std::uint64_t i = 0; i < n; ++i) {
        rem[i] = static_cast<std::uint32_t>(lo + i);
        cnt[i] = 0;
      }
      for (auto p : primes) {
        if (static_cast<std::uint64_t>(p) * p >= hi) break;
        std::uint64_t first = (lo + p - 1) / p * p;
        for (std::uint64_t m = first; m < hi; m += p) {
          std::uint64_t i = m - lo;
          std::uint8_t e = 0;
          do {
            rem[i] /= p;
            ++e;
          } while (rem[i] % p == 0);
          ex[i][cnt[i]++] = e;
        }
      }
      for (std::uint64_t i = 0; i < n; ++i) {
        if (rem[i] > 1) ex[i][cnt[i]++] = 1;
        w.tick();
        if (cnt[i] == 0 || !root_[ex[i][0]]) continue;
        std::size_t node = 0;
        for (int k = 0; k < cnt[i]; ++k) {
          auto it = edges_.find(child_key(node, ex[i][k]));
          if (it == edges_.end()) break;
          node = it->second;
          auto& id = nodes_[node].id;
          if (id && answers_[*id] == 0) {
            answers_[*id] = lo + i;
            --open;
          }
        }
      }
    }
  }

  /// Least z ≤ limit satisfying the target, if any.
  std::optional<std::uint64_t> answer(std::size_t id) const {
    if (answers_[id] == 0) return std::nullopt;
    return answers_[id];
  }
  std::uint64_t limit() const { return limit_; }

 private:
  struct Node {
    std::optional<std::size_t> id;
  };
  static std::uint64_t child_key(std::size_t node, std::uint32_t t) { return (static_cast<std::uint64_t>(node) << 20) | t; }

  std::vector<Node> nodes_{Node{}};
  std::array<bool, 256> root_{};  // first exponents that begin some target
  std::unordered_map<std::uint64_t, std::size_t> edges_;
  std::vector<std::uint64_t> answers_;
  std::uint64_t limit_ = 0;
};

}  // namespace arithmos::rel::lit
