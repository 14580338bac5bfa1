#pragma once

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "arithmos/natural.hpp"

namespace arithmos {

struct Run;

/// A natural number that may be far too large to write down.
///
/// Every valid sequence code 2^a1 * 3^a2 * ... * pk^ak (contiguous primes, all
/// ai >= 1, 1 for the empty sequence) is held as a run-length list of its
/// exponents, each exponent itself a GodelNumber. Anything else (0 and numbers
/// with a prime gap) is held as a plain Natural. The split is canonical, so
/// structural equality is numeric equality.
class GodelNumber {
 public:
  static constexpr std::size_t default_max_bits = std::size_t{1} << 22;

  GodelNumber() = default;
  GodelNumber(std::uint64_t v) : GodelNumber(Natural(v)) {}  // NOLINT: implicit by design
  GodelNumber(int v) : GodelNumber(Natural(v)) {}             // NOLINT
  explicit GodelNumber(const Natural& v);

  static GodelNumber empty_sequence();
  /// Normalizes: drops zero counts, merges equal neighbours. Values must be >= 1.
  static GodelNumber sequence(std::vector<Run> runs);
  static GodelNumber from_terms(const std::vector<GodelNumber>& terms);
  static GodelNumber from_codes(const std::vector<std::uint64_t>& codes);

  bool is_zero() const { return !seq_ && plain_ == 0; }
  bool is_sequence() const { return static_cast<bool>(seq_); }
  bool is_empty_sequence() const;

  /// Runs of a sequence code. Throws NotASequenceCode otherwise.
  const std::vector<Run>& runs() const;
  /// Number of terms of a sequence code.
  const Natural& seq_length() const;
  const Natural& plain() const { return plain_; }

  /// log2 of the value; +inf when even the logarithm overflows a double.
  double log2_estimate() const;
  bool materializable(std::size_t max_bits = default_max_bits) const {
    return log2_estimate() < static_cast<double>(max_bits);
  }
  Natural value(std::size_t max_bits = default_max_bits) const;
  std::optional<std::uint64_t> as_u64() const;

  std::size_t hash() const;

  friend bool operator==(const GodelNumber& a, const GodelNumber& b);
  /// Exact ordering. Throws TooLarge when neither estimates nor exact
  /// logarithm sums can separate the operands.
  friend std::strong_ordering operator<=>(const GodelNumber& a, const GodelNumber& b);

 private:
  struct SeqData;
  Natural plain_;
  std::shared_ptr<const SeqData> seq_;
};

struct Run {
  GodelNumber value;
  Natural count;
  friend bool operator==(const Run& a, const Run& b) { return a.count == b.count && a.value == b.value; }
};

struct GodelNumber::SeqData {
  std::vector<Run> runs;
  Natural length;
  double log2 = 0;
  bool log2_approx = false;
  std::size_t hash = 0;
};

namespace detail {

struct LogPrefix {
  std::vector<double> prefix;  // prefix[i] = sum of log2 of the first i primes
  LogPrefix() {
    const auto& t = prime_table().primes;
    prefix.resize(t.size() + 1);
    prefix[0] = 0;
    for (std::size_t i = 0; i < t.size(); ++i) prefix[i + 1] = prefix[i] + std::log2(static_cast<double>(t[i]));
  }
};

inline const LogPrefix& log_prefix() {
  static const LogPrefix lp;
  return lp;
}

inline double nat_to_double(const Natural& n) { return n.convert_to<double>(); }

// Sum of log2(p_k) for k in [start, start+count), 1-based. Sets approx when
// the range leaves the prime table.
inline double log2_prime_range(const Natural& start, const Natural& count, bool& approx) {
  const auto& pre = log_prefix().prefix;
  const std::size_t n = pre.size() - 1;
  Natural end = start + count - 1;
  if (end <= n) {
    auto s = start.convert_to<std::size_t>();
    auto e = end.convert_to<std::size_t>();
    return pre[e] - pre[s - 1];
  }
  approx = true;
  double a = nat_to_double(start), b = nat_to_double(end);
  auto lp = [](double k) {
    if (k < 6) return std::log2(13.0);
    double l = std::log(k);
    return std::log2(k * (l + std::log(l) - 1.0));
  };
  return (b - a + 1) * lp((a + b) / 2);
}

// RAII wrapper over an MPFR value.
struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace detail

inline GodelNumber::GodelNumber(const Natural& v) {
  if (v < 0) throw Error("negative natural");
  if (v == 0) return;
  std::vector<Run> runs;
  Natural r = v;
  const auto& primes = detail::prime_table().primes;
  std::size_t i = 0;
  while (r > 1) {
    if (i >= primes.size()) {
      plain_ = v;
      return;
    }
    std::uint32_t p = primes[i];
    std::uint64_t e = 0;
    if (auto small = to_u64(r)) {
      std::uint64_t s = *small;
      while (s % p == 0) {
        s /= p;
        ++e;
      }
      r = s;
    } else {
      while (mpz_divisible_ui_p(r.backend().data(), p)) {
        r /= p;
        ++e;
      }
    }
    if (e == 0) {
      plain_ = v;
      return;
    }
    GodelNumber ev{Natural(e)};
    if (!runs.empty() && runs.back().value == ev)
      runs.back().count += 1;
    else
      runs.push_back(Run{std::move(ev), Natural(1)});
    ++i;
  }
  *this = sequence(std::move(runs));
}

inline GodelNumber GodelNumber::empty_sequence() { return sequence({}); }

inline GodelNumber GodelNumber::sequence(std::vector<Run> in) {
  auto data = std::make_shared<SeqData>();
  data->runs.reserve(in.size());
  for (auto& r : in) {
    if (r.count == 0) continue;
    if (r.count < 0) throw Error("negative run count");
    if (r.value.is_zero()) throw NotASequenceCode("sequence term 0");
    if (!data->runs.empty() && data->runs.back().value == r.value)
      data->runs.back().count += r.count;
    else
      data->runs.push_back(std::move(r));
  }
  Natural index = 1;
  double lg = 0;
  std::size_t h = 0x51ed270b27f1ull;
  bool approx = false;
  for (const auto& r : data->runs) {
    double el = r.value.log2_estimate();
    double span = detail::log2_prime_range(index, r.count, approx);
    if (r.value.is_sequence() && r.value.seq_->log2_approx) approx = true;
    double term = el > 1000 ? std::numeric_limits<double>::infinity() : std::exp2(el) * span;
    if (!r.value.is_sequence()) term = detail::nat_to_double(r.value.plain()) * span;
    lg += term;
    index += r.count;
    h = detail::hash_combine(h, r.value.hash());
    h = detail::hash_combine(h, detail::hash_nat(r.count));
  }
  data->length = index - 1;
  data->log2 = lg;
  data->log2_approx = approx;
  data->hash = h;
  GodelNumber g;
  g.seq_ = std::move(data);
  return g;
}

inline GodelNumber GodelNumber::from_terms(const std::vector<GodelNumber>& terms) {
  std::vector<Run> runs;
  runs.reserve(terms.size());
  for (const auto& t : terms) runs.push_back(Run{t, Natural(1)});
  return sequence(std::move(runs));
}

inline GodelNumber GodelNumber::from_codes(const std::vector<std::uint64_t>& codes) {
  std::vector<Run> runs;
  for (auto c : codes) {
    if (!runs.empty() && runs.back().value == GodelNumber(c))
      runs.back().count += 1;
    else
      runs.push_back(Run{GodelNumber(c), Natural(1)});
  }
  return sequence(std::move(runs));
}

inline bool GodelNumber::is_empty_sequence() const { return seq_ && seq_->runs.empty(); }

inline const std::vector<Run>& GodelNumber::runs() const {
  if (!seq_) throw NotASequenceCode("not a sequence code");
  return seq_->runs;
}

inline const Natural& GodelNumber::seq_length() const {
  if (!seq_) throw NotASequenceCode("not a sequence code");
  return seq_->length;
}

inline double GodelNumber::log2_estimate() const {
  if (seq_) return seq_->log2;
  if (plain_ == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, plain_.backend().data());
  return static_cast<double>(exp) + std::log2(m);
}

inline Natural GodelNumber::value(std::size_t max_bits) const {
  if (!seq_) return plain_;
  if (!materializable(max_bits)) throw TooLarge("number too large to materialize");
  Natural out = 1;
  std::uint64_t index = 1;
  for (const auto& r : seq_->runs) {
    std::uint64_t e = r.value.value(max_bits).convert_to<std::uint64_t>();
    std::uint64_t c = r.count.convert_to<std::uint64_t>();
    for (std::uint64_t k = 0; k < c; ++k, ++index) {
      Natural f;
      mpz_ui_pow_ui(f.backend().data(), nth_prime(index), e);
      out *= f;
    }
  }
  return out;
}

inline std::optional<std::uint64_t> GodelNumber::as_u64() const {
  if (!seq_) return to_u64(plain_);
  if (log2_estimate() >= 64) return std::nullopt;
  return to_u64(value());
}

inline std::size_t GodelNumber::hash() const { return seq_ ? seq_->hash : detail::hash_nat(plain_); }

inline bool operator==(const GodelNumber& a, const GodelNumber& b) {
  if (a.seq_ != nullptr) {
    if (!b.seq_) return false;
    if (a.seq_ == b.seq_) return true;
    if (a.seq_->hash != b.seq_->hash || a.seq_->length != b.seq_->length) return false;
    return a.seq_->runs == b.seq_->runs;
  }
  return !b.seq_ && a.plain_ == b.plain_;
}

namespace detail {

// One aligned stretch of two sequence codes: count consecutive prime indexes
// starting at index, exponent a on one side and b on the other (0 = absent).
struct DiffSegment {
  Natural index, count;
  GodelNumber a, b;
};

inline std::vector<DiffSegment> diff_segments(const std::vector<Run>& ra, const std::vector<Run>& rb) {
  std::vector<DiffSegment> out;
  std::size_t i = 0, j = 0;
  Natural left_a = ra.empty() ? Natural(0) : ra[0].count;
  Natural left_b = rb.empty() ? Natural(0) : rb[0].count;
  Natural index = 1;
  while (i < ra.size() || j < rb.size()) {
    Natural step;
    GodelNumber va, vb;
    if (i < ra.size() && j < rb.size()) {
      step = left_a < left_b ? left_a : left_b;
      va = ra[i].value;
      vb = rb[j].value;
    } else if (i < ra.size()) {
      step = left_a;
      va = ra[i].value;
    } else {
      step = left_b;
      vb = rb[j].value;
    }
    if (!(va == vb)) out.push_back(DiffSegment{index, step, va, vb});
    index += step;
    if (i < ra.size()) {
      left_a -= step;
      if (left_a == 0 && ++i < ra.size()) left_a = ra[i].count;
    }
    if (j < rb.size()) {
      left_b -= step;
      if (left_b == 0 && ++j < rb.size()) left_b = rb[j].count;
    }
  }
  return out;
}

// log2(p) at a precision rounded up to a multiple of 4096 bits, cached per
// thread; comparisons of big codes keep asking for the same few primes.
inline const Mpfr& cached_log2(std::uint64_t p, mpfr_prec_t prec) {
  thread_local std::map<std::pair<std::uint64_t, mpfr_prec_t>, std::unique_ptr<Mpfr>> cache;
  auto& slot = cache[{p, prec}];
  if (!slot) {
    slot = std::make_unique<Mpfr>(prec);
    mpfr_set_ui(slot->v, static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_log2(slot->v, slot->v, MPFR_RNDN);
  }
  return *slot;
}

// Sign of sum over segments of (a - b) * log2(p_k), decided with MPFR at
// increasing precision and a rigorous error bound.
inline int log_sum_sign(const std::vector<DiffSegment>& segs) {
  struct Term {
    Natural diff;
    std::vector<std::uint64_t> primes;
  };
  std::vector<Term> terms;
  std::size_t max_bits = 0;
  for (const auto& s : segs) {
    if (s.count > 4096) throw TooLarge("comparison needs a log sum over too many primes");
    if (!s.a.materializable() || !s.b.materializable()) throw TooLarge("exponent too large to compare");
    Term t{s.a.value() - s.b.value(), {}};
    auto start = s.index.convert_to<std::uint64_t>();
    for (std::uint64_t k = 0; k < s.count.convert_to<std::uint64_t>(); ++k) t.primes.push_back(nth_prime(start + k));
    max_bits = std::max(max_bits, bit_length(t.diff));
    terms.push_back(std::move(t));
  }
  for (mpfr_prec_t prec = static_cast<mpfr_prec_t>((max_bits + 96 + 4095) / 4096 * 4096);; prec *= 2) {
    Mpfr sum(prec), mag(64), tmp(prec), abs_tmp(64);
    for (const auto& t : terms) {
      for (auto p : t.primes) {
        const Mpfr& lg = cached_log2(p, prec);
        mpfr_set_z(tmp.v, t.diff.backend().data(), MPFR_RNDN);
        mpfr_mul(tmp.v, tmp.v, lg.v, MPFR_RNDN);
        mpfr_add(sum.v, sum.v, tmp.v, MPFR_RNDN);
        mpfr_abs(abs_tmp.v, tmp.v, MPFR_RNDU);
        mpfr_add(mag.v, mag.v, abs_tmp.v, MPFR_RNDU);
      }
    }
    // Each rounding contributes at most a few ulps relative to mag.
    Mpfr bound(64);
    mpfr_mul_2si(bound.v, mag.v, -(prec - 8), MPFR_RNDU);
    if (mpfr_cmpabs(sum.v, bound.v) > 0) return mpfr_sgn(sum.v);
    if (prec > (1 << 24)) throw TooLarge("comparison precision exhausted");
  }
}

}  // namespace detail

inline std::strong_ordering operator<=>(const GodelNumber& a, const GodelNumber& b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.is_zero()) return std::strong_ordering::less;
  if (b.is_zero()) return std::strong_ordering::greater;
  double la = a.log2_estimate(), lb = b.log2_estimate();
  bool approx = (a.seq_ && a.seq_->log2_approx) || (b.seq_ && b.seq_->log2_approx);
  if (std::isfinite(la) && std::isfinite(lb)) {
    double margin = approx ? 0.05 * std::max(la, lb) + 64 : 1e-9 * std::max(la, lb) + 2;
    if (la + margin < lb) return std::strong_ordering::less;
    if (lb + margin < la) return std::strong_ordering::greater;
  } else if (std::isfinite(la) && !approx) {
    return std::strong_ordering::less;
  } else if (std::isfinite(lb) && !approx) {
    return std::strong_ordering::greater;
  }
  constexpr std::size_t small = 1 << 16;
  if (a.materializable(small) && b.materializable(small)) return compare_nat(a.value(), b.value());
  if (a.is_sequence() && b.is_sequence()) {
    int s = detail::log_sum_sign(detail::diff_segments(a.runs(), b.runs()));
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.materializable() && b.materializable()) return compare_nat(a.value(), b.value());
  throw TooLarge("cannot order numbers");
}

}  // namespace arithmos

template <>
struct std::hash<arithmos::GodelNumber> {
  std::size_t operator()(const arithmos::GodelNumber& g) const { return g.hash(); }
};
