#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "arithmos/error.hpp"

namespace arithmos {

using Natural = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline std::strong_ordering compare_nat(const Natural& a, const Natural& b) {
  int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace detail {

// Primes below 2^24 (about 1.08 million of them), built once on first use.
struct PrimeTable {
  std::vector<std::uint32_t> primes;
  PrimeTable() {
    constexpr std::uint32_t limit = 1u << 24;
    std::vector<bool> composite(limit, false);
    primes.reserve(1100000);
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
    }
  }
};

inline const PrimeTable& prime_table() {
  static const PrimeTable table;
  return table;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

inline std::size_t hash_nat(const Natural& n) {
  std::size_t h = 0xcbf29ce484222325ull;
  const mpz_t& z = n.backend().data();
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  return h;
}

}  // namespace detail

/// Number of primes available by index (the table size).
inline std::size_t prime_table_size() { return detail::prime_table().primes.size(); }

/// The i-th prime, 1-based: nth_prime(1) = 2, nth_prime(7) = 17.
inline std::uint64_t nth_prime(std::uint64_t i) {
  const auto& t = detail::prime_table().primes;
  if (i == 0 || i > t.size()) throw TooLarge("prime index beyond table");
  return t[i - 1];
}

/// 1-based index of prime p, or 0 if p is not a tabulated prime.
inline std::uint64_t prime_index(std::uint64_t p) {
  const auto& t = detail::prime_table().primes;
  auto it = std::lower_bound(t.begin(), t.end(), p);
  if (it == t.end() || *it != p) return 0;
  return static_cast<std::uint64_t>(it - t.begin()) + 1;
}

/// Deterministic for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline unsigned msb_or_zero(const Natural& n) {
  return n <= 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(n));
}

inline std::optional<std::uint64_t> to_u64(const Natural& n) {
  if (n < 0 || msb_or_zero(n) >= 64) return std::nullopt;
  return n.convert_to<std::uint64_t>();
}

inline bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (auto s = to_u64(n)) return is_prime_u64(*s);
  return boost::multiprecision::miller_rabin_test(n, 40);
}

/// Bit length (0 for 0).
inline std::size_t bit_length(const Natural& n) { return n <= 0 ? 0 : msb_or_zero(n) + 1; }

inline Natural pow_nat(const Natural& base, std::uint64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

/// Trial-division factorization into (prime, exponent) pairs. Throws TooLarge
/// when a cofactor is neither prime nor reducible by tabulated primes.
inline std::vector<std::pair<Natural, Natural>> factorize(const Natural& n) {
  std::vector<std::pair<Natural, Natural>> out;
  if (n < 2) return out;
  if (auto small = to_u64(n); small && *small < (std::uint64_t{1} << 40)) {
    std::uint64_t s = *small;
    for (std::uint64_t p = 2; p * p <= s; p += (p == 2 ? 1 : 2)) {
      if (s % p) continue;
      std::uint64_t e = 0;
      while (s % p == 0) {
        s /= p;
        ++e;
      }
      out.emplace_back(Natural(p), Natural(e));
    }
    if (s > 1) out.emplace_back(Natural(s), Natural(1));
    return out;
  }
  Natural r = n;
  for (std::uint32_t p : detail::prime_table().primes) {
    Natural pp = p;
    if (pp * pp > r) break;
    if (r % p != 0) continue;
    std::uint64_t e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    out.emplace_back(pp, Natural(e));
  }
  if (r > 1) {
    Natural last = detail::prime_table().primes.back();
    if (r >= last * last && !is_prime(r)) throw TooLarge("cofactor too large for trial division");
    out.emplace_back(r, Natural(1));
  }
  return out;
}

}  // namespace arithmos
