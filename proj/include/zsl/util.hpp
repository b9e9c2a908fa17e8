#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zsl {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Caller passed arguments outside the documented domain.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is valid but exceeds an enumeration capacity limit.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input on which the operation is mathematically undefined.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline i64 mod_floor(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

// Modular inverse; requires gcd(a, n) = 1.
inline i64 inv_mod(i64 a, i64 n) {
  i64 t = 0, newt = 1, r = n, newr = mod_floor(a, n);
  while (newr != 0) {
    i64 q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw usage_error("inv_mod: argument not invertible");
  return mod_floor(t, n);
}

// Floor of sqrt for unsigned 64-bit, exact.
inline u64 isqrt_u64(u64 x) {
  if (x == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline u64 fnv1a64(const void* data, std::size_t len, u64 seed = 14695981039346656037ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  u64 h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline u64 fnv1a64(const std::string& s, u64 seed = 14695981039346656037ull) {
  return fnv1a64(s.data(), s.size(), seed);
}

inline int popcount64(u64 x) { return __builtin_popcountll(x); }
inline int ctz64(u64 x) { return __builtin_ctzll(x); }

namespace detail {

// Worker count for parallel sweeps, overridable through ZSL_JOBS.
inline int env_jobs() {
  const char* e = std::getenv("ZSL_JOBS");
  if (!e) return 1;
  int v = std::atoi(e);
  return v >= 1 ? v : 1;
}

}  // namespace detail

}  // namespace zsl
