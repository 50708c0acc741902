#pragma once

/// Deterministic instance families.
///
/// Random tables use std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Bounded draws use rejection sampling rather than
/// std::uniform_int_distribution (whose algorithm is implementation-defined), so
/// a given (n, seed) produces the same table on every platform.
/// The engine seed is splitmix64(seed); experiment samples derive their
/// seeds with stream_seed().

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ffiter/core.hpp"

namespace ffiter {

/// The splitmix64 finalizer (Steele, Lea, Flood 2014): constants
/// 0x9e3779b97f4a7c15, 0xbf58476d1ce4e5b9, 0x94d049bb133111eb.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for sample `stream` at domain size n of an experiment seeded with `seed`.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t n,
                                    std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ stream);
}

/// Uniform draw from [0, bound), bound >= 1, unbiased.
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  // Reject the lowest (2^64 mod bound) outputs so the rest split evenly.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

template <std::unsigned_integral V = std::uint32_t>
basic_function_table<V> random_function(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(splitmix64(seed));
  std::vector<V> values(n);
  for (auto& v : values) v = static_cast<V>(uniform_below(engine, n));
  return basic_function_table<V>::from_values(std::move(values));
}

/// Fisher-Yates shuffle of the identity.
template <std::unsigned_integral V = std::uint32_t>
basic_permutation_witness<V> random_permutation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(splitmix64(seed));
  std::vector<V> values(n);
  for (std::size_t x = 0; x < n; ++x) values[x] = static_cast<V>(x);
  for (std::size_t k = n; k > 1; --k) std::swap(values[k - 1], values[uniform_below(engine, k)]);
  return as_permutation(basic_function_table<V>::from_values(std::move(values)));
}

/// f(k) = max(0, k-1): the worst case for ordered decomposition.
template <std::unsigned_integral V = std::uint32_t>
basic_function_table<V> chain_function(std::size_t n) {
  std::vector<V> values(n);
  for (std::size_t k = 1; k < n; ++k) values[k] = static_cast<V>(k - 1);
  return basic_function_table<V>::from_values(std::move(values));
}

/// g(k) = min(k+1, n-1).
template <std::unsigned_integral V = std::uint32_t>
basic_function_table<V> anti_chain_function(std::size_t n) {
  std::vector<V> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = static_cast<V>(k + 1 < n ? k + 1 : n - 1);
  return basic_function_table<V>::from_values(std::move(values));
}

template <std::unsigned_integral V>
struct basic_staircase {
  basic_function_table<V> table;
  /// Descents the greedy decomposition needs from the top of the staircase.
  std::uint64_t d;
  /// Points used by the staircase itself: (d+1)(d+2)/2.
  std::uint64_t m_cap;
};

/// The greedy worst case. Components of sizes d+1, d, ..., 1 are laid out
/// consecutively; each walks to its own last element, which maps to the last
/// element of the previous component (component 0's last element is fixed).
/// Points beyond (d+1)(d+2)/2 form a chain feeding vertex 0, lengthening the
/// first greedy component.
template <std::unsigned_integral V = std::uint32_t>
basic_staircase<V> staircase_function(std::size_t n) {
  const std::uint64_t d = descent_bound(n);
  const std::uint64_t m_cap = (d + 1) * (d + 2) / 2;
  std::vector<V> values(n);
  std::size_t start = 0;
  std::size_t previous_last = 0;
  for (std::uint64_t j = 0; j <= d; ++j) {
    const std::size_t size = d + 1 - j;
    const std::size_t last = start + size - 1;
    for (std::size_t k = start; k < last; ++k) values[k] = static_cast<V>(k + 1);
    values[last] = static_cast<V>(j == 0 ? last : previous_last);
    previous_last = last;
    start += size;
  }
  for (std::size_t k = m_cap; k < n; ++k) values[k] = static_cast<V>(k + 1 < n ? k + 1 : 0);
  return {basic_function_table<V>::from_values(std::move(values)), d, m_cap};
}

}  // namespace ffiter
