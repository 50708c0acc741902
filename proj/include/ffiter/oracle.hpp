#pragma once

/// Brute-force ground truth. Nothing here touches the codec.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ffiter/core.hpp"

namespace ffiter {

/// m applications of the table, one at a time.
template <std::unsigned_integral V>
V naive_iterate(const basic_function_table<V>& t, V x, iterate_count m) {
  if (x >= t.size()) throw x_out_of_range_error(x, t.size());
  for (iterate_count k = 0; k < m; ++k) x = t[x];
  return x;
}

/// f^m(x) by walking until m steps elapse or a vertex repeats. On a repeat
/// with tail length `tail` and cycle length `cycle`, the answer is the cycle
/// element at offset (m - tail) mod cycle. O(min(m, n)) time and memory.
template <std::unsigned_integral V>
V oracle_iterate(const basic_function_table<V>& t, V x, iterate_count m) {
  if (x >= t.size()) throw x_out_of_range_error(x, t.size());
  std::vector<V> walk;
  std::unordered_map<V, std::size_t> seen_at;
  V cur = x;
  for (iterate_count step = 0; step < m; ++step) {
    walk.push_back(cur);
    seen_at.emplace(cur, walk.size() - 1);
    cur = t[cur];
    if (const auto it = seen_at.find(cur); it != seen_at.end()) {
      const std::uint64_t tail = it->second;
      const std::uint64_t cycle = walk.size() - tail;
      return walk[tail + (m - tail) % cycle];
    }
  }
  return cur;
}

/// Descents from x counted by replaying the decomposition alone: follow
/// component i -> component containing aux[i] while aux[i] < starts[i].
/// Linear scans throughout.
template <std::unsigned_integral V>
std::uint64_t oracle_descents(const basic_function_table<V>& t,
                              const basic_orbit_decomposition<V>& d, V x) {
  if (x >= t.size() || x >= d.size()) throw x_out_of_range_error(x, t.size());
  const auto concat = d.concat();
  const auto starts = d.starts();
  const auto aux = d.aux();
  auto component_containing = [&](std::size_t position) {
    std::size_t i = 0;
    while (!(starts[i] <= position && position < starts[i + 1])) ++i;
    return i;
  };
  std::size_t position = 0;
  while (concat[position] != x) ++position;
  std::uint64_t descents = 0;
  for (std::size_t i = component_containing(position); aux[i] < starts[i];
       i = component_containing(aux[i]))
    ++descents;
  return descents;
}

}  // namespace ffiter
