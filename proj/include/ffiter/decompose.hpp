#pragma once

/// Orbit decompositions of functional graphs.
///
/// An orbit of v inside a live vertex set is the maximal simple walk
/// v, f(v), f(f(v)), ... that stays on live vertices. It ends either because
/// the next vertex is already on the walk (a rho-orbit) or because it is dead.
/// Decompositions repeatedly pick an orbit and kill its vertices.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "ffiter/core.hpp"

namespace ffiter {

enum class decomposition_strategy { ordered_cycle, ordered_orbit, greedy_orbit };

template <std::unsigned_integral V>
struct basic_orbit {
  std::vector<V> vertices;
  /// True if the walk stopped on a vertex already in the walk.
  bool rho = false;

  bool operator==(const basic_orbit&) const = default;
};

/// The orbit of v in the subgraph induced on `live`. Requires live[v].
template <std::unsigned_integral V>
basic_orbit<V> orbit_of(const basic_function_table<V>& t, V v, const std::vector<bool>& live) {
  if (v >= t.size()) throw x_out_of_range_error(v, t.size());
  if (!live[v]) throw invariant_violation("orbit start must be live");
  basic_orbit<V> orbit;
  std::vector<bool> in_tour(t.size(), false);
  V cur = v;
  for (;;) {
    orbit.vertices.push_back(cur);
    in_tour[cur] = true;
    const V next = t[cur];
    if (!live[next]) break;
    if (in_tour[next]) {
      orbit.rho = true;
      break;
    }
    cur = next;
  }
  return orbit;
}

namespace detail {

/// Walks the orbit of `start` through live vertices, appending it to `concat`
/// and marking it dead.
template <std::unsigned_integral V>
void take_orbit(const basic_function_table<V>& t, V start, std::vector<bool>& live,
                std::vector<V>& concat) {
  V cur = start;
  for (;;) {
    concat.push_back(cur);
    live[cur] = false;
    const V next = t[cur];
    // a vertex already taken into this orbit is dead, so both stop reasons coincide here
    if (!live[next]) break;
    cur = next;
  }
}

/// Fills in aux from concat and starts: aux[i] = position of f(last of C_i).
template <std::unsigned_integral V>
basic_orbit_decomposition<V> finish(const basic_function_table<V>& t, std::vector<V> concat,
                                    std::vector<V> starts) {
  const auto n = t.size();
  std::vector<V> position(n);
  for (std::size_t k = 0; k < n; ++k) position[concat[k]] = static_cast<V>(k);
  std::vector<V> aux(starts.size() - 1);
  for (std::size_t i = 0; i < aux.size(); ++i) aux[i] = position[t[concat[starts[i + 1] - 1]]];
  return basic_orbit_decomposition<V>::assemble(std::move(concat), std::move(starts),
                                                std::move(aux));
}

}  // namespace detail

/// Components taken in order of least remaining vertex. Linear time.
template <std::unsigned_integral V>
basic_orbit_decomposition<V> ordered_orbit_decomposition(const basic_function_table<V>& t) {
  const auto n = t.size();
  std::vector<bool> live(n, true);
  std::vector<V> concat;
  concat.reserve(n);
  std::vector<V> starts{0};
  for (std::size_t v = 0; v < n; ++v) {
    if (!live[v]) continue;
    detail::take_orbit(t, static_cast<V>(v), live, concat);
    starts.push_back(static_cast<V>(concat.size()));
  }
  return detail::finish(t, std::move(concat), std::move(starts));
}

/// The cycles of a permutation ordered by their minimum element. Every
/// component is a rho-orbit with aux[i] = starts[i].
template <std::unsigned_integral V>
basic_orbit_decomposition<V> ordered_cycle_decomposition(const basic_permutation_witness<V>& p) {
  const auto& t = p.table();
  const auto n = t.size();
  std::vector<bool> seen(n, false);
  std::vector<V> concat;
  concat.reserve(n);
  std::vector<V> starts{0};
  std::vector<V> aux;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    aux.push_back(static_cast<V>(concat.size()));
    for (V cur = static_cast<V>(v); !seen[cur]; cur = t[cur]) {
      seen[cur] = true;
      concat.push_back(cur);
    }
    starts.push_back(static_cast<V>(concat.size()));
  }
  return basic_orbit_decomposition<V>::assemble(std::move(concat), std::move(starts),
                                                std::move(aux));
}

/// length[v] = size of orbit_of(t, v, live) for live v; 0 for dead v.
///
/// Cycles of the live subgraph get their cycle length; tree vertices get
/// 1 + length of their successor, or 1 if the successor is dead. Iterative,
/// at most two visits per vertex.
template <std::unsigned_integral V>
std::vector<V> orbit_lengths(const basic_function_table<V>& t, const std::vector<bool>& live) {
  const auto n = t.size();
  enum : std::uint8_t { fresh, on_path, done };
  std::vector<std::uint8_t> state(n, fresh);
  std::vector<V> length(n, 0);
  std::vector<V> path;
  for (std::size_t s = 0; s < n; ++s) {
    if (!live[s] || state[s] != fresh) continue;
    path.clear();
    V cur = static_cast<V>(s);
    // Walk until we hit a dead successor, a finished vertex, or our own path.
    V tail_length = 0;
    for (;;) {
      state[cur] = on_path;
      path.push_back(cur);
      const V next = t[cur];
      if (!live[next]) {
        tail_length = 0;
        break;
      }
      if (state[next] == done) {
        tail_length = length[next];
        break;
      }
      if (state[next] == on_path) {
        // next closes a cycle: everything from next to the end of path is on it
        std::size_t k = path.size();
        while (path[k - 1] != next) --k;
        const V cycle = static_cast<V>(path.size() - (k - 1));
        for (std::size_t j = k - 1; j < path.size(); ++j) {
          length[path[j]] = cycle;
          state[path[j]] = done;
        }
        path.resize(k - 1);
        tail_length = cycle;
        break;
      }
      cur = next;
    }
    for (std::size_t j = path.size(); j-- > 0;) {
      length[path[j]] = ++tail_length;
      state[path[j]] = done;
    }
  }
  return length;
}

enum class greedy_mode {
  /// After each removal only vertices whose forward path met the removed
  /// orbit are updated.
  incremental,
  /// Recompute every orbit length after each removal. Quadratic; used to
  /// cross-check the incremental mode.
  full_recompute,
};

/// Repeatedly removes an orbit of maximal length, ties going to the least
/// starting vertex. Component sizes are non-increasing.
template <std::unsigned_integral V>
basic_orbit_decomposition<V> greedy_orbit_decomposition(const basic_function_table<V>& t,
                                                        greedy_mode mode = greedy_mode::incremental) {
  const auto n = t.size();
  std::vector<bool> live(n, true);
  std::vector<V> length = orbit_lengths(t, live);
  std::vector<V> concat;
  concat.reserve(n);
  std::vector<V> starts{0};

  if (mode == greedy_mode::full_recompute) {
    while (concat.size() < n) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v)
        if (live[v] && (best == n || length[v] > length[best])) best = v;
      detail::take_orbit(t, static_cast<V>(best), live, concat);
      starts.push_back(static_cast<V>(concat.size()));
      length = orbit_lengths(t, live);
    }
    return detail::finish(t, std::move(concat), std::move(starts));
  }

  // Predecessor lists in CSR form.
  std::vector<std::size_t> pred_begin(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) ++pred_begin[t[v] + 1];
  for (std::size_t v = 0; v < n; ++v) pred_begin[v + 1] += pred_begin[v];
  std::vector<V> preds(n);
  {
    auto fill = pred_begin;
    for (std::size_t v = 0; v < n; ++v) preds[fill[t[v]]++] = static_cast<V>(v);
  }

  // Max-heap on (length, -vertex). Entries go stale when a vertex dies or its
  // length drops; lengths never grow, so a matching entry is current.
  using entry = std::pair<V, V>;
  auto lower_priority = [](const entry& a, const entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<entry, std::vector<entry>, decltype(lower_priority)> heap(lower_priority);
  for (std::size_t v = 0; v < n; ++v) heap.emplace(length[v], static_cast<V>(v));

  std::vector<V> frontier;
  std::vector<V> next_frontier;
  while (concat.size() < n) {
    auto [len, v] = heap.top();
    heap.pop();
    if (!live[v] || length[v] != len) continue;

    const std::size_t first = concat.size();
    detail::take_orbit(t, v, live, concat);
    starts.push_back(static_cast<V>(concat.size()));

    // Live vertices feeding into the removed orbit now form trees whose
    // orbits end just before it; their new length is the distance to it.
    frontier.assign(concat.begin() + static_cast<std::ptrdiff_t>(first), concat.end());
    for (V depth = 1; !frontier.empty(); ++depth) {
      next_frontier.clear();
      for (const V u : frontier) {
        for (std::size_t k = pred_begin[u]; k < pred_begin[u + 1]; ++k) {
          const V p = preds[k];
          if (!live[p]) continue;
          length[p] = depth;
          heap.emplace(depth, p);
          next_frontier.push_back(p);
        }
      }
      std::swap(frontier, next_frontier);
    }
  }
  return detail::finish(t, std::move(concat), std::move(starts));
}

/// Dispatches on strategy. ordered_cycle throws not_injective_error on non-bijections.
template <std::unsigned_integral V>
basic_orbit_decomposition<V> decompose(const basic_function_table<V>& t,
                                       decomposition_strategy strategy) {
  switch (strategy) {
    case decomposition_strategy::ordered_cycle:
      return ordered_cycle_decomposition(as_permutation(t));
    case decomposition_strategy::ordered_orbit:
      return ordered_orbit_decomposition(t);
    case decomposition_strategy::greedy_orbit:
      return greedy_orbit_decomposition(t);
  }
  throw invariant_violation("unknown decomposition strategy");
}

}  // namespace ffiter
