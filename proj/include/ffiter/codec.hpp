#pragma once

/// Coding a function as a fast-forward code, and evaluating iterates with it.
///
/// A code conjugates f to a canonical function pi on positions:
/// f = sigma . pi . sigma^-1. Inside component i, pi walks one position
/// forward; the last position jumps to aux[i]. f^m(x) is then
/// sigma(pi^m(sigma^-1(x))), and pi^m needs one step per descent into an
/// earlier component plus a closed form once a rho-orbit is reached.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ffiter/core.hpp"
#include "ffiter/decompose.hpp"

namespace ffiter {

template <std::unsigned_integral V>
basic_fast_forward_code<V> build_code(const basic_orbit_decomposition<V>& d, code_kind kind,
                                      build_options options = {}) {
  const auto c = d.concat();
  const auto s = d.starts();
  const auto a = d.aux();
  return basic_fast_forward_code<V>::assemble(kind, std::vector<V>(c.begin(), c.end()),
                                              std::vector<V>(s.begin(), s.end()),
                                              std::vector<V>(a.begin(), a.end()), options.index,
                                              options.hot);
}

/// Decomposes t with `strategy` and codes the result. Only ordered_cycle
/// produces a permutation code; it throws not_injective_error on non-bijections.
template <std::unsigned_integral V>
basic_fast_forward_code<V> build_code(const basic_function_table<V>& t,
                                      decomposition_strategy strategy,
                                      build_options options = {}) {
  const auto kind =
      strategy == decomposition_strategy::ordered_cycle ? code_kind::permutation : code_kind::general;
  return build_code(decompose(t, strategy), kind, options);
}

/// Index i with starts[i] <= y < starts[i+1]. Adds the table reads it made.
template <std::unsigned_integral V>
std::size_t component_of(const basic_fast_forward_code<V>& code, V y,
                         std::uint64_t* reads = nullptr) {
  if (code.mode() == index_mode::dense) {
    if (reads) ++*reads;
    return code.dense_index()[y];
  }
  // Search the interior boundaries starts[1..l-1]: the answer is how many are <= y.
  const auto starts = code.starts();
  std::size_t lo = 1;
  std::size_t hi = starts.size() - 1;
  std::uint64_t compares = 0;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++compares;
    if (starts[mid] <= y) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (reads) *reads += compares;
  return lo - 1;
}

/// One descent: pi^m(x) was reduced to pi^r(target) with x in `component`.
template <std::unsigned_integral V>
struct basic_descent_step {
  std::size_t component;
  V from;
  std::uint64_t r;
  V target;
};

struct no_trace {
  template <class Step>
  void operator()(const Step&) const noexcept {}
};

/// pi^m(x) for the canonical function of the code, x a position.
template <std::unsigned_integral V, class Trace = no_trace>
basic_eval_result<V> pi_iterate(const basic_fast_forward_code<V>& code, V x, iterate_count m,
                                Trace&& trace = {}) {
  if (x >= code.size()) throw x_out_of_range_error(x, code.size());
  const auto starts = code.starts();
  const auto aux = code.aux();
  const auto period = code.period();
  basic_eval_result<V> result;
  for (;;) {
    const std::size_t i = component_of(code, x, &result.table_reads);
    const V end = starts[i + 1];
    const std::uint64_t to_end = end - x;
    result.table_reads += 1;
    result.arith_ops += 1;
    // r = m - to_end, compared before subtracting so it never wraps
    if (m < to_end) {
      result.value = static_cast<V>(x + m);
      result.arith_ops += 1;
      return result;
    }
    const std::uint64_t r = m - to_end;
    result.arith_ops += 1;
    const V target = aux[i];
    result.table_reads += 2;  // aux[i] and starts[i]
    if (target >= starts[i]) {
      std::uint64_t cycle;
      if (!period.empty()) {
        cycle = period[i];
        result.table_reads += 1;
      } else {
        cycle = end - target;
        result.arith_ops += 1;
      }
      result.value = static_cast<V>(target + r % cycle);
      result.arith_ops += 2;
      return result;
    }
    trace(basic_descent_step<V>{i, x, r, target});
    ++result.descents;
    x = target;
    m = r;
  }
}

/// f^m(x) through the code. Permutation codes with a dense index use a
/// straight-line path: five table reads (sigma^-1, i(y), start, period,
/// sigma) and five arithmetic operations.
template <std::unsigned_integral V, class Trace = no_trace>
basic_eval_result<V> iterate(const basic_fast_forward_code<V>& code, V x, iterate_count m,
                             Trace&& trace = {}) {
  if (x >= code.size()) throw x_out_of_range_error(x, code.size());
  if (code.kind() == code_kind::permutation && code.mode() == index_mode::dense) {
    const V y = code.sigma_inv()[x];
    const V i = code.dense_index()[y];
    const V start = code.starts()[i];
    const V length = code.period()[i];
    const std::uint64_t offset = (static_cast<std::uint64_t>(y - start) + m % length) % length;
    return {code.sigma()[start + offset], 0, 5, 5};
  }
  auto result = pi_iterate(code, code.sigma_inv()[x], m, std::forward<Trace>(trace));
  result.value = code.sigma()[result.value];
  result.table_reads += 2;
  return result;
}

/// Descents needed by any query from x once m >= n (the count stops growing there).
template <std::unsigned_integral V>
std::uint64_t plateau_descents(const basic_fast_forward_code<V>& code, V x) {
  return iterate(code, x, 2 * static_cast<iterate_count>(code.size())).descents;
}

}  // namespace ffiter
