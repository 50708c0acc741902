#pragma once

/// Human-readable summaries printed by the command-line tool.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "ffiter/codec.hpp"
#include "ffiter/core.hpp"

namespace ffiter {

struct code_summary {
  std::size_t n = 0;
  code_kind kind = code_kind::general;
  std::size_t components = 0;
  /// component size -> number of components of that size
  std::map<std::size_t, std::size_t> size_histogram;
  std::size_t rho_components = 0;
  std::size_t descent_components = 0;
  /// Descents needed from any point of component i before reaching a rho-orbit.
  std::vector<std::uint64_t> descent_depth;
  std::uint64_t worst_depth = 0;
};

template <std::unsigned_integral V>
code_summary summarize(const basic_fast_forward_code<V>& code) {
  code_summary s;
  s.n = code.size();
  s.kind = code.kind();
  s.components = code.components();
  const auto starts = code.starts();
  const auto aux = code.aux();
  s.descent_depth.resize(s.components);
  for (std::size_t i = 0; i < s.components; ++i) {
    ++s.size_histogram[starts[i + 1] - starts[i]];
    if (code.is_rho(i)) {
      ++s.rho_components;
      s.descent_depth[i] = 0;
    } else {
      ++s.descent_components;
      // aux[i] lies in an earlier component, whose depth is already known
      s.descent_depth[i] = 1 + s.descent_depth[component_of(code, aux[i])];
    }
    s.worst_depth = std::max(s.worst_depth, s.descent_depth[i]);
  }
  return s;
}

inline void print_summary(const code_summary& s, std::ostream& out) {
  out << "n " << s.n << '\n';
  out << "kind " << (s.kind == code_kind::permutation ? "perm" : "func") << '\n';
  out << "components " << s.components << '\n';
  out << "rho_components " << s.rho_components << '\n';
  out << "descent_components " << s.descent_components << '\n';
  out << "worst_depth " << s.worst_depth << '\n';
  out << "size_histogram";
  for (const auto& [size, count] : s.size_histogram) out << ' ' << size << ':' << count;
  out << '\n';
  out << "depth";
  for (const auto d : s.descent_depth) out << ' ' << d;
  out << '\n';
}

template <std::unsigned_integral V>
void print_eval(const basic_eval_result<V>& r, std::ostream& out) {
  out << r.value << ' ' << r.descents << ' ' << r.table_reads << '\n';
}

template <std::unsigned_integral V>
void print_descent_step(const basic_descent_step<V>& step, std::ostream& out) {
  out << "descent component " << step.component << " from " << step.from << " r " << step.r
      << " to " << step.target << '\n';
}

}  // namespace ffiter
