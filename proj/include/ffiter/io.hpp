#pragma once

/// Text formats.
///
/// Table: whitespace-separated decimal integers, first N then f(0)..f(N-1).
/// '#' comments run to end of line.
///
/// Code:
///   FFC 1 <perm|func>
///   N <n> L <l>
///   <sigma: n integers>
///   <starts: l+1 integers>
///   <aux: l integers>
/// sigma^-1 and the dense index are rebuilt on load, not stored.

#include <charconv>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ffiter/core.hpp"

namespace ffiter {

namespace detail {

inline bool parse_integer(std::string_view token, std::int64_t& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

inline std::int64_t expect_integer(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  if (!parse_integer(token, value)) throw parse_error(line, std::string(token));
  return value;
}

template <class Range>
void write_row(std::ostream& out, const Range& values) {
  bool first = true;
  for (const auto v : values) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
}

inline std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

}  // namespace detail

template <std::unsigned_integral V = std::uint32_t>
basic_function_table<V> read_table(std::istream& in) {
  std::vector<std::int64_t> tokens;
  std::int64_t n = 0;
  bool have_n = false;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (const auto& word : detail::split_words(line)) {
      const auto value = detail::expect_integer(word, line_no);
      if (!have_n) {
        if (value < 1) throw length_mismatch_error(1, 0);
        n = value;
        have_n = true;
      } else {
        tokens.push_back(value);
      }
    }
  }
  if (in.bad()) throw io_error("read failed");
  if (!have_n) throw length_mismatch_error(1, 0);
  return basic_function_table<V>::validate(tokens, n);
}

template <std::unsigned_integral V>
void write_table(const basic_function_table<V>& t, std::ostream& out) {
  out << t.size() << '\n';
  detail::write_row(out, t.values());
  if (!out) throw io_error("write failed");
}

template <std::unsigned_integral V>
void write_code(const basic_fast_forward_code<V>& code, std::ostream& out) {
  out << "FFC 1 " << (code.kind() == code_kind::permutation ? "perm" : "func") << '\n';
  out << "N " << code.size() << " L " << code.components() << '\n';
  detail::write_row(out, code.sigma());
  detail::write_row(out, code.starts());
  detail::write_row(out, code.aux());
  if (!out) throw io_error("write failed");
}

/// Parses and re-validates a code. Structural problems throw
/// invariant_violation naming the failed invariant.
template <std::unsigned_integral V = std::uint32_t>
basic_fast_forward_code<V> read_code(std::istream& in, build_options options = {}) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::vector<std::string> {
    ++line_no;
    if (!std::getline(in, line)) {
      if (in.bad()) throw io_error("read failed");
      throw parse_error(line_no, "<end of input>");
    }
    return detail::split_words(line);
  };

  const auto header = next_line();
  if (header.size() != 3 || header[0] != "FFC" || header[1] != "1" ||
      (header[2] != "perm" && header[2] != "func"))
    throw bad_magic_error(line);
  const auto kind = header[2] == "perm" ? code_kind::permutation : code_kind::general;

  const auto dims = next_line();
  if (dims.size() != 4 || dims[0] != "N" || dims[2] != "L")
    throw parse_error(line_no, dims.empty() ? std::string("<empty>") : dims[0]);
  const auto n = detail::expect_integer(dims[1], line_no);
  const auto l = detail::expect_integer(dims[3], line_no);
  if (n < 1) throw invariant_violation("n >= 1");
  if (l < 1 || l > n) throw invariant_violation("1 <= l <= n");
  if (static_cast<std::uint64_t>(n) > std::numeric_limits<V>::max())
    throw invariant_violation("domain size exceeds vertex type");

  auto read_row = [&](std::size_t expected, const char* name) {
    const auto words = next_line();
    if (words.size() != expected) throw invariant_violation(std::string(name) + " length");
    std::vector<V> row(expected);
    for (std::size_t k = 0; k < expected; ++k) {
      const auto value = detail::expect_integer(words[k], line_no);
      if (value < 0 || value > n) throw invariant_violation(std::string(name) + " entries in range");
      row[k] = static_cast<V>(value);
    }
    return row;
  };
  auto sigma = read_row(static_cast<std::size_t>(n), "sigma");
  auto starts = read_row(static_cast<std::size_t>(l) + 1, "starts");
  auto aux = read_row(static_cast<std::size_t>(l), "aux");

  for (std::string rest; std::getline(in, rest);) {
    ++line_no;
    if (!detail::split_words(rest).empty()) throw parse_error(line_no, detail::split_words(rest)[0]);
  }
  return basic_fast_forward_code<V>::assemble(kind, std::move(sigma), std::move(starts),
                                              std::move(aux), options.index, options.hot);
}

template <std::unsigned_integral V = std::uint32_t>
basic_function_table<V> read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_table<V>(in);
}

template <std::unsigned_integral V = std::uint32_t>
basic_fast_forward_code<V> read_code_file(const std::string& path, build_options options = {}) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_code<V>(in, options);
}

template <std::unsigned_integral V>
void write_table_file(const basic_function_table<V>& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_table(t, out);
}

template <std::unsigned_integral V>
void write_code_file(const basic_fast_forward_code<V>& code, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_code(code, out);
}

}  // namespace ffiter
