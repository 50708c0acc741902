#pragma once

/// Domain types shared by the decomposition, coding and evaluation layers.
///
/// Every type here is immutable once constructed. Construction goes through
/// a validating factory, so holding an instance is proof that its
/// invariants hold.
///
/// Index convention: component i occupies concat positions
/// [starts[i], starts[i+1]), with starts[0] = 0 and starts[l] = n.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffiter/error.hpp"

namespace ffiter {

/// Number of iterations. Forward only.
using iterate_count = std::uint64_t;

/// A total function on [0, n), stored as its lookup table.
template <std::unsigned_integral V>
class basic_function_table {
 public:
  using vertex_type = V;

  /// Validates raw integers: length must equal n, n >= 1, every entry in [0, n).
  static basic_function_table validate(std::span<const std::int64_t> raw, std::int64_t n) {
    if (n < 1) throw length_mismatch_error(1, 0);
    if (static_cast<std::uint64_t>(n) > std::numeric_limits<V>::max())
      throw invariant_violation("domain size exceeds vertex type");
    if (raw.size() != static_cast<std::size_t>(n))
      throw length_mismatch_error(static_cast<std::size_t>(n), raw.size());
    std::vector<V> values(raw.size());
    for (std::size_t x = 0; x < raw.size(); ++x) {
      const auto v = raw[x];
      if (v < 0 || static_cast<std::uint64_t>(v) >= static_cast<std::uint64_t>(n))
        throw out_of_range_error(x, v);
      values[x] = static_cast<V>(v);
    }
    return basic_function_table(std::move(values));
  }

  static basic_function_table from_values(std::vector<V> values) {
    if (values.empty()) throw length_mismatch_error(1, 0);
    const auto n = values.size();
    for (std::size_t x = 0; x < n; ++x)
      if (values[x] >= n) throw out_of_range_error(x, static_cast<std::int64_t>(values[x]));
    return basic_function_table(std::move(values));
  }

  std::size_t size() const noexcept { return values_.size(); }
  V operator[](std::size_t x) const noexcept { return values_[x]; }
  V at(std::size_t x) const {
    if (x >= values_.size()) throw x_out_of_range_error(x, values_.size());
    return values_[x];
  }
  std::span<const V> values() const noexcept { return values_; }

  bool operator==(const basic_function_table&) const = default;

 private:
  explicit basic_function_table(std::vector<V> values) : values_(std::move(values)) {}

  std::vector<V> values_;
};

/// A function table known to be a bijection, carried with its inverse.
template <std::unsigned_integral V>
class basic_permutation_witness {
 public:
  using vertex_type = V;

  const basic_function_table<V>& table() const noexcept { return table_; }
  std::span<const V> inverse() const noexcept { return inverse_; }
  std::size_t size() const noexcept { return table_.size(); }

 private:
  template <std::unsigned_integral W>
  friend basic_permutation_witness<W> as_permutation(const basic_function_table<W>&);

  basic_permutation_witness(basic_function_table<V> table, std::vector<V> inverse)
      : table_(std::move(table)), inverse_(std::move(inverse)) {}

  basic_function_table<V> table_;
  std::vector<V> inverse_;
};

/// Fails with not_injective_error on the first value hit twice, scanning x upward.
template <std::unsigned_integral V>
basic_permutation_witness<V> as_permutation(const basic_function_table<V>& t) {
  const auto n = t.size();
  constexpr V unset = std::numeric_limits<V>::max();
  std::vector<V> inverse(n, unset);
  for (std::size_t x = 0; x < n; ++x) {
    const V y = t[x];
    if (inverse[y] != unset) throw not_injective_error(y, inverse[y], x);
    inverse[y] = static_cast<V>(x);
  }
  return basic_permutation_witness<V>(t, std::move(inverse));
}

/// An ordered sequence of orbits C_0 ... C_{l-1} partitioning [0, n), stored
/// as their concatenation plus boundaries and the auxiliary sequence
/// (aux[i] = position in concat of f(last element of C_i)).
template <std::unsigned_integral V>
class basic_orbit_decomposition {
 public:
  using vertex_type = V;

  /// Checks every structural invariant; throws invariant_violation naming the first failure.
  static basic_orbit_decomposition assemble(std::vector<V> concat, std::vector<V> starts,
                                            std::vector<V> aux) {
    check_layout(concat, starts, aux);
    std::vector<V> structure(aux.size());
    for (std::size_t i = 0; i < aux.size(); ++i) structure[i] = starts[i + 1] - starts[i];
    return basic_orbit_decomposition(std::move(concat), std::move(structure), std::move(starts),
                                     std::move(aux));
  }

  std::size_t size() const noexcept { return concat_.size(); }
  std::size_t components() const noexcept { return aux_.size(); }

  std::span<const V> concat() const noexcept { return concat_; }
  std::span<const V> structure() const noexcept { return structure_; }
  std::span<const V> starts() const noexcept { return starts_; }
  std::span<const V> aux() const noexcept { return aux_; }

  std::span<const V> component(std::size_t i) const noexcept {
    return std::span<const V>(concat_).subspan(starts_[i], structure_[i]);
  }
  bool is_rho(std::size_t i) const noexcept { return aux_[i] >= starts_[i]; }

  bool operator==(const basic_orbit_decomposition&) const = default;

  /// Shared with the code type: concat must be a permutation of [0, n),
  /// starts strictly increasing from 0 to n, and aux[i] in [0, starts[i+1]).
  static void check_layout(std::span<const V> concat, std::span<const V> starts,
                           std::span<const V> aux) {
    const auto n = concat.size();
    if (n == 0) throw invariant_violation("n >= 1");
    std::vector<bool> seen(n, false);
    for (const V v : concat) {
      if (v >= n || seen[v]) throw invariant_violation("concat is a permutation of [0, n)");
      seen[v] = true;
    }
    if (aux.empty()) throw invariant_violation("at least one component");
    if (starts.size() != aux.size() + 1)
      throw invariant_violation("starts has one more entry than aux");
    if (starts.front() != 0) throw invariant_violation("starts[0] = 0");
    if (starts.back() != n) throw invariant_violation("starts[l] = n");
    for (std::size_t i = 0; i + 1 < starts.size(); ++i)
      if (starts[i] >= starts[i + 1]) throw invariant_violation("starts strictly increasing");
    for (std::size_t i = 0; i < aux.size(); ++i)
      if (aux[i] >= starts[i + 1]) throw invariant_violation("aux[i] < starts[i+1]");
  }

 private:
  basic_orbit_decomposition(std::vector<V> concat, std::vector<V> structure,
                            std::vector<V> starts, std::vector<V> aux)
      : concat_(std::move(concat)),
        structure_(std::move(structure)),
        starts_(std::move(starts)),
        aux_(std::move(aux)) {}

  std::vector<V> concat_;
  std::vector<V> structure_;
  std::vector<V> starts_;
  std::vector<V> aux_;
};

enum class code_kind { permutation, general };

enum class index_mode { dense, binary_search };

struct build_options {
  index_mode index = index_mode::dense;
  /// Precompute per-component periods for general codes too.
  bool hot = false;
};

/// Result of one f^m(x) query plus the work it took.
template <std::unsigned_integral V>
struct basic_eval_result {
  V value{};
  std::uint64_t descents = 0;
  std::uint64_t table_reads = 0;
  std::uint64_t arith_ops = 0;

  bool operator==(const basic_eval_result&) const = default;
};

/// The deployable fast-forward representation: sigma, its inverse, the
/// component boundaries, the auxiliary sequence and the x -> i(x) lookup.
///
/// Permutation codes (and general codes built "hot") also carry
/// period[i] = starts[i+1] - aux[i], the cycle length reached inside
/// component i.
template <std::unsigned_integral V>
class basic_fast_forward_code {
 public:
  using vertex_type = V;

  static basic_fast_forward_code assemble(code_kind kind, std::vector<V> sigma,
                                          std::vector<V> starts, std::vector<V> aux,
                                          index_mode mode = index_mode::dense, bool hot = false) {
    basic_orbit_decomposition<V>::check_layout(sigma, starts, aux);
    if (kind == code_kind::permutation) {
      for (std::size_t i = 0; i < aux.size(); ++i)
        if (aux[i] != starts[i]) throw invariant_violation("permutation code has aux[i] = starts[i]");
    }
    const auto n = sigma.size();
    std::vector<V> sigma_inv(n);
    for (std::size_t x = 0; x < n; ++x) sigma_inv[sigma[x]] = static_cast<V>(x);

    std::vector<V> dense;
    if (mode == index_mode::dense) {
      dense.resize(n);
      for (std::size_t i = 0; i + 1 < starts.size(); ++i)
        std::fill(dense.begin() + starts[i], dense.begin() + starts[i + 1], static_cast<V>(i));
    }
    std::vector<V> period;
    if (kind == code_kind::permutation || hot) {
      period.resize(aux.size());
      for (std::size_t i = 0; i < aux.size(); ++i) period[i] = starts[i + 1] - aux[i];
    }
    return basic_fast_forward_code(kind, mode, std::move(sigma), std::move(sigma_inv),
                                   std::move(starts), std::move(aux), std::move(dense),
                                   std::move(period));
  }

  std::size_t size() const noexcept { return sigma_.size(); }
  std::size_t components() const noexcept { return aux_.size(); }
  code_kind kind() const noexcept { return kind_; }
  index_mode mode() const noexcept { return mode_; }
  bool hot() const noexcept { return !period_.empty(); }

  std::span<const V> sigma() const noexcept { return sigma_; }
  std::span<const V> sigma_inv() const noexcept { return sigma_inv_; }
  std::span<const V> starts() const noexcept { return starts_; }
  std::span<const V> aux() const noexcept { return aux_; }
  /// Empty in binary_search mode.
  std::span<const V> dense_index() const noexcept { return dense_; }
  /// Empty unless permutation or hot.
  std::span<const V> period() const noexcept { return period_; }

  bool is_rho(std::size_t i) const noexcept { return aux_[i] >= starts_[i]; }

  /// Equality over the serialized fields (kind, sigma, starts, aux).
  bool same_code(const basic_fast_forward_code& other) const noexcept {
    return kind_ == other.kind_ && sigma_ == other.sigma_ && starts_ == other.starts_ &&
           aux_ == other.aux_;
  }

 private:
  basic_fast_forward_code(code_kind kind, index_mode mode, std::vector<V> sigma,
                          std::vector<V> sigma_inv, std::vector<V> starts, std::vector<V> aux,
                          std::vector<V> dense, std::vector<V> period)
      : kind_(kind),
        mode_(mode),
        sigma_(std::move(sigma)),
        sigma_inv_(std::move(sigma_inv)),
        starts_(std::move(starts)),
        aux_(std::move(aux)),
        dense_(std::move(dense)),
        period_(std::move(period)) {}

  code_kind kind_;
  index_mode mode_;
  std::vector<V> sigma_;
  std::vector<V> sigma_inv_;
  std::vector<V> starts_;
  std::vector<V> aux_;
  std::vector<V> dense_;
  std::vector<V> period_;
};

/// Largest d with (d+1)(d+2)/2 <= n, i.e. floor((sqrt(1+8n)-3)/2), in exact
/// integer arithmetic. The greedy decomposition never needs more descents.
constexpr std::uint64_t descent_bound(std::uint64_t n) noexcept {
  if (n == 0) return 0;
  std::uint64_t d = 0;
  // (d+2)(d+3)/2 is the point count needed for d+1 descents.
  while ((d + 2) * (d + 3) / 2 <= n) ++d;
  return d;
}

using function_table = basic_function_table<std::uint32_t>;
using permutation_witness = basic_permutation_witness<std::uint32_t>;
using orbit_decomposition = basic_orbit_decomposition<std::uint32_t>;
using fast_forward_code = basic_fast_forward_code<std::uint32_t>;
using eval_result = basic_eval_result<std::uint32_t>;

}  // namespace ffiter
