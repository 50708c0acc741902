#pragma once

/// Descent statistics over random functions.
///
/// For every n = 2^k in the requested range, `samples` tables are drawn with
/// seeds stream_seed(seed, n, sample) and coded with the requested strategy.
/// Each point's plateau descent count (descents at m = 2n) is recorded. The
/// per-table average is uniform over points; avg_descents is the mean of
/// the per-table averages.
///
/// ordered_cycle needs bijections, so under that strategy the samples are
/// random permutations instead of random functions.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>
#include <vector>

#include "ffiter/codec.hpp"
#include "ffiter/core.hpp"
#include "ffiter/decompose.hpp"
#include "ffiter/generators.hpp"

namespace ffiter {

/// Default experiment seed.
inline constexpr std::uint64_t default_experiment_seed = 20100301;

struct sample_stats {
  std::uint64_t n = 0;
  std::uint64_t sample = 0;
  std::uint64_t max_descents = 0;
  /// Sum of plateau descents over all points; the average is total / n.
  std::uint64_t total_descents = 0;

  double avg_descents() const { return static_cast<double>(total_descents) / static_cast<double>(n); }
};

struct descent_stats {
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_descents = 0;
  double avg_descents = 0;
  double log2n = 0;
  /// log2n / avg_descents; +inf when no descents occurred.
  double ratio = 0;
  std::uint64_t bound = 0;
  double elapsed_ms = 0;
  std::vector<sample_stats> per_sample;
};

struct experiment_config {
  unsigned exp_min = 2;
  unsigned exp_max = 14;
  std::uint64_t samples = 100;
  std::uint64_t seed = default_experiment_seed;
  decomposition_strategy strategy = decomposition_strategy::greedy_orbit;
  /// 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Plateau descent statistics of a single table under a strategy.
template <std::unsigned_integral V>
sample_stats measure_descents(const basic_function_table<V>& t, decomposition_strategy strategy) {
  const auto code = build_code(t, strategy);
  sample_stats stats;
  stats.n = t.size();
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto d = plateau_descents(code, static_cast<V>(x));
    stats.max_descents = std::max(stats.max_descents, d);
    stats.total_descents += d;
  }
  return stats;
}

inline sample_stats run_sample(std::uint64_t n, std::uint64_t sample, std::uint64_t seed,
                               decomposition_strategy strategy) {
  const auto sample_seed = stream_seed(seed, n, sample);
  sample_stats stats = strategy == decomposition_strategy::ordered_cycle
                           ? measure_descents(random_permutation(n, sample_seed).table(), strategy)
                           : measure_descents(random_function(n, sample_seed), strategy);
  stats.sample = sample;
  return stats;
}

inline descent_stats aggregate(std::uint64_t n, std::uint64_t seed,
                               std::vector<sample_stats> per_sample) {
  descent_stats row;
  row.n = n;
  row.samples = per_sample.size();
  row.seed = seed;
  row.log2n = std::log2(static_cast<double>(n));
  row.bound = descent_bound(n);
  double sum_of_averages = 0;
  for (const auto& s : per_sample) {
    row.max_descents = std::max(row.max_descents, s.max_descents);
    sum_of_averages += s.avg_descents();
  }
  row.avg_descents = sum_of_averages / static_cast<double>(per_sample.size());
  row.ratio = row.avg_descents > 0 ? row.log2n / row.avg_descents
                                   : std::numeric_limits<double>::infinity();
  row.per_sample = std::move(per_sample);
  return row;
}

/// One row per n = 2^exp_min .. 2^exp_max. Samples may run on several
/// threads; results are stored by sample index, so the output does not
/// depend on scheduling.
inline std::vector<descent_stats> run_experiment(const experiment_config& config) {
  if (config.exp_min < 1 || config.exp_min > config.exp_max || config.exp_max > 31)
    throw invariant_violation("1 <= exp_min <= exp_max <= 31");
  if (config.samples < 1) throw invariant_violation("samples >= 1");
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);

  std::vector<descent_stats> rows;
  for (unsigned e = config.exp_min; e <= config.exp_max; ++e) {
    const std::uint64_t n = std::uint64_t{1} << e;
    const auto started = std::chrono::steady_clock::now();
    std::vector<sample_stats> per_sample(config.samples);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (std::uint64_t k; (k = next.fetch_add(1)) < config.samples;)
        per_sample[k] = run_sample(n, k, config.seed, config.strategy);
    };
    const auto pool_size = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, config.samples));
    if (pool_size <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned k = 0; k < pool_size; ++k) pool.emplace_back(worker);
    }
    auto row = aggregate(n, config.seed, std::move(per_sample));
    row.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline void write_fixed(std::ostream& out, double value) {
  if (std::isinf(value)) {
    out << "inf";
  } else {
    out << std::fixed << std::setprecision(6) << value;
  }
}

}  // namespace detail

inline void emit_csv(const std::vector<descent_stats>& rows, std::ostream& out) {
  out << "n,samples,seed,max_descents,avg_descents,log2n,ratio,bound,elapsed_ms\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.samples << ',' << r.seed << ',' << r.max_descents << ',';
    detail::write_fixed(out, r.avg_descents);
    out << ',';
    detail::write_fixed(out, r.log2n);
    out << ',';
    detail::write_fixed(out, r.ratio);
    out << ',' << r.bound << ',';
    detail::write_fixed(out, r.elapsed_ms);
    out << '\n';
  }
  if (!out) throw io_error("write failed");
}

/// Per-sample rows: n,sample,max_descents,avg_descents.
inline void emit_detail_csv(const std::vector<descent_stats>& rows, std::ostream& out) {
  out << "n,sample,max_descents,avg_descents\n";
  for (const auto& r : rows) {
    for (const auto& s : r.per_sample) {
      out << s.n << ',' << s.sample << ',' << s.max_descents << ',';
      detail::write_fixed(out, s.avg_descents());
      out << '\n';
    }
  }
  if (!out) throw io_error("write failed");
}

}  // namespace ffiter
