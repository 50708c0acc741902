#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ffiter/experiments.hpp"
#include "ffiter/oracle.hpp"

namespace ffiter {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Drops the trailing elapsed_ms column.
std::string without_timing(const std::string& csv) {
  std::string out;
  for (const auto& line : lines_of(csv)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

TEST(Experiment, SmallRunWithinBound) {
  experiment_config config;
  config.exp_min = 2;
  config.exp_max = 6;
  config.samples = 100;
  const auto rows = run_experiment(config);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.samples, 100u);
    EXPECT_EQ(r.bound, descent_bound(r.n));
    EXPECT_LE(r.max_descents, r.bound);
    EXPECT_LE(r.avg_descents, static_cast<double>(r.max_descents));
    EXPECT_GE(r.avg_descents, 0.0);
    EXPECT_EQ(r.per_sample.size(), 100u);
  }
  EXPECT_EQ(rows[0].n, 4u);
  EXPECT_EQ(rows[0].bound, 1u);
}

TEST(Experiment, AllFunctionsOnFourPointsRespectBound) {
  // every one of the 256 functions on 4 points
  std::uint64_t worst = 0;
  for (std::uint32_t code = 0; code < 256; ++code) {
    std::vector<std::uint32_t> values{code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3};
    const auto t = function_table::from_values(values);
    worst = std::max(worst, measure_descents(t, decomposition_strategy::greedy_orbit).max_descents);
  }
  EXPECT_EQ(worst, descent_bound(4));
}

TEST(Experiment, PermutationsNeverDescend) {
  experiment_config config;
  config.exp_min = 2;
  config.exp_max = 8;
  config.samples = 20;
  config.strategy = decomposition_strategy::ordered_cycle;
  for (const auto& r : run_experiment(config)) {
    EXPECT_EQ(r.max_descents, 0u);
    EXPECT_EQ(r.avg_descents, 0.0);
  }
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  experiment_config config;
  config.exp_min = 3;
  config.exp_max = 9;
  config.samples = 30;
  config.threads = 1;
  std::ostringstream a;
  emit_csv(run_experiment(config), a);
  config.threads = 7;
  std::ostringstream b;
  emit_csv(run_experiment(config), b);
  EXPECT_EQ(without_timing(a.str()), without_timing(b.str()));
}

TEST(Experiment, PlateauMatchesOracleDescents) {
  const auto t = random_function(300, stream_seed(default_experiment_seed, 300, 0));
  const auto stats = measure_descents(t, decomposition_strategy::greedy_orbit);
  const auto d = greedy_orbit_decomposition(t);
  std::uint64_t total = 0;
  std::uint64_t worst = 0;
  for (std::uint32_t x = 0; x < 300; ++x) {
    const auto k = oracle_descents(t, d, x);
    total += k;
    worst = std::max(worst, k);
  }
  EXPECT_EQ(stats.total_descents, total);
  EXPECT_EQ(stats.max_descents, worst);
}

TEST(Experiment, RejectsBadRanges) {
  experiment_config config;
  config.exp_min = 0;
  EXPECT_THROW(run_experiment(config), invariant_violation);
  config.exp_min = 5;
  config.exp_max = 4;
  EXPECT_THROW(run_experiment(config), invariant_violation);
  config.exp_max = 6;
  config.samples = 0;
  EXPECT_THROW(run_experiment(config), invariant_violation);
}

TEST(Csv, HeaderOnlyWhenEmpty) {
  std::ostringstream out;
  emit_csv({}, out);
  EXPECT_EQ(out.str(), "n,samples,seed,max_descents,avg_descents,log2n,ratio,bound,elapsed_ms\n");
}

TEST(Csv, RowFormat) {
  descent_stats row;
  row.n = 4;
  row.samples = 100;
  row.seed = 7;
  row.max_descents = 1;
  row.avg_descents = 0.25;
  row.log2n = 2;
  row.ratio = 8;
  row.bound = 1;
  row.elapsed_ms = 1.5;
  std::ostringstream out;
  emit_csv({row}, out);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], "4,100,7,1,0.250000,2.000000,8.000000,1,1.500000");

  row.avg_descents = 0;
  row.ratio = std::numeric_limits<double>::infinity();
  std::ostringstream zero;
  emit_csv({row}, zero);
  EXPECT_EQ(lines_of(zero.str())[1], "4,100,7,1,0.000000,2.000000,inf,1,1.500000");
}

TEST(Csv, OneRowPerExponent) {
  experiment_config config;
  config.exp_min = 2;
  config.exp_max = 7;
  config.samples = 3;
  std::ostringstream out;
  const auto rows = run_experiment(config);
  emit_csv(rows, out);
  EXPECT_EQ(lines_of(out.str()).size(), 1u + 6u);
  std::ostringstream detail;
  emit_detail_csv(rows, detail);
  const auto detail_lines = lines_of(detail.str());
  EXPECT_EQ(detail_lines.size(), 1u + 6u * 3u);
  EXPECT_EQ(detail_lines[0], "n,sample,max_descents,avg_descents");
}

}  // namespace
}  // namespace ffiter
