#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ffiter/codec.hpp"
#include "ffiter/generators.hpp"
#include "ffiter/oracle.hpp"
#include "test_support.hpp"

namespace ffiter {
namespace {

using testing::table_of;
using testing::to_vector;
using vec = std::vector<std::uint32_t>;

constexpr decomposition_strategy general_strategies[] = {decomposition_strategy::ordered_orbit,
                                                         decomposition_strategy::greedy_orbit};
constexpr index_mode modes[] = {index_mode::dense, index_mode::binary_search};

fast_forward_code example_code(index_mode mode = index_mode::dense) {
  return build_code(table_of({5, 6, 3, 5, 2, 2, 1}), decomposition_strategy::ordered_orbit,
                    {mode, false});
}

TEST(BuildCode, WorkedExample) {
  const auto code = example_code();
  EXPECT_EQ(to_vector(code.sigma()), (vec{0, 5, 2, 3, 1, 6, 4}));
  EXPECT_EQ(to_vector(code.starts()), (vec{0, 4, 6, 7}));
  EXPECT_EQ(to_vector(code.aux()), (vec{1, 4, 2}));
  EXPECT_EQ(code.kind(), code_kind::general);
}

TEST(BuildCode, IdentityPermutation) {
  const auto code = build_code(table_of({0, 1, 2, 3}), decomposition_strategy::ordered_cycle);
  EXPECT_EQ(to_vector(code.sigma()), (vec{0, 1, 2, 3}));
  EXPECT_EQ(to_vector(code.starts()), (vec{0, 1, 2, 3, 4}));
  EXPECT_EQ(to_vector(code.aux()), (vec{0, 1, 2, 3}));
  EXPECT_EQ(code.kind(), code_kind::permutation);
}

TEST(BuildCode, StaircaseGreedy) {
  const auto code = build_code(staircase_function(10).table, decomposition_strategy::greedy_orbit);
  EXPECT_EQ(to_vector(code.starts()), (vec{0, 4, 7, 9, 10}));
  EXPECT_EQ(to_vector(code.aux()), (vec{3, 3, 6, 8}));
}

TEST(BuildCode, CycleOnNonBijectionThrows) {
  EXPECT_THROW(build_code(table_of({1, 2, 3, 1, 5, 4, 2}), decomposition_strategy::ordered_cycle),
               not_injective_error);
}

TEST(PiIterate, WorkedExampleTenthIterate) {
  for (const auto mode : modes) {
    const auto r = pi_iterate<std::uint32_t>(example_code(mode), 6, 10);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.descents, 1u);
  }
}

TEST(PiIterate, TraceReportsEachDescent) {
  std::vector<basic_descent_step<std::uint32_t>> steps;
  pi_iterate<std::uint32_t>(example_code(), 6, 10, [&](const auto& s) { steps.push_back(s); });
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].component, 2u);
  EXPECT_EQ(steps[0].from, 6u);
  EXPECT_EQ(steps[0].r, 9u);
  EXPECT_EQ(steps[0].target, 2u);
}

TEST(PiIterate, ZeroIterationsIsIdentity) {
  const auto code = example_code();
  for (std::uint32_t x = 0; x < 7; ++x) {
    const auto r = pi_iterate(code, x, 0);
    EXPECT_EQ(r.value, x);
    EXPECT_EQ(r.descents, 0u);
  }
}

TEST(PiIterate, StaircaseThreeDescents) {
  const auto code = build_code(staircase_function(10).table, decomposition_strategy::greedy_orbit);
  const auto r = pi_iterate<std::uint32_t>(code, 9, 3);
  EXPECT_EQ(r.value, 3u);
  EXPECT_EQ(r.descents, 3u);
}

TEST(PiIterate, RejectsPointOutsideDomain) {
  EXPECT_THROW(pi_iterate<std::uint32_t>(example_code(), 7, 1), x_out_of_range_error);
  EXPECT_THROW(iterate<std::uint32_t>(example_code(), 7, 1), x_out_of_range_error);
}

TEST(PiIterate, HugeIterationCounts) {
  const auto code = example_code();
  const auto t = table_of({5, 6, 3, 5, 2, 2, 1});
  for (const std::uint64_t m : {UINT64_MAX, UINT64_MAX - 1, std::uint64_t{1} << 63}) {
    for (std::uint32_t x = 0; x < 7; ++x) {
      // every point is on a cycle after one step and the cycle lengths 3 and 2
      // divide 6, so m and m mod 6 + 6 agree
      EXPECT_EQ(iterate(code, x, m).value, naive_iterate(t, x, m % 6 + 6));
    }
  }
}

TEST(Iterate, WorkedExample) {
  const auto t = table_of({5, 6, 3, 5, 2, 2, 1});
  // f(0)=5, f^2(0)=2, f^3(0)=3, f^4(0)=5
  EXPECT_EQ(naive_iterate<std::uint32_t>(t, 0, 4), 5u);
  EXPECT_EQ(iterate<std::uint32_t>(example_code(), 0, 4).value, 5u);
}

TEST(Iterate, ThreeCycleCubedIsIdentity) {
  const auto code = build_code(table_of({2, 0, 1}), decomposition_strategy::ordered_cycle);
  EXPECT_EQ(iterate<std::uint32_t>(code, 1, 3).value, 1u);
}

TEST(Iterate, OneStepReproducesTable) {
  for (const auto strategy : general_strategies) {
    for (const auto mode : modes) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = random_function(50, seed);
        const auto code = build_code(t, strategy, {mode, false});
        for (std::uint32_t x = 0; x < 50; ++x) ASSERT_EQ(iterate(code, x, 1).value, t[x]);
      }
    }
  }
}

TEST(ComponentOf, Examples) {
  for (const auto mode : modes) {
    EXPECT_EQ(component_of<std::uint32_t>(example_code(mode), 5), 1u);
    const auto single = build_code(table_of({1, 2, 0}), decomposition_strategy::ordered_orbit,
                                   {mode, false});
    for (std::uint32_t y = 0; y < 3; ++y) EXPECT_EQ(component_of(single, y), 0u);
    const auto stairs = build_code(staircase_function(10).table,
                                   decomposition_strategy::greedy_orbit, {mode, false});
    EXPECT_EQ(component_of<std::uint32_t>(stairs, 9), 3u);
  }
}

TEST(ComponentOf, BinarySearchComparisonCount) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_function(300, seed);
    const auto code = build_code(t, decomposition_strategy::ordered_orbit,
                                 {index_mode::binary_search, false});
    const auto l = code.components();
    const auto limit = static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(l))));
    for (std::uint32_t y = 0; y < 300; ++y) {
      std::uint64_t reads = 0;
      const auto i = component_of(code, y, &reads);
      ASSERT_LE(code.starts()[i], y);
      ASSERT_LT(y, code.starts()[i + 1]);
      ASSERT_LE(reads, limit);
    }
  }
}

// Conjugation property: for every strategy and index mode, every x and every m <= 3n.
TEST(Iterate, AgreesWithOracleExhaustively) {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto t = random_function(n, seed * 1000 + n);
      for (const auto strategy : general_strategies) {
        for (const auto mode : modes) {
          for (const bool hot : {false, true}) {
            const auto code = build_code(t, strategy, {mode, hot});
            for (std::uint32_t x = 0; x < n; ++x) {
              std::uint32_t expected = x;
              for (std::uint64_t m = 0; m <= 3 * n; ++m) {
                ASSERT_EQ(iterate(code, x, m).value, expected)
                    << "n=" << n << " x=" << x << " m=" << m;
                expected = t[expected];
              }
            }
          }
        }
      }
    }
  }
}

TEST(Iterate, PermutationPathIsFiveReadsAndNoDescents) {
  for (const std::uint32_t n : {1u, 2u, 17u, 256u}) {
    const auto p = random_permutation(n, n);
    const auto code = build_code(p.table(), decomposition_strategy::ordered_cycle);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (const std::uint64_t m : {0ull, 1ull, 5ull, 1000000007ull, ~0ull}) {
        const auto r = iterate(code, x, m);
        ASSERT_EQ(r.descents, 0u);
        ASSERT_EQ(r.table_reads, 5u);
        ASSERT_LE(r.arith_ops, 5u);
        ASSERT_EQ(r.value, oracle_iterate(p.table(), x, m));
      }
    }
  }
}

TEST(Iterate, PermutationCodesNeverDescendInEitherMode) {
  const auto p = random_permutation(500, 9);
  const auto code = build_code(p.table(), decomposition_strategy::ordered_cycle,
                               {index_mode::binary_search, false});
  for (std::uint32_t x = 0; x < 500; ++x) {
    const auto r = iterate(code, x, 123456789);
    ASSERT_EQ(r.descents, 0u);
    ASSERT_EQ(r.value, oracle_iterate(p.table(), x, 123456789));
  }
}

TEST(Iterate, IndexModesAgree) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = random_function(1000, seed);
    for (const auto strategy : general_strategies) {
      const auto dense = build_code(t, strategy, {index_mode::dense, false});
      const auto search = build_code(t, strategy, {index_mode::binary_search, false});
      for (int q = 0; q < 2000; ++q) {
        const auto x = static_cast<std::uint32_t>(rng() % 1000);
        const auto m = rng() % 100000;
        const auto a = iterate(dense, x, m);
        const auto b = iterate(search, x, m);
        ASSERT_EQ(a.value, b.value);
        ASSERT_EQ(a.descents, b.descents);
      }
    }
  }
}

TEST(Iterate, IterationCountsAdd) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = random_function(777, seed);
    const auto code = build_code(t, decomposition_strategy::greedy_orbit);
    for (int q = 0; q < 1000; ++q) {
      const auto x = static_cast<std::uint32_t>(rng() % 777);
      const auto a = rng() % (1u << 30);
      const auto b = rng() % (1u << 30);
      ASSERT_EQ(iterate(code, x, a + b).value, iterate(code, iterate(code, x, a).value, b).value);
    }
  }
}

TEST(Iterate, DescentsGrowWithMAndPlateauAtN) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::uint32_t n = 60;
    const auto t = random_function(n, seed + 50);
    for (const auto strategy : general_strategies) {
      const auto code = build_code(t, strategy);
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint64_t previous = 0;
        for (std::uint64_t m = 0; m <= 3 * n; ++m) {
          const auto d = iterate(code, x, m).descents;
          ASSERT_GE(d, previous);
          if (m >= n) {
            ASSERT_EQ(d, plateau_descents(code, x));
          }
          ASSERT_LE(d, n - 1);
          previous = d;
        }
      }
    }
  }
}

TEST(Iterate, GreedyDescentsWithinBound) {
  for (const std::uint32_t n : {4u, 10u, 100u, 1000u}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto code = build_code(random_function(n, seed), decomposition_strategy::greedy_orbit);
      for (std::uint32_t x = 0; x < n; ++x) ASSERT_LE(plateau_descents(code, x), descent_bound(n));
    }
  }
}

TEST(Iterate, HotModeSameValuesFewerOps) {
  const auto t = random_function(500, 77);
  const auto cold = build_code(t, decomposition_strategy::greedy_orbit);
  const auto hot = build_code(t, decomposition_strategy::greedy_orbit, {index_mode::dense, true});
  EXPECT_TRUE(hot.hot());
  for (std::uint32_t x = 0; x < 500; ++x) {
    const auto a = iterate(cold, x, 1000);
    const auto b = iterate(hot, x, 1000);
    ASSERT_EQ(a.value, b.value);
    ASSERT_EQ(a.descents, b.descents);
    ASSERT_LE(b.arith_ops, a.arith_ops);
  }
}

TEST(Iterate, WideVertexType) {
  const auto t = random_function<std::uint64_t>(300, 1);
  const auto code = build_code(t, decomposition_strategy::greedy_orbit);
  for (std::uint64_t x = 0; x < 300; ++x)
    ASSERT_EQ(iterate(code, x, 12345).value, oracle_iterate(t, x, 12345));
}

}  // namespace
}  // namespace ffiter
