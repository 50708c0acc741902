// ffiter: build fast-forward codes for lookup tables and query their iterates.
//
// Exit status: 0 success, 2 validation error, 3 I/O error, 4 --check mismatch.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ffiter/ffiter.hpp"

namespace {

constexpr int exit_validation = 2;
constexpr int exit_io = 3;
constexpr int exit_mismatch = 4;

const std::map<std::string, ffiter::decomposition_strategy> strategies{
    {"ordered", ffiter::decomposition_strategy::ordered_orbit},
    {"greedy", ffiter::decomposition_strategy::greedy_orbit},
    {"cycle", ffiter::decomposition_strategy::ordered_cycle},
    {"perm", ffiter::decomposition_strategy::ordered_cycle},
};

const std::map<std::string, ffiter::index_mode> index_modes{
    {"dense", ffiter::index_mode::dense},
    {"bsearch", ffiter::index_mode::binary_search},
};

// Runs `body` with `path` opened for writing, or with stdout for "-".
template <class Body>
void with_output(const std::string& path, Body&& body) {
  if (path == "-") {
    body(std::cout);
    std::cout.flush();
    if (!std::cout) throw ffiter::io_error("write to stdout failed");
    return;
  }
  std::ofstream out(path);
  if (!out) throw ffiter::io_error("cannot open " + path + " for writing");
  body(out);
  out.flush();
  if (!out) throw ffiter::io_error("write to " + path + " failed");
}

ffiter::function_table load_table(const std::string& path) {
  if (path == "-") return ffiter::read_table(std::cin);
  return ffiter::read_table_file(path);
}

std::uint64_t worst_case_descents(ffiter::decomposition_strategy strategy, std::uint64_t n) {
  switch (strategy) {
    case ffiter::decomposition_strategy::ordered_cycle: return 0;
    case ffiter::decomposition_strategy::ordered_orbit: return n - 1;
    case ffiter::decomposition_strategy::greedy_orbit: return ffiter::descent_bound(n);
  }
  return n - 1;
}

struct build_args {
  std::string input;
  std::string output = "-";
  ffiter::decomposition_strategy strategy = ffiter::decomposition_strategy::greedy_orbit;
  ffiter::index_mode index = ffiter::index_mode::dense;
  bool hot = false;
};

int cmd_build(const build_args& args) {
  const auto table = load_table(args.input);
  const auto started = std::chrono::steady_clock::now();
  const auto code = ffiter::build_code(table, args.strategy, {args.index, args.hot});
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  with_output(args.output, [&](std::ostream& out) { ffiter::write_code(code, out); });
  auto& info = args.output == "-" ? std::cerr : std::cout;
  info << "components " << code.components() << " bound "
       << worst_case_descents(args.strategy, code.size()) << " worst_depth "
       << ffiter::summarize(code).worst_depth << " preprocess_ms " << ms << '\n';
  return 0;
}

struct eval_args {
  std::string code;
  std::uint64_t x = 0;
  std::uint64_t m = 0;
  std::optional<std::string> check;
  bool trace = false;
  ffiter::index_mode index = ffiter::index_mode::dense;
};

int cmd_eval(const eval_args& args) {
  const auto code = ffiter::read_code_file(args.code, {args.index, false});
  if (args.x >= code.size()) throw ffiter::x_out_of_range_error(args.x, code.size());
  const auto x = static_cast<std::uint32_t>(args.x);
  ffiter::eval_result result;
  if (args.trace) {
    result = ffiter::iterate(code, x, args.m, [](const auto& step) {
      ffiter::print_descent_step(step, std::cerr);
    });
  } else {
    result = ffiter::iterate(code, x, args.m);
  }
  ffiter::print_eval(result, std::cout);
  if (args.check) {
    const auto table = load_table(*args.check);
    if (table.size() != code.size())
      throw ffiter::length_mismatch_error(code.size(), table.size());
    const auto expected = ffiter::oracle_iterate(table, x, args.m);
    if (expected != result.value) {
      std::cerr << "CheckMismatch: code gives " << result.value << ", table gives " << expected
                << '\n';
      return exit_mismatch;
    }
  }
  return 0;
}

struct gen_args {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::string output = "-";
};

int cmd_gen(const gen_args& args) {
  if (args.n < 1 || args.n > UINT32_MAX) throw ffiter::invariant_violation("1 <= n < 2^32");
  const auto table = [&] {
    if (args.family == "random") return ffiter::random_function(args.n, args.seed);
    if (args.family == "perm") return ffiter::random_permutation(args.n, args.seed).table();
    if (args.family == "chain") return ffiter::chain_function(args.n);
    if (args.family == "antichain") return ffiter::anti_chain_function(args.n);
    return ffiter::staircase_function(args.n).table;
  }();
  with_output(args.output, [&](std::ostream& out) { ffiter::write_table(table, out); });
  return 0;
}

struct stats_args {
  ffiter::experiment_config config;
  std::string out = "-";
  std::optional<std::string> detail;
};

int cmd_stats(stats_args args) {
  if (args.config.threads == 0) {
    if (const char* env = std::getenv("FFITER_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) args.config.threads = static_cast<unsigned>(cap);
    }
  }
  const auto rows = ffiter::run_experiment(args.config);
  with_output(args.out, [&](std::ostream& out) { ffiter::emit_csv(rows, out); });
  if (args.detail)
    with_output(*args.detail, [&](std::ostream& out) { ffiter::emit_detail_csv(rows, out); });
  auto& info = args.out == "-" ? std::cerr : std::cout;
  for (const auto& r : rows)
    info << "n " << r.n << " max " << r.max_descents << " avg " << r.avg_descents << " bound "
         << r.bound << " log2n " << r.log2n << '\n';
  return 0;
}

int cmd_inspect(const std::string& path) {
  const auto code = ffiter::read_code_file(path);
  ffiter::print_summary(ffiter::summarize(code), std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast-forward iteration of lookup-table functions"};
  app.require_subcommand(1);

  build_args build;
  auto* build_cmd = app.add_subcommand("build", "Code a table for fast iteration");
  build_cmd->add_option("--input", build.input, "Table file ('-' for stdin)")->required();
  build_cmd->add_option("--output", build.output, "Code file ('-' for stdout)");
  build_cmd->add_option("--strategy", build.strategy, "ordered | greedy | cycle")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  build_cmd->add_option("--index", build.index, "dense | bsearch")
      ->transform(CLI::CheckedTransformer(index_modes, CLI::ignore_case));
  build_cmd->add_flag("--hot", build.hot, "Precompute per-component periods");

  eval_args eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate f^m(x) from a code");
  eval_cmd->add_option("--code", eval.code, "Code file")->required();
  eval_cmd->add_option("--x", eval.x, "Point")->required();
  eval_cmd->add_option("--m", eval.m, "Number of iterations")->required();
  eval_cmd->add_option("--check", eval.check, "Table file to verify against");
  eval_cmd->add_flag("--trace", eval.trace, "Print each descent to stderr");
  eval_cmd->add_option("--index", eval.index, "dense | bsearch")
      ->transform(CLI::CheckedTransformer(index_modes, CLI::ignore_case));

  gen_args gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a table");
  gen_cmd->add_option("--family", gen.family, "random | perm | chain | antichain | staircase")
      ->required()
      ->check(CLI::IsMember({"random", "perm", "chain", "antichain", "staircase"}));
  gen_cmd->add_option("--n", gen.n, "Domain size")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families");
  gen_cmd->add_option("--output", gen.output, "Table file ('-' for stdout)");

  stats_args stats;
  auto* stats_cmd = app.add_subcommand("stats", "Descent statistics over random functions");
  stats_cmd->add_option("--min-exp", stats.config.exp_min, "Smallest n is 2^min-exp");
  stats_cmd->add_option("--max-exp", stats.config.exp_max, "Largest n is 2^max-exp");
  stats_cmd->add_option("--samples", stats.config.samples, "Tables per n");
  stats_cmd->add_option("--seed", stats.config.seed, "Experiment seed");
  stats_cmd->add_option("--strategy", stats.config.strategy,
                        "greedy | ordered | cycle (cycle samples permutations)")
      ->transform(CLI::CheckedTransformer(strategies, CLI::ignore_case));
  stats_cmd->add_option("--threads", stats.config.threads,
                        "Worker threads (default FFITER_THREADS or all cores)");
  stats_cmd->add_option("--out", stats.out, "CSV file ('-' for stdout)");
  stats_cmd->add_option("--detail", stats.detail, "Per-sample CSV file");

  std::string inspect_path;
  auto* inspect_cmd = app.add_subcommand("inspect", "Describe a code file");
  inspect_cmd->add_option("--code", inspect_path, "Code file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_validation;
  }

  try {
    if (*build_cmd) return cmd_build(build);
    if (*eval_cmd) return cmd_eval(eval);
    if (*gen_cmd) return cmd_gen(gen);
    if (*stats_cmd) return cmd_stats(stats);
    if (*inspect_cmd) return cmd_inspect(inspect_path);
  } catch (const ffiter::error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ffiter::error_kind::io_error ? exit_io : exit_validation;
  }
  return 0;
}
