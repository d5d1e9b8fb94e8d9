#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "frugal/core/corpus.hpp"
#include "frugal/core/problem.hpp"
#include "frugal/learner/learner.hpp"
#include "frugal/learner/selector.hpp"

namespace frugal::cli {

/// A configured domain ready to run.
struct Workspace {
  std::unique_ptr<ConfigProblem> problem;
  /// Non-null for the directory-backed domains.
  CorpusProblem* corpus = nullptr;
  std::vector<std::filesystem::path> files;
};

/// Loads the instance directory (sorted *.milp or *.metric files) or builds
/// the synthetic family. Unreadable instances raise ConfigError.
Workspace open_workspace(const RunConfig& cfg);

/// Independent seeded stream for one command, so that e.g. `select` does not
/// replay the draws `learn` made.
Rng command_stream(std::uint64_t seed, std::uint64_t purpose);

/// Writes trace.csv, subset.json and report.json under cfg.out.
learner::OptimalSubsetResult cmd_learn(const RunConfig& cfg);

/// Writes cells.csv under cfg.out.
std::vector<PartitionCell> cmd_partition(const RunConfig& cfg, Budget tau);

/// Reads a subset file written by cmd_learn and writes selected.json.
/// An empty subset raises std::runtime_error.
learner::SelectionResult cmd_select(const RunConfig& cfg, const std::filesystem::path& subset);

struct EvaluateSummary {
  double rho = 0.0;
  std::size_t n_samples = 0;
  Budget tau = 0;
  std::size_t solved = 0;
  double mean_capped = 0.0;
  std::vector<Budget> solved_losses;
};

/// Writes cdf.csv and evaluate.json under cfg.out.
EvaluateSummary cmd_evaluate(const RunConfig& cfg, double rho, std::size_t n_samples, Budget tau);

/// Full command line: parses `args` (without the program name), runs the
/// subcommand, and returns 0, 1 (config or usage) or 2 (runtime failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frugal::cli
