#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "frugal/bnb/milp.hpp"
#include "frugal/clustering/instance.hpp"
#include "frugal/clustering/problem.hpp"
#include "frugal/core/parallel.hpp"
#include "output.hpp"

namespace frugal::cli {

namespace {

using nlohmann::json;

std::shared_ptr<spdlog::logger> quiet_logger() {
  auto logger = std::make_shared<spdlog::logger>(
      "frugal", std::make_shared<spdlog::sinks::stderr_sink_mt>());
  logger->set_level(spdlog::level::err);
  return logger;
}

// Commands called directly stay quiet; run_cli swaps in a logger on its
// error stream for the duration of one invocation.
std::shared_ptr<spdlog::logger> g_log = quiet_logger();

struct LoggerScope {
  explicit LoggerScope(std::shared_ptr<spdlog::logger> logger) { g_log = std::move(logger); }
  ~LoggerScope() { g_log = quiet_logger(); }
};

std::vector<std::filesystem::path> list_instances(const std::filesystem::path& dir,
                                                  const std::string& extension) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw ConfigError("instance directory '" + dir.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const auto& x, const auto& y) {
    return x.filename().string() < y.filename().string();
  });
  if (files.empty()) {
    throw ConfigError("no " + extension + " files in '" + dir.string() + "'");
  }
  return files;
}

template <typename Reader>
auto read_all(const std::vector<std::filesystem::path>& files, Reader reader) {
  std::vector<decltype(reader(files.front()))> out;
  for (const auto& f : files) {
    try {
      out.push_back(reader(f));
    } catch (const std::exception& e) {
      throw ConfigError(f.filename().string() + ": " + e.what());
    }
  }
  return out;
}

json config_echo(const RunConfig& cfg) {
  json echo = cfg.source;
  echo["seed"] = cfg.learner.seed;
  return echo;
}

json entry_json(const learner::SubsetEntry& e, const ParamPoint& p) {
  return {{"rho", p.rho()},
          {"cell", cell_json(e.cell)},
          {"z", e.z},
          {"round", e.round},
          {"tau_prime", e.tau_prime},
          {"T_prime", e.t_prime}};
}

spdlog::level::level_enum log_level_from_env() {
  const char* raw = std::getenv("FRUGAL_LOG");
  const std::string v = raw ? raw : "info";
  if (v == "error") return spdlog::level::err;
  if (v == "info") return spdlog::level::info;
  if (v == "debug") return spdlog::level::debug;
  throw ConfigError("FRUGAL_LOG must be one of error, info, debug");
}

}  // namespace

Rng command_stream(std::uint64_t seed, std::uint64_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(purpose)};
  return Rng(seq);
}

Workspace open_workspace(const RunConfig& cfg) {
  Workspace ws;
  switch (cfg.domain) {
    case DomainKind::synthetic:
      ws.problem = std::make_unique<synthetic::SyntheticProblem>(cfg.family);
      break;
    case DomainKind::bnb: {
      ws.files = list_instances(cfg.instances, ".milp");
      auto milps = read_all(ws.files, [](const auto& p) { return bnb::read_milp(p); });
      auto p = std::make_unique<bnb::BnbProblem>(std::move(milps), cfg.threads, cfg.f_mode);
      ws.corpus = p.get();
      ws.problem = std::move(p);
      break;
    }
    case DomainKind::clustering: {
      ws.files = list_instances(cfg.instances, ".metric");
      auto insts = read_all(ws.files, [](const auto& p) { return clustering::read_clustering(p); });
      auto p = std::make_unique<clustering::ClusteringProblem>(std::move(insts), cfg.threads);
      ws.corpus = p.get();
      ws.problem = std::move(p);
      break;
    }
  }
  g_log->debug("domain {} with {} instance files", to_string(cfg.domain), ws.files.size());
  return ws;
}

learner::OptimalSubsetResult cmd_learn(const RunConfig& cfg) {
  Workspace ws = open_workspace(cfg);
  const auto result = learner::learn_subset(*ws.problem, cfg.learner, [](const learner::TraceRow& r) {
    g_log->info("round {}: cap {} samples {} cells {} admitted {} T {}", r.t, r.cap, r.samples,
                r.cells, r.admitted, format_double(r.T));
  });

  json subset{{"domain", to_string(cfg.domain)},
              {"seed", cfg.learner.seed},
              {"epsilon", cfg.learner.epsilon},
              {"delta", cfg.learner.delta},
              {"zeta", cfg.learner.zeta},
              {"eta", result.eta},
              {"t_bar", result.t_bar},
              {"T_bar", result.T_bar},
              {"parameters", json::array()},
              {"entries", json::array()}};
  for (std::size_t i = 0; i < result.parameters.size(); ++i) {
    subset["parameters"].push_back(result.parameters[i].rho());
    subset["entries"].push_back(entry_json(result.entries[i], result.parameters[i]));
  }

  json report{{"command", "learn"},
              {"seed", cfg.learner.seed},
              {"config", config_echo(cfg)},
              {"t_bar", result.t_bar},
              {"T_bar", result.T_bar},
              {"eta", result.eta},
              {"subset_size", result.parameters.size()},
              {"counters",
               {{"oracle_calls", result.oracle_calls},
                {"rounds", result.trace.size() - 1},
                {"corpus_size", ws.files.size()}}},
              {"trace", trace_json(result.trace)}};

  write_file(cfg.out / "trace.csv", trace_csv(result.trace));
  write_file(cfg.out / "subset.json", dump_json(subset));
  write_file(cfg.out / "report.json", dump_json(report));
  g_log->info("learned {} parameters, t_bar {} T_bar {}", result.parameters.size(), result.t_bar,
              format_double(result.T_bar));
  return result;
}

std::vector<PartitionCell> cmd_partition(const RunConfig& cfg, Budget tau) {
  if (tau < 1) throw ConfigError("--tau must be >= 1");
  Workspace ws = open_workspace(cfg);
  std::vector<InstanceHandle> handles;
  if (ws.corpus) {
    for (std::size_t i = 0; i < ws.corpus->corpus_size(); ++i) handles.push_back(ws.corpus->handle(i));
  } else {
    Rng rng = command_stream(cfg.learner.seed, 1);
    for (std::size_t i = 0; i < cfg.partition_samples; ++i) handles.push_back(ws.problem->sample(rng));
  }
  const auto cells = ws.problem->get_partition(handles, tau);
  write_file(cfg.out / "cells.csv", cells_csv(cells));
  g_log->info("{} cells over {} instances at tau {}", cells.size(), handles.size(), tau);
  return cells;
}

learner::SelectionResult cmd_select(const RunConfig& cfg, const std::filesystem::path& subset) {
  std::ifstream in(subset);
  if (!in) throw ConfigError("cannot open subset file '" + subset.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("subset file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.contains("parameters") || !doc.at("parameters").is_array()) {
    throw ConfigError("subset file has no 'parameters' array");
  }
  if (doc.value("domain", "") != to_string(cfg.domain)) {
    throw ConfigError("subset file was learned on a different domain");
  }
  std::vector<ParamPoint> candidates;
  for (const auto& v : doc.at("parameters")) {
    if (!v.is_number()) throw ConfigError("subset parameters must be numbers");
    candidates.push_back(ParamPoint::scalar(v.get<double>()));
  }
  if (candidates.empty()) throw std::runtime_error("subset is empty; nothing to select");

  learner::SelectionConfig sel;
  sel.eps_prime = learner::selection_epsilon(cfg.learner.epsilon);
  sel.delta_prime = learner::selection_delta(cfg.learner.delta);
  sel.n_samples = cfg.selection_samples;
  sel.threads = cfg.threads;
  if (cfg.selection_ceiling > 0) {
    sel.ceiling = cfg.selection_ceiling;
  } else {
    if (!doc.contains("t_bar") || !doc.at("t_bar").is_number_unsigned()) {
      throw ConfigError("subset file has no 't_bar' and no selection.ceiling is configured");
    }
    sel.ceiling = learner::default_ceiling(doc.at("t_bar").get<std::uint64_t>());
  }

  Workspace ws = open_workspace(cfg);
  Rng rng = command_stream(cfg.learner.seed, 2);
  const auto result = learner::select_finite(*ws.problem, candidates, sel, rng);

  json out{{"index", result.index},
           {"rho", result.parameter.rho()},
           {"estimate", result.estimates[result.index]},
           {"cutoff", result.cutoffs[result.index]},
           {"eps_prime", sel.eps_prime},
           {"delta_prime", sel.delta_prime},
           {"n_samples", sel.n_samples},
           {"ceiling", sel.ceiling},
           {"seed", cfg.learner.seed},
           {"oracle_calls", result.oracle_calls},
           {"candidates", json::array()}};
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out["candidates"].push_back({{"rho", candidates[i].rho()},
                                 {"estimate", result.estimates[i]},
                                 {"cutoff", result.cutoffs[i]}});
  }
  write_file(cfg.out / "selected.json", dump_json(out));
  return result;
}

EvaluateSummary cmd_evaluate(const RunConfig& cfg, double rho, std::size_t n_samples, Budget tau) {
  if (n_samples < 1) throw ConfigError("--samples must be >= 1");
  if (tau < 1) throw ConfigError("--tau must be >= 1");
  Workspace ws = open_workspace(cfg);
  const ParamPoint point = ParamPoint::scalar(rho);
  if (!ws.problem->space().contains(point)) throw ConfigError("--rho lies outside [0, 1]");

  Rng rng = command_stream(cfg.learner.seed, 3);
  std::vector<InstanceHandle> draws(n_samples);
  for (auto& h : draws) h = ws.problem->sample(rng);
  std::vector<CappedRunOutcome> outcomes(n_samples);
  parallel_for(n_samples, cfg.threads,
               [&](std::size_t i) { outcomes[i] = ws.problem->run_with_cap(point, draws[i], tau); });

  EvaluateSummary s;
  s.rho = rho;
  s.n_samples = n_samples;
  s.tau = tau;
  double total = 0.0;
  for (const auto& o : outcomes) {
    total += static_cast<double>(o.capped_loss());
    if (o.solved) {
      ++s.solved;
      s.solved_losses.push_back(o.budget_used);
    }
  }
  s.mean_capped = total / static_cast<double>(n_samples);

  write_file(cfg.out / "cdf.csv", cdf_csv(s.solved_losses, n_samples));
  write_file(cfg.out / "evaluate.json",
             dump_json({{"rho", rho},
                        {"n_samples", n_samples},
                        {"tau", tau},
                        {"seed", cfg.learner.seed},
                        {"solved", s.solved},
                        {"mean_capped_loss", s.mean_capped}}));
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("frugal", sink);
  logger->set_pattern("[%l] %v");
  const LoggerScope scope(logger);

  CLI::App app{"Learn and select algorithm parameters under runtime caps", "frugal"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<unsigned> threads;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--seed", seed, "Override the configured seed");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--threads", threads, "Oracle evaluation threads")->check(CLI::PositiveNumber);
  };

  auto* learn = app.add_subcommand("learn", "Learn a parameter subset; writes trace.csv, subset.json, report.json");
  common(learn);

  Budget tau = 0;
  auto* partition = app.add_subcommand("partition", "Write the exact partition at one cap to cells.csv");
  common(partition);
  partition->add_option("--tau", tau, "Cap")->required();

  std::string subset_path;
  auto* select = app.add_subcommand("select", "Pick one parameter from a learned subset; writes selected.json");
  common(select);
  select->add_option("--subset", subset_path, "Subset file (default <out>/subset.json)");

  double rho = 0.0;
  long long samples = 1000;
  Budget eval_tau = Budget{1} << 20;
  auto* evaluate = app.add_subcommand("evaluate", "Empirical loss CDF at one parameter; writes cdf.csv");
  common(evaluate);
  evaluate->add_option("--rho", rho, "Parameter value")->required();
  evaluate->add_option("--samples", samples, "Instances to draw");
  evaluate->add_option("--tau", eval_tau, "Cap for each run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    logger->set_level(log_level_from_env());
    RunConfig cfg = load_config(config_path);
    if (seed) cfg.learner.seed = *seed;
    if (out_dir) cfg.out = *out_dir;
    if (threads) cfg.threads = *threads;

    if (*learn) {
      const auto r = cmd_learn(cfg);
      out << "t_bar=" << r.t_bar << " T_bar=" << format_double(r.T_bar)
          << " parameters=" << r.parameters.size() << '\n';
    } else if (*partition) {
      const auto cells = cmd_partition(cfg, tau);
      out << "cells=" << cells.size() << '\n';
    } else if (*select) {
      const auto path = subset_path.empty() ? cfg.out / "subset.json"
                                            : std::filesystem::path(subset_path);
      const auto r = cmd_select(cfg, path);
      out << "rho=" << format_double(r.parameter.rho())
          << " estimate=" << format_double(r.estimates[r.index]) << '\n';
    } else if (*evaluate) {
      if (samples < 1) throw ConfigError("--samples must be >= 1");
      const auto s = cmd_evaluate(cfg, rho, static_cast<std::size_t>(samples), eval_tau);
      out << "solved=" << s.solved << '/' << s.n_samples
          << " mean_capped=" << format_double(s.mean_capped) << '\n';
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace frugal::cli
