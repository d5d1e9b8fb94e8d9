#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "frugal/bnb/problem.hpp"
#include "frugal/learner/learner.hpp"
#include "frugal/synthetic/family.hpp"

namespace frugal::cli {

/// Bad configuration or usage; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DomainKind : std::uint8_t { synthetic, bnb, clustering };

struct RunConfig {
  DomainKind domain = DomainKind::synthetic;
  synthetic::SyntheticFamily family;
  /// Instance directory for bnb and clustering, resolved against the config
  /// file's directory.
  std::filesystem::path instances;
  bnb::FBoundMode f_mode = bnb::FBoundMode::measured;

  learner::LearnerConfig learner;

  std::size_t selection_samples = 1000;
  /// 0 means 2^(t_bar + 4) from the subset file.
  Budget selection_ceiling = 0;

  /// Instances drawn for `partition` on the synthetic domain.
  std::size_t partition_samples = 100;

  unsigned threads = 1;
  std::filesystem::path out = "out";

  /// The document as read, for echoing into reports.
  nlohmann::json source;
};

/// Parses and validates a config document. Relative paths resolve against
/// `base_dir`. Throws ConfigError.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

std::string to_string(DomainKind kind);

}  // namespace frugal::cli
