#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "frugal/core/types.hpp"
#include "frugal/learner/learner.hpp"

namespace frugal::cli {

/// Shortest round-trip decimal form; "inf" for +infinity.
std::string format_double(double value);

/// Writes `content` verbatim, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

/// Header: t,cap,samples,cells,admitted,T
std::string trace_csv(std::span<const learner::TraceRow> rows);

/// Header: cell,lo,hi,closed_hi,z,capped_losses (losses space separated,
/// one row per interval).
std::string cells_csv(std::span<const PartitionCell> cells);

/// Header: tau,fraction. One row per distinct solved loss.
std::string cdf_csv(std::vector<Budget> solved_losses, std::size_t total);

nlohmann::json cell_json(const ParamCell& cell);
nlohmann::json trace_json(std::span<const learner::TraceRow> rows);

/// Two-space indented JSON followed by a newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace frugal::cli
