#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace frugal::cli {

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string trace_csv(std::span<const learner::TraceRow> rows) {
  std::ostringstream os;
  os << "t,cap,samples,cells,admitted,T\n";
  for (const auto& r : rows) {
    os << r.t << ',' << r.cap << ',' << r.samples << ',' << r.cells << ',' << r.admitted << ','
       << format_double(r.T) << '\n';
  }
  return os.str();
}

std::string cells_csv(std::span<const PartitionCell> cells) {
  std::ostringstream os;
  os << "cell,lo,hi,closed_hi,z,capped_losses\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string losses;
    for (std::size_t j = 0; j < cells[i].capped_losses.size(); ++j) {
      if (j) losses += ' ';
      losses += std::to_string(cells[i].capped_losses[j]);
    }
    for (const auto& iv : cells[i].cell.intervals) {
      os << i << ',' << format_double(iv.lo) << ',' << format_double(iv.hi) << ','
         << (iv.closed_hi ? 1 : 0) << ',' << format_double(cells[i].z) << ',' << losses << '\n';
    }
  }
  return os.str();
}

std::string cdf_csv(std::vector<Budget> solved_losses, std::size_t total) {
  std::sort(solved_losses.begin(), solved_losses.end());
  std::ostringstream os;
  os << "tau,fraction\n";
  for (std::size_t i = 0; i < solved_losses.size(); ++i) {
    if (i + 1 < solved_losses.size() && solved_losses[i + 1] == solved_losses[i]) continue;
    os << solved_losses[i] << ',' << format_double(double(i + 1) / double(total)) << '\n';
  }
  return os.str();
}

nlohmann::json cell_json(const ParamCell& cell) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& iv : cell.intervals) {
    out.push_back({{"lo", iv.lo}, {"hi", iv.hi}, {"closed_hi", iv.closed_hi}});
  }
  return out;
}

nlohmann::json trace_json(std::span<const learner::TraceRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"t", r.t},
                   {"cap", r.cap},
                   {"samples", r.samples},
                   {"cells", r.cells},
                   {"admitted", r.admitted},
                   {"T", std::isinf(r.T) ? nlohmann::json(nullptr) : nlohmann::json(r.T)},
                   {"f", r.f_value},
                   {"gamma", r.gamma}});
  }
  return out;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace frugal::cli
