// Writes seeded random instance corpora for the bnb and clustering domains.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "frugal/bnb/milp.hpp"
#include "frugal/clustering/instance.hpp"

namespace {

std::string numbered(const std::string& stem, std::size_t i, const std::string& ext) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03zu", i);
  return stem + "_" + buf + ext;
}

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate random instance corpora", "frugal_fixtures"};
  app.require_subcommand(1);

  std::string dir;
  std::size_t count = 20;
  std::uint64_t seed = 1;

  std::size_t n_min = 3, n_max = 6, m_min = 1, m_max = 4;
  auto* milp = app.add_subcommand("milp", "Random binary packing MILPs (*.milp)");
  milp->add_option("--dir", dir)->required();
  milp->add_option("--count", count);
  milp->add_option("--seed", seed);
  milp->add_option("--n-min", n_min)->check(CLI::Range(1, 20));
  milp->add_option("--n-max", n_max)->check(CLI::Range(1, 20));
  milp->add_option("--m-min", m_min)->check(CLI::PositiveNumber);
  milp->add_option("--m-max", m_max)->check(CLI::PositiveNumber);

  std::size_t points = 8, k = 2;
  double slack = 1.2;
  auto* metric = app.add_subcommand("metric", "Random L1 grid metrics (*.metric)");
  metric->add_option("--dir", dir)->required();
  metric->add_option("--count", count);
  metric->add_option("--seed", seed);
  metric->add_option("--points", points)->check(CLI::Range(1, 12));
  metric->add_option("--k", k)->check(CLI::PositiveNumber);
  metric->add_option("--slack", slack)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    std::filesystem::create_directories(dir);
    frugal::Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      if (*milp) {
        if (n_min > n_max || m_min > m_max) throw std::invalid_argument("empty size range");
        const auto n = n_min + frugal::uniform_index(rng, n_max - n_min + 1);
        const auto m = m_min + frugal::uniform_index(rng, m_max - m_min + 1);
        write(std::filesystem::path(dir) / numbered("milp", i, ".milp"),
              frugal::bnb::write_milp(frugal::bnb::random_milp(rng, n, m)));
      } else {
        write(std::filesystem::path(dir) / numbered("metric", i, ".metric"),
              frugal::clustering::write_clustering(
                  frugal::clustering::random_metric(rng, points, k, slack)));
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
