#include "config.hpp"

#include <fstream>
#include <set>

namespace frugal::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys{
    "domain", "family",    "instances", "f_bound",   "epsilon", "delta", "zeta",
    "seed",   "limits",    "dedup",     "selection", "partition", "threads", "out"};

template <typename T>
T field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

// JSON numbers parsed as doubles must be rejected for integer fields.
std::uint64_t unsigned_field(const json& obj, const char* key, std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(std::string("config field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

DomainKind parse_domain(const std::string& name) {
  if (name == "synthetic") return DomainKind::synthetic;
  if (name == "bnb") return DomainKind::bnb;
  if (name == "clustering") return DomainKind::clustering;
  throw ConfigError("unknown domain '" + name + "' (expected synthetic, bnb or clustering)");
}

}  // namespace

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::synthetic: return "synthetic";
    case DomainKind::bnb: return "bnb";
    case DomainKind::clustering: return "clustering";
  }
  return "unknown";
}

RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!kKnownKeys.count(key)) throw ConfigError("unknown config field '" + key + "'");
  }
  if (!doc.contains("domain")) throw ConfigError("config is missing 'domain'");

  RunConfig cfg;
  cfg.source = doc;
  cfg.domain = parse_domain(field<std::string>(doc, "domain", ""));

  if (doc.contains("family")) {
    if (cfg.domain != DomainKind::synthetic) throw ConfigError("'family' applies only to synthetic");
    const auto& fam = doc.at("family");
    if (!fam.is_object()) throw ConfigError("'family' must be an object");
    cfg.family.a = field<double>(fam, "a", cfg.family.a);
    cfg.family.b = field<double>(fam, "b", cfg.family.b);
    cfg.family.L_mid = unsigned_field(fam, "L_mid", cfg.family.L_mid);
    cfg.family.L_low = unsigned_field(fam, "L_low", cfg.family.L_low);
    cfg.family.L_high = unsigned_field(fam, "L_high", cfg.family.L_high);
  }

  if (cfg.domain != DomainKind::synthetic) {
    if (!doc.contains("instances")) throw ConfigError("config is missing 'instances'");
    cfg.instances = base_dir / field<std::string>(doc, "instances", "");
  } else if (doc.contains("instances")) {
    throw ConfigError("'instances' does not apply to the synthetic domain");
  }

  if (doc.contains("f_bound")) {
    if (cfg.domain != DomainKind::bnb) throw ConfigError("'f_bound' applies only to bnb");
    const auto mode = field<std::string>(doc, "f_bound", "measured");
    if (mode == "measured") cfg.f_mode = bnb::FBoundMode::measured;
    else if (mode == "analytic") cfg.f_mode = bnb::FBoundMode::analytic;
    else throw ConfigError("'f_bound' must be 'measured' or 'analytic'");
  }

  cfg.learner.epsilon = field<double>(doc, "epsilon", cfg.learner.epsilon);
  cfg.learner.delta = field<double>(doc, "delta", cfg.learner.delta);
  cfg.learner.zeta = field<double>(doc, "zeta", cfg.learner.zeta);
  cfg.learner.seed = unsigned_field(doc, "seed", cfg.learner.seed);
  cfg.learner.dedup = field<bool>(doc, "dedup", cfg.learner.dedup);
  if (doc.contains("limits")) {
    const auto& lim = doc.at("limits");
    if (!lim.is_object()) throw ConfigError("'limits' must be an object");
    cfg.learner.max_rounds = unsigned_field(lim, "max_rounds", cfg.learner.max_rounds);
    cfg.learner.max_samples_per_round =
        unsigned_field(lim, "max_samples_per_round", cfg.learner.max_samples_per_round);
  }
  if (doc.contains("selection")) {
    const auto& sel = doc.at("selection");
    if (!sel.is_object()) throw ConfigError("'selection' must be an object");
    cfg.selection_samples = unsigned_field(sel, "n_samples", cfg.selection_samples);
    cfg.selection_ceiling = unsigned_field(sel, "ceiling", cfg.selection_ceiling);
  }
  if (doc.contains("partition")) {
    const auto& part = doc.at("partition");
    if (!part.is_object()) throw ConfigError("'partition' must be an object");
    cfg.partition_samples = unsigned_field(part, "samples", cfg.partition_samples);
  }
  cfg.threads = static_cast<unsigned>(unsigned_field(doc, "threads", cfg.threads));
  if (doc.contains("out")) cfg.out = base_dir / field<std::string>(doc, "out", "out");

  try {
    cfg.learner.validate();
    cfg.family.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
  if (cfg.selection_samples < 1) throw ConfigError("selection.n_samples must be >= 1");
  if (cfg.partition_samples < 1) throw ConfigError("partition.samples must be >= 1");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc, path.parent_path());
}

}  // namespace frugal::cli
