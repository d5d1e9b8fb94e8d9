#include "frugal/bnb/milp.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace frugal::bnb {

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double read_number(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw std::invalid_argument(std::string("milp: missing ") + what);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("milp: bad number '" + token + "' in " + what);
  }
  return value;
}

std::size_t read_count(std::istream& in, const char* what) {
  const double v = read_number(in, what);
  if (v < 0 || v != std::floor(v)) throw std::invalid_argument(std::string("milp: bad ") + what);
  return static_cast<std::size_t>(v);
}

}  // namespace

double Milp::objective(const std::vector<double>& x) const {
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) value += c[i] * x[i];
  return value;
}

bool Milp::feasible(const std::vector<double>& x, double tolerance) const {
  for (std::size_t r = 0; r < rows(); ++r) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) lhs += A[r][i] * x[i];
    if (lhs > b[r] + tolerance) return false;
  }
  for (double v : x) {
    if (v < -tolerance || v > 1.0 + tolerance) return false;
  }
  return true;
}

void Milp::validate() const {
  if (n == 0 || n > kMaxVariables) {
    throw std::invalid_argument("milp: variable count must lie in [1, " +
                                std::to_string(kMaxVariables) + "]");
  }
  if (c.size() != n) throw std::invalid_argument("milp: objective length mismatch");
  if (b.size() != A.size()) throw std::invalid_argument("milp: rhs length mismatch");
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("milp: non-finite objective coefficient");
  }
  for (std::size_t r = 0; r < A.size(); ++r) {
    if (A[r].size() != n) throw std::invalid_argument("milp: row length mismatch");
    for (double v : A[r]) {
      if (!std::isfinite(v)) throw std::invalid_argument("milp: non-finite row coefficient");
    }
    if (!std::isfinite(b[r])) throw std::invalid_argument("milp: non-finite rhs");
  }
}

Milp parse_milp(std::istream& in) {
  Milp milp;
  milp.n = read_count(in, "variable count");
  const std::size_t m = read_count(in, "row count");
  if (milp.n == 0 || milp.n > kMaxVariables) {
    throw std::invalid_argument("milp: variable count must lie in [1, " +
                                std::to_string(kMaxVariables) + "]");
  }
  milp.c.resize(milp.n);
  for (auto& v : milp.c) v = read_number(in, "objective");
  milp.A.assign(m, std::vector<double>(milp.n));
  milp.b.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (auto& v : milp.A[r]) v = read_number(in, "constraint row");
    std::string sense;
    if (!(in >> sense) || sense != "<=") {
      throw std::invalid_argument("milp: expected '<=' in row " + std::to_string(r + 1));
    }
    milp.b[r] = read_number(in, "rhs");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("milp: trailing content '" + extra + "'");
  milp.validate();
  return milp;
}

Milp parse_milp(const std::string& text) {
  std::istringstream in(text);
  return parse_milp(in);
}

Milp read_milp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_milp(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string write_milp(const Milp& milp) {
  std::ostringstream out;
  out << milp.n << ' ' << milp.rows() << '\n';
  for (std::size_t i = 0; i < milp.n; ++i) out << (i ? " " : "") << shortest(milp.c[i]);
  out << '\n';
  for (std::size_t r = 0; r < milp.rows(); ++r) {
    for (std::size_t i = 0; i < milp.n; ++i) out << shortest(milp.A[r][i]) << ' ';
    out << "<= " << shortest(milp.b[r]) << '\n';
  }
  return out.str();
}

Milp random_milp(Rng& rng, std::size_t n, std::size_t m) {
  if (n == 0 || n > kMaxVariables) throw std::invalid_argument("random_milp: bad variable count");
  Milp milp;
  milp.n = n;
  milp.c.resize(n);
  for (auto& v : milp.c) v = static_cast<double>(1 + uniform_index(rng, 10));
  milp.A.assign(m, std::vector<double>(n));
  milp.b.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    double sum = 0.0;
    for (auto& v : milp.A[r]) {
      v = static_cast<double>(uniform_index(rng, 11));
      sum += v;
    }
    milp.b[r] = std::floor(sum / 2.0) + static_cast<double>(uniform_index(rng, 3));
  }
  return milp;
}

}  // namespace frugal::bnb
