#include "neel/golden.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace neel {

namespace {

// Lines are "name,parameters,value,tolerance". Parameters may themselves
// contain commas, so the numeric fields are split off from the right.
GoldenEntry parse_line(const std::string& line, const std::string& path,
                       int lineno) {
  auto fail = [&]() -> std::runtime_error {
    std::ostringstream os;
    os << "golden file " << path << ": line " << lineno << " is malformed";
    return std::runtime_error(os.str());
  };
  const auto last = line.rfind(',');
  if (last == std::string::npos) throw fail();
  const auto second_last = line.rfind(',', last - 1);
  if (second_last == std::string::npos) throw fail();
  const auto first = line.find(',');
  if (first == last || first == second_last) throw fail();
  GoldenEntry e;
  e.name = line.substr(0, first);
  e.parameters = line.substr(first + 1, second_last - first - 1);
  if (e.name.empty()) throw fail();
  try {
    std::size_t used = 0;
    const std::string vs = line.substr(second_last + 1, last - second_last - 1);
    e.value = std::stod(vs, &used);
    if (used != vs.size()) throw fail();
    const std::string ts = line.substr(last + 1);
    e.tolerance = std::stod(ts, &used);
    if (used != ts.size()) throw fail();
  } catch (const std::logic_error&) {
    throw fail();
  }
  if (!(e.tolerance >= 0.0) || !std::isfinite(e.value)) throw fail();
  return e;
}

}  // namespace

GoldenStore::GoldenStore(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    entries_.push_back(parse_line(line, path_, lineno));
  }
}

std::string GoldenStore::default_dir() {
  if (const char* env = std::getenv("NEEL_LAB_GOLDEN"); env && *env)
    return env;
  return "data/golden";
}

bool GoldenStore::has(const std::string& name,
                      const std::string& parameters) const {
  for (const auto& e : entries_)
    if (e.name == name && e.parameters == parameters) return true;
  return false;
}

GoldenEntry GoldenStore::get(const std::string& name,
                             const std::string& parameters) const {
  for (const auto& e : entries_)
    if (e.name == name && e.parameters == parameters) return e;
  throw std::runtime_error("golden file " + path_ + ": no entry " + name +
                           "(" + parameters + ")");
}

GoldenEntry GoldenStore::record_or_get(const std::string& name,
                                       const std::string& parameters,
                                       double value, double tolerance) {
  for (const auto& e : entries_)
    if (e.name == name && e.parameters == parameters) return e;
  GoldenEntry e{name, parameters, value, tolerance};
  entries_.push_back(e);
  save();
  return e;
}

void GoldenStore::save() const {
  std::ofstream out(path_, std::ios::trunc);
  if (!out)
    throw std::runtime_error("golden file " + path_ + ": cannot write");
  out << "# name,parameters,value,tolerance\n";
  for (const auto& e : entries_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e,%.11e", e.value, e.tolerance);
    out << e.name << ',' << e.parameters << ',' << buf << '\n';
  }
}

}  // namespace neel
