#include "qrev/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qrev {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Known keys per section; catches typos with a field-precise error.
const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "potential.family", "potential.alpha", "potential.m", "potential.r", "potential.width",
      "potential.n_modes",
      "packet.weights", "packet.n_bar", "packet.sigma", "packet.decay", "packet.phases",
      "packet.seed",
      "grid.points", "grid.x_min", "grid.x_max",
      "time.times", "time.t_start", "time.t_stop", "time.t_count",
      "output.dir", "output.formats",
      "carpet.t_min", "carpet.t_max", "carpet.t_points", "carpet.x_points", "carpet.gamma",
      "carpet.normalization",
      "detune.r_values", "detune.times",
      "bench.scheme", "bench.dt", "bench.points", "bench.checkpoints", "bench.order_check",
      "bench.order_dt", "bench.order_checkpoint", "bench.mode_counts",
      "bench.steps_per_revival",
  };
  return keys;
}

}  // namespace

IniConfig IniConfig::parse(const std::string& text) {
  IniConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno), "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(lineno), "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno), "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno), "empty key");
    if (section.empty())
      throw ConfigError("line " + std::to_string(lineno), "key outside any [section]");
    const std::string full = section + "." + key;
    if (!known_keys().count(full)) throw ConfigError(full, "unknown configuration key");
    cfg.values_[full] = value;
  }
  return cfg;
}

IniConfig IniConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void IniConfig::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("--set", "expected section.key=value, got '" + assignment + "'");
  const std::string key = trim(assignment.substr(0, eq));
  if (!known_keys().count(key)) throw ConfigError(key, "unknown configuration key");
  values_[key] = trim(assignment.substr(eq + 1));
}

std::string IniConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(key, "missing required key");
  return it->second;
}

std::string IniConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

Real IniConfig::get_real(const std::string& key, std::optional<Real> fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    if (fallback) return *fallback;
    throw ConfigError(key, "missing required key");
  }
  try {
    std::size_t pos = 0;
    const Real v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, "not a number: '" + it->second + "'");
  }
}

int IniConfig::get_int(const std::string& key, std::optional<int> fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    if (fallback) return *fallback;
    throw ConfigError(key, "missing required key");
  }
  try {
    std::size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, "not an integer: '" + it->second + "'");
  }
}

bool IniConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key, "not a boolean: '" + it->second + "'");
}

std::vector<std::string> IniConfig::get_list(const std::string& key) const {
  const std::string raw = get_string(key);
  std::vector<std::string> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

Real parse_time_fraction(const std::string& text, const std::string& field) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      const Real v = std::stod(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("");
      return v;
    }
    std::size_t p1 = 0, p2 = 0;
    const std::string num = trim(text.substr(0, slash));
    const std::string den = trim(text.substr(slash + 1));
    const long long p = std::stoll(num, &p1);
    const long long q = std::stoll(den, &p2);
    if (p1 != num.size() || p2 != den.size() || q == 0) throw std::invalid_argument("");
    return static_cast<Real>(p) / static_cast<Real>(q);
  } catch (const std::exception&) {
    throw ConfigError(field, "not a time (decimal or p/q rational): '" + text + "'");
  }
}

bool OutputConfig::wants(const std::string& fmt) const {
  return std::find(formats.begin(), formats.end(), fmt) != formats.end();
}

RunConfig load_run_config(const IniConfig& ini) {
  RunConfig rc;

  rc.potential.family = family_from_name(ini.get_string("potential.family"));
  if (rc.potential.family != Family::ISW) rc.potential.alpha = ini.get_real("potential.alpha");
  else rc.potential.alpha = ini.get_real("potential.alpha", 0.0);  // derived from width
  rc.potential.m = ini.get_int("potential.m", 1);
  rc.potential.detuning = ini.get_real("potential.r", 0.0);
  rc.potential.width = ini.get_real("potential.width", 1.0);
  rc.potential.n_modes = ini.get_int("potential.n_modes");
  if (rc.potential.family == Family::ISW && rc.potential.alpha == 0.0)
    rc.potential.alpha = kPi / rc.potential.width;
  try {
    validate(rc.potential);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("potential", e.what());
  }

  rc.packet.scheme = ini.get_string("packet.weights", "gaussian");
  rc.packet.n_bar = ini.get_real("packet.n_bar", 0.0);
  rc.packet.sigma = ini.get_real("packet.sigma", 1.0);
  rc.packet.decay = ini.get_real("packet.decay", 1.0);
  const std::string phases = ini.get_string("packet.phases", "equal");
  if (phases == "equal") rc.packet.phases = PhaseScheme::equal;
  else if (phases == "random") rc.packet.phases = PhaseScheme::random;
  else throw ConfigError("packet.phases", "must be 'equal' or 'random'");
  rc.packet.seed = static_cast<std::uint64_t>(ini.get_int("packet.seed", 0));
  if (rc.packet.scheme != "gaussian" && rc.packet.scheme != "exponential")
    throw ConfigError("packet.weights", "must be 'gaussian' or 'exponential'");
  if (rc.packet.scheme == "gaussian" && !(rc.packet.sigma > 0.0))
    throw ConfigError("packet.sigma", "must be > 0");
  if (rc.packet.scheme == "exponential" && !(rc.packet.decay > 0.0))
    throw ConfigError("packet.decay", "must be > 0");

  rc.grid_points = ini.get_int("grid.points", 600);
  if (rc.grid_points < 2) throw ConfigError("grid.points", "must be >= 2");
  if (ini.has("grid.x_min")) rc.grid_x_min = ini.get_real("grid.x_min");
  if (ini.has("grid.x_max")) rc.grid_x_max = ini.get_real("grid.x_max");

  // A range (t_count given) beats an explicit list, so --set time.t_count=...
  // can switch a snapshot recipe into scan mode.
  if (ini.has("time.t_count")) {
    const Real start = ini.get_real("time.t_start", 0.0);
    const Real stop = ini.get_real("time.t_stop", 1.0);
    const int count = ini.get_int("time.t_count");
    if (count < 2) throw ConfigError("time.t_count", "must be >= 2");
    if (!(stop > start)) throw ConfigError("time.t_stop", "must exceed time.t_start");
    for (int i = 0; i < count; ++i)
      rc.times.push_back(start + (i * (stop - start)) / (count - 1));
  } else if (ini.has("time.times")) {
    for (const std::string& item : ini.get_list("time.times"))
      rc.times.push_back(parse_time_fraction(item, "time.times"));
  }
  if (!std::is_sorted(rc.times.begin(), rc.times.end()))
    throw ConfigError("time.times", "must be sorted ascending");

  rc.output.dir = ini.get_string("output.dir", "out");
  if (ini.has("output.formats")) rc.output.formats = ini.get_list("output.formats");
  for (const std::string& f : rc.output.formats) {
    if (f != "csv" && f != "json" && f != "pgm")
      throw ConfigError("output.formats", "unknown format '" + f + "'");
  }

  rc.carpet.t_min = parse_time_fraction(ini.get_string("carpet.t_min", "0"), "carpet.t_min");
  rc.carpet.t_max = parse_time_fraction(ini.get_string("carpet.t_max", "1/2"), "carpet.t_max");
  rc.carpet.t_points = ini.get_int("carpet.t_points", 200);
  rc.carpet.x_points = ini.get_int("carpet.x_points", 300);
  rc.carpet.gamma = ini.get_real("carpet.gamma", 0.5);
  rc.carpet.normalization =
      carpet_normalization_from_name(ini.get_string("carpet.normalization", "global"));
  if (!(rc.carpet.t_max > rc.carpet.t_min)) throw ConfigError("carpet.t_max", "must exceed t_min");
  if (rc.carpet.t_points < 2) throw ConfigError("carpet.t_points", "must be >= 2");
  if (rc.carpet.x_points < 2) throw ConfigError("carpet.x_points", "must be >= 2");
  if (!(rc.carpet.gamma > 0.0)) throw ConfigError("carpet.gamma", "must be > 0");

  if (ini.has("detune.r_values")) {
    rc.detune.r_values.clear();
    for (const std::string& item : ini.get_list("detune.r_values"))
      rc.detune.r_values.push_back(parse_time_fraction(item, "detune.r_values"));
  }
  for (Real r : rc.detune.r_values) {
    if (r < 0.0 || r > 0.5) throw ConfigError("detune.r_values", "r must lie in [0, 0.5]");
  }
  if (ini.has("detune.times")) {
    rc.detune.times.clear();
    for (const std::string& item : ini.get_list("detune.times"))
      rc.detune.times.push_back(parse_time_fraction(item, "detune.times"));
  }

  rc.bench.scheme = scheme_from_name(ini.get_string("bench.scheme", "crank_nicolson"));
  rc.bench.dt = ini.get_real("bench.dt", 3e-6);
  rc.bench.points = ini.get_int("bench.points", 4000);
  if (!(rc.bench.dt > 0.0)) throw ConfigError("bench.dt", "must be > 0");
  if (rc.bench.points < 8) throw ConfigError("bench.points", "must be >= 8");
  if (ini.has("bench.checkpoints")) {
    rc.bench.checkpoints.clear();
    for (const std::string& item : ini.get_list("bench.checkpoints"))
      rc.bench.checkpoints.push_back(parse_time_fraction(item, "bench.checkpoints"));
  }
  rc.bench.order_check = ini.get_bool("bench.order_check", false);
  rc.bench.order_dt = ini.get_real("bench.order_dt", 1.6e-5);
  rc.bench.order_checkpoint =
      parse_time_fraction(ini.get_string("bench.order_checkpoint", "1/2"), "bench.order_checkpoint");
  if (ini.has("bench.mode_counts")) {
    for (const std::string& item : ini.get_list("bench.mode_counts")) {
      try {
        rc.bench.mode_counts.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ConfigError("bench.mode_counts", "not an integer: '" + item + "'");
      }
    }
  }
  rc.bench.steps_per_revival = ini.get_int("bench.steps_per_revival", 256);

  return rc;
}

}  // namespace qrev
