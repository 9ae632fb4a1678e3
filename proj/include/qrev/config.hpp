#pragma once

#include "qrev/carpet.hpp"
#include "qrev/grid_solver.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrev {

/// Configuration/validation failure; `field` is the offending "section.key".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Flat INI-style key-value file: [section] headers, key = value lines,
/// '#' or ';' comments.  Keys are addressed as "section.key".
class IniConfig {
 public:
  static IniConfig parse(const std::string& text);
  static IniConfig parse_file(const std::string& path);

  /// Apply a CLI override of the form "section.key=value".
  void set(const std::string& assignment);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  Real get_real(const std::string& key, std::optional<Real> fallback = {}) const;
  int get_int(const std::string& key, std::optional<int> fallback = {}) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::string> get_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Times are exact rationals of t_R ("1/4", "3/4"), plain decimals also accepted.
Real parse_time_fraction(const std::string& text, const std::string& field);

struct OutputConfig {
  std::string dir = "out";
  std::vector<std::string> formats = {"csv", "json", "pgm"};
  bool wants(const std::string& fmt) const;
};

struct CarpetConfig {
  Real t_min = 0.0;
  Real t_max = 0.5;
  int t_points = 200;
  int x_points = 300;
  Real gamma = 0.5;
  CarpetNormalization normalization = CarpetNormalization::global;
};

struct DetuneConfig {
  std::vector<Real> r_values = {0.0, 0.25, 0.5};
  std::vector<Real> times = {0.25, 0.5};
};

struct BenchConfig {
  Scheme scheme = Scheme::crank_nicolson;
  Real dt = 3e-6;
  int points = 4000;
  std::vector<Real> checkpoints = {0.25, 0.5, 0.75, 1.0};
  bool order_check = false;
  Real order_dt = 1.6e-5;
  Real order_checkpoint = 0.5;
  std::vector<int> mode_counts;
  int steps_per_revival = 256;
};

/// Everything a run needs, validated against the module preconditions.
struct RunConfig {
  PotentialSpec potential;
  PacketRecipe packet;
  int grid_points = 600;
  std::optional<Real> grid_x_min;
  std::optional<Real> grid_x_max;
  std::vector<Real> times;
  OutputConfig output;
  CarpetConfig carpet;
  DetuneConfig detune;
  BenchConfig bench;
};

/// Parses and validates; throws ConfigError naming the offending field.
RunConfig load_run_config(const IniConfig& ini);

}  // namespace qrev
