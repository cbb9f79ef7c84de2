#pragma once

// Flat key=value run configuration.
//
//   # comment
//   grid.n = 512
//   payload.t_beta = 0.5
//
// Recognized keys are listed by RunSettings::known_keys(); anything else is a
// ConfigError naming the key.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cebit/algebra.hpp"
#include "cebit/bench.hpp"
#include "cebit/measurement.hpp"

namespace cebit {

/// Parsed key/value pairs in file order semantics (later entries win).
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text);
  /// Throws ConfigError when the file is missing or unreadable.
  static KeyValueConfig load(const std::filesystem::path& path);

  const std::map<std::string, std::string>& entries() const { return entries_; }
  void set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }

 private:
  std::map<std::string, std::string> entries_;
};

struct RunSettings {
  int grid_n = 512;
  double window_w0 = 8.0;
  double waist = 1e-3;
  double wavelength = bench::kDefaultWavelength;
  double t_alpha = 1.0;
  double t_beta = 1.0;
  double tilt_alpha_deg = 0.0;
  bench::PlateSpec plate{};
  double y_offset = 0.0;
  std::optional<BellOutcome> outcome;  // unset: 00 for single runs, all four for the random suite
  double noise_sigma = 0.0;
  bool shot_noise = false;
  double photons = 1e4;
  int frames = measure::kDefaultFrames;
  std::uint64_t seed = 1;
  int count = 100;  // random-suite payloads
  int threads = 1;
  double angle_threshold = 0.1;

  static const std::vector<std::string_view>& known_keys();

  /// Overlays every entry of `cfg`; throws ConfigError for unknown keys or
  /// values that do not parse.
  void apply(const KeyValueConfig& cfg);

  /// Range checks; throws InvalidArgument naming the offending key.
  void validate() const;

  optics::GridSpec grid() const;
  measure::NoiseModel noise() const;
  bench::FilterPair filters() const;
  BellOutcome selected_outcome() const { return outcome.value_or(BellOutcome{}); }
  measure::AngleOptions angle_options() const;

  /// Sorted key=value listing of every setting.
  std::string canonical() const;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace cebit
