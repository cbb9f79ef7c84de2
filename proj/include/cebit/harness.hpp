#pragma once

// End-to-end experiments: random teleportation suites, the lobe-angle sweep
// and the ratio/phase sweeps of the modal decomposition.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cebit/config.hpp"
#include "cebit/measurement.hpp"

namespace cebit::harness {

struct ReportTable {
  std::string name;  // written as <name>.csv
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

struct ReportImage {
  std::string name;  // written as <name>.pgm
  measure::CcdImage image;
};

struct RunReport {
  std::string mode;
  std::vector<ReportTable> tables;
  std::vector<ReportImage> images;
  std::vector<std::pair<std::string, double>> summary;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> lines;  // one human-readable line per sweep point

  double summary_value(std::string_view key) const;
  const ReportTable& table(std::string_view name) const;

  /// Writes every table, image and a <mode>_summary.txt into `dir`.
  void write(const std::filesystem::path& dir) const;
};

struct ExperimentSpec {
  RunSettings settings;
  std::vector<double> sweep;        // angles in degrees, ratios, or tilts in degrees
  std::vector<double> dense_sweep;  // angle-sweep only
  std::vector<double> tilts;        // phase sweep only

  static ExperimentSpec fig2(const RunSettings& s);
  static ExperimentSpec fig3(const RunSettings& s);
};

inline const std::vector<double> kAnchorAngles{47.0, 55.0, 62.0, 76.0};
inline const std::vector<double> kRatioSweep{0.25, 0.5, 1.0, 2.0, 4.0};
inline const std::vector<double> kTiltSweep{2.5, 5.0, 10.0};

/// Random payloads through the abstract, optical and CFM pipelines. All four
/// outcomes unless `settings.outcome` is set.
RunReport run_random_suite(const RunSettings& settings, int n, std::uint64_t seed);

/// Filters with the larger transmittance at 1 and t_beta / t_alpha = cot(theta).
bench::FilterPair filters_for_angle(double theta_deg);

RunReport reproduce_fig2(const ExperimentSpec& spec);
RunReport reproduce_fig3(const ExperimentSpec& spec);

/// Single-configuration runs used by the CLI.
RunReport run_teleport(const RunSettings& settings);
RunReport run_angle(const RunSettings& settings);
RunReport run_decompose(const RunSettings& settings);

}  // namespace cebit::harness
