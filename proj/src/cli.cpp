#include "cebit/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cebit/errors.hpp"
#include "cebit/harness.hpp"

namespace cebit {

namespace {

struct Flags {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> frames;
  std::optional<double> noise;
  std::optional<int> grid;
  std::optional<std::string> outcome;
  std::optional<int> count;
  std::optional<int> threads;
};

RunSettings resolve(const Flags& f) {
  RunSettings s;
  if (!f.config.empty()) s.apply(KeyValueConfig::load(f.config));
  KeyValueConfig overrides;
  if (f.seed) overrides.set("seed", fmt::format("{}", *f.seed));
  if (f.frames) overrides.set("frames", fmt::format("{}", *f.frames));
  if (f.noise) overrides.set("noise.sigma", fmt::format("{:.17g}", *f.noise));
  if (f.grid) overrides.set("grid.n", fmt::format("{}", *f.grid));
  if (f.outcome) overrides.set("outcome", *f.outcome);
  if (f.count) overrides.set("suite.count", fmt::format("{}", *f.count));
  if (f.threads) overrides.set("threads", fmt::format("{}", *f.threads));
  s.apply(overrides);
  s.validate();
  return s;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optical teleportation bench simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--config", f.config, "key=value configuration file");
  app.add_option("--out", f.out, "output directory")->capture_default_str();
  app.add_option("--seed", f.seed, "noise seed");
  app.add_option("--frames", f.frames, "CCD frames per measurement");
  app.add_option("--noise", f.noise, "Gaussian noise sigma, relative to full scale");
  app.add_option("--grid", f.grid, "grid size n (power of two)");
  app.add_option("--outcome", f.outcome, "Bell outcome 00, 01, 10 or 11");
  app.add_option("--count", f.count, "random-suite payload count");
  app.add_option("--threads", f.threads, "worker threads");

  auto* teleport = app.add_subcommand("teleport", "single bench run with correction and fidelity");
  auto* angle = app.add_subcommand("angle", "lobe-angle ratio measurement");
  auto* decompose = app.add_subcommand("decompose", "correlation-filter modal decomposition");
  auto* fig2 = app.add_subcommand("reproduce-fig2", "lobe-angle sweep");
  auto* fig3 = app.add_subcommand("reproduce-fig3", "ratio and phase sweeps");
  auto* suite = app.add_subcommand("random-suite", "random payloads through every pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const RunSettings s = resolve(f);
    harness::RunReport report;
    if (teleport->parsed()) report = harness::run_teleport(s);
    else if (angle->parsed()) report = harness::run_angle(s);
    else if (decompose->parsed()) report = harness::run_decompose(s);
    else if (fig2->parsed()) report = harness::reproduce_fig2(harness::ExperimentSpec::fig2(s));
    else if (fig3->parsed()) report = harness::reproduce_fig3(harness::ExperimentSpec::fig3(s));
    else if (suite->parsed()) report = harness::run_random_suite(s, s.count, s.seed);

    for (const auto& line : report.lines) fmt::print(out, "{}\n", line);
    report.write(f.out);
    fmt::print(out, "wrote {} table(s), {} image(s) to {}\n", report.tables.size(), report.images.size(), f.out);
    return 0;
  } catch (const ConfigError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return 2;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 3;
  }
}

}  // namespace cebit
