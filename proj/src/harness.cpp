#include "cebit/harness.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cebit/errors.hpp"
#include "cebit/field_io.hpp"

namespace cebit::harness {

namespace {

constexpr const char* kVersion = "cebit 1.0.0";

// Runs fn(0..count-1) on up to `threads` workers. fn must not throw.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::size_t(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
}

std::string error_tag(const std::exception& e) {
  if (dynamic_cast<const SegmentationFailure*>(&e)) return "segmentation-failure";
  if (dynamic_cast<const GridTooSmall*>(&e)) return "grid-too-small";
  if (dynamic_cast<const BasisLeakage*>(&e)) return "basis-leakage";
  if (dynamic_cast<const AliasingError*>(&e)) return "aliasing";
  if (dynamic_cast<const MeasurementInconsistency*>(&e)) return "measurement-inconsistency";
  if (dynamic_cast<const PhaseUndefined*>(&e)) return "phase-undefined";
  if (dynamic_cast<const InfiniteRatio*>(&e)) return "infinite-ratio";
  if (dynamic_cast<const DarkBeam*>(&e)) return "dark-beam";
  return "error";
}

std::string num(double v) { return fmt::format("{:.12g}", v); }

double deg(double rad) { return rad * 180.0 / std::numbers::pi; }

double wrap(double radians) { return bench::wrap_phase(radians); }

void add_provenance(RunReport& r, const RunSettings& s) {
  r.provenance = {{"mode", r.mode},
                  {"config_hash", fnv1a_hex(s.canonical())},
                  {"seed", fmt::format("{}", s.seed)},
                  {"version", kVersion}};
}

Spinor mode_coefficients(const optics::ScalarField& M) {
  const optics::ScalarField psi10 = optics::hg_mode(1, 0, M.grid());
  const optics::ScalarField psi01 = optics::hg_mode(0, 1, M.grid());
  return {optics::overlap(psi10, M), optics::overlap(psi01, M)};
}

Spinor cfm_spinor(const measure::MeasurementResult& r) {
  return {complex(r.abs_alpha, 0.0), std::polar(r.abs_beta, r.phase_defined ? r.delta_phi : 0.0)};
}

}  // namespace

std::string ReportTable::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += '\n';
  }
  return out;
}

double RunReport::summary_value(std::string_view key) const {
  for (const auto& [k, v] : summary)
    if (k == key) return v;
  throw InvalidArgument(fmt::format("report has no summary entry '{}'", key));
}

const ReportTable& RunReport::table(std::string_view name) const {
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw InvalidArgument(fmt::format("report has no table '{}'", name));
}

void RunReport::write(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  for (const auto& t : tables) {
    std::ofstream out(dir / (t.name + ".csv"), std::ios::binary);
    out << t.to_csv();
    if (!out) throw Error("failed writing " + (dir / (t.name + ".csv")).string());
  }
  for (const auto& img : images) optics::write_pgm16(dir / (img.name + ".pgm"), img.image.grid.n(), img.image.pixels);

  std::ofstream out(dir / (mode + "_summary.txt"), std::ios::binary);
  for (const auto& [k, v] : provenance) fmt::print(out, "{}={}\n", k, v);
  for (const auto& [k, v] : summary) fmt::print(out, "{}={:.12g}\n", k, v);
}

ExperimentSpec ExperimentSpec::fig2(const RunSettings& s) {
  ExperimentSpec spec{s, kAnchorAngles, {}, {}};
  for (int a = 20; a <= 80; a += 2) spec.dense_sweep.push_back(a);
  return spec;
}

ExperimentSpec ExperimentSpec::fig3(const RunSettings& s) { return {s, kRatioSweep, {}, kTiltSweep}; }

bench::FilterPair filters_for_angle(double theta_deg) {
  const double ratio = measure::ratio_from_angle(theta_deg);
  if (ratio <= 1.0) return {bench::FilterSetting::make(1.0), bench::FilterSetting::make(ratio)};
  return {bench::FilterSetting::make(1.0 / ratio), bench::FilterSetting::make(1.0)};
}

// ---------------------------------------------------------------------------

RunReport run_random_suite(const RunSettings& settings, int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("suite.count: must be at least 1");
  RunReport report;
  report.mode = "random_suite";

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<PayloadCoeffs> payloads;
  for (int i = 0; i < n; ++i) {
    const complex a{normal(rng), normal(rng)};
    const complex b{normal(rng), normal(rng)};
    payloads.emplace_back(a, b);
  }
  std::vector<BellOutcome> outcomes(kAllOutcomes.begin(), kAllOutcomes.end());
  if (settings.outcome) outcomes = {*settings.outcome};

  const optics::GridSpec grid = settings.grid();
  struct Cell {
    std::vector<std::string> row;
    double fid_abstract = 0, fid_optical = 0, fid_cfm = 0, prob_err_abstract = 0, prob_err_optical = 0;
    bool failed = false;
  };
  std::vector<Cell> cells(payloads.size() * outcomes.size());

  parallel_for(cells.size(), settings.threads, [&](std::size_t idx) {
    const std::size_t i = idx / outcomes.size();
    const BellOutcome o = outcomes[idx % outcomes.size()];
    const PayloadCoeffs& p = payloads[i];
    const Correction corr = correction_for(o);
    Cell& cell = cells[idx];
    std::string status = "ok";
    try {
      const Projection abstract = project_CA(teleport_transform(prepare_input(p)), o);
      cell.fid_abstract = fidelity(corr.apply(abstract.b_state), p);
      cell.prob_err_abstract = std::abs(abstract.probability - 0.25);

      const bench::BenchOutput optical = bench::run_bench({grid, p, o, 0.0});
      cell.fid_optical = fidelity(corr.apply(mode_coefficients(optical.field)), p);
      cell.prob_err_optical = std::abs(optical.probability - 0.25);

      const auto cfm = measure::modal_decomposition(optical.field, measure::NoiseModel{}, 1);
      cell.fid_cfm = fidelity(corr.apply(cfm_spinor(cfm)), p);
    } catch (const std::exception& e) {
      status = error_tag(e);
      cell.failed = true;
    }
    cell.row = {fmt::format("{}", i),
                o.label(),
                std::string(corr.name()),
                num(p.alpha().real()),
                num(p.alpha().imag()),
                num(p.beta().real()),
                num(p.beta().imag()),
                num(cell.fid_abstract),
                num(cell.fid_optical),
                num(cell.fid_cfm),
                num(cell.prob_err_abstract),
                num(cell.prob_err_optical),
                status};
  });

  ReportTable table{"random_suite",
                    {"index", "outcome", "correction", "alpha_re", "alpha_im", "beta_re", "beta_im",
                     "fidelity_abstract", "fidelity_optical", "fidelity_cfm", "probability_error_abstract",
                     "probability_error_optical", "status"},
                    {}};
  double min_abs = 1, min_opt = 1, min_cfm = 1, max_pa = 0, max_po = 0, failed = 0;
  for (const Cell& c : cells) {
    table.rows.push_back(c.row);
    if (c.failed) {
      ++failed;
      continue;
    }
    min_abs = std::min(min_abs, c.fid_abstract);
    min_opt = std::min(min_opt, c.fid_optical);
    min_cfm = std::min(min_cfm, c.fid_cfm);
    max_pa = std::max(max_pa, c.prob_err_abstract);
    max_po = std::max(max_po, c.prob_err_optical);
  }
  report.tables.push_back(std::move(table));
  report.summary = {{"payloads", double(n)},
                    {"min_fidelity_abstract", min_abs},
                    {"min_fidelity_optical", min_opt},
                    {"min_fidelity_cfm", min_cfm},
                    {"max_probability_error_abstract", max_pa},
                    {"max_probability_error_optical", max_po},
                    {"failed_points", failed}};
  for (const BellOutcome& o : outcomes) {
    double lo = 1;
    for (std::size_t idx = 0; idx < cells.size(); ++idx)
      if (outcomes[idx % outcomes.size()] == o && !cells[idx].failed) lo = std::min(lo, cells[idx].fid_optical);
    report.lines.push_back(fmt::format("outcome {} correction {}: min optical fidelity {:.15f}", o.label(),
                                       correction_for(o).name(), lo));
  }
  RunSettings provenance_settings = settings;
  provenance_settings.seed = seed;
  provenance_settings.count = n;
  add_provenance(report, provenance_settings);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct AnglePoint {
  std::vector<std::string> row;
  double abs_error = 0;
  double ratio_rel_error = 0;
  bool ok = false;
  std::optional<measure::CcdImage> inset;
};

AnglePoint angle_point(const RunSettings& s, double theta, bool with_inset) {
  AnglePoint pt;
  const double ratio_target = measure::ratio_from_angle(theta);
  std::string mean = "", stdev = "", ratio = "", status = "ok";
  try {
    const bench::BenchOutput out = bench::run_bench({s.grid(), filters_for_angle(theta), BellOutcome{}, s.y_offset});
    if (with_inset) pt.inset = measure::render_ccd(out.field, s.noise().for_frame(0));
    const auto r = measure::measure_angle(out.field, s.noise(), s.frames, s.angle_options());
    mean = num(*r.theta_deg);
    stdev = num(r.theta_std);
    ratio = num(r.ratio());
    pt.abs_error = std::abs(*r.theta_deg - theta);
    pt.ratio_rel_error = std::abs(r.ratio() - ratio_target) / ratio_target;
    pt.ok = true;
  } catch (const std::exception& e) {
    status = error_tag(e);
  }
  pt.row = {num(theta), mean, stdev, num(ratio_target), ratio, status};
  return pt;
}

ReportTable angle_table(std::string name) {
  return {std::move(name), {"theta_target", "theta_mean", "theta_std", "ratio_target", "ratio_retrieved", "status"}, {}};
}

}  // namespace

RunReport reproduce_fig2(const ExperimentSpec& spec) {
  const RunSettings& s = spec.settings;
  RunReport report;
  report.mode = "fig2";

  std::vector<double> all = spec.sweep;
  all.insert(all.end(), spec.dense_sweep.begin(), spec.dense_sweep.end());
  std::vector<AnglePoint> points(all.size());
  parallel_for(all.size(), s.threads,
               [&](std::size_t i) { points[i] = angle_point(s, all[i], i < spec.sweep.size()); });

  ReportTable named = angle_table("fig2"), dense = angle_table("fig2_dense");
  double sum_err = 0, max_err = 0, max_ratio = 0, dense_max = 0, failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const AnglePoint& pt = points[i];
    const bool is_named = i < spec.sweep.size();
    (is_named ? named : dense).rows.push_back(pt.row);
    if (!pt.ok) {
      ++failed;
      report.lines.push_back(fmt::format("theta* = {:5.1f} deg: {}", all[i], pt.row.back()));
      continue;
    }
    if (is_named) {
      sum_err += pt.abs_error;
      max_err = std::max(max_err, pt.abs_error);
      max_ratio = std::max(max_ratio, pt.ratio_rel_error);
      report.lines.push_back(fmt::format("theta* = {:5.1f} deg: retrieved {} +/- {} deg, ratio {} (target {})",
                                         all[i], pt.row[1], pt.row[2], pt.row[4], pt.row[3]));
      if (pt.inset) report.images.push_back({fmt::format("fig2_theta{:g}", all[i]), *pt.inset});
    } else {
      dense_max = std::max(dense_max, pt.abs_error);
    }
  }
  report.tables.push_back(std::move(named));
  if (!spec.dense_sweep.empty()) {
    report.tables.push_back(std::move(dense));
    report.lines.push_back(fmt::format("dense sweep {}..{} deg: max |error| {:.4f} deg", spec.dense_sweep.front(),
                                       spec.dense_sweep.back(), dense_max));
  }
  const double named_count = double(spec.sweep.size());
  report.summary = {{"mean_abs_angle_error_deg", named_count > 0 ? sum_err / named_count : 0.0},
                    {"max_abs_angle_error_deg", max_err},
                    {"max_ratio_rel_error", max_ratio},
                    {"dense_max_abs_angle_error_deg", dense_max},
                    {"failed_points", failed}};
  add_provenance(report, s);
  return report;
}

// ---------------------------------------------------------------------------

RunReport reproduce_fig3(const ExperimentSpec& spec) {
  const RunSettings& s = spec.settings;
  const optics::GridSpec grid = s.grid();
  RunReport report;
  report.mode = "fig3";

  // Fixed camera exposure: F_beta stays at the smallest needed transmittance
  // and F_alpha attenuates, so the alpha signal fades as the ratio grows.
  measure::NoiseModel noise = s.noise();
  if (!noise.is_noiseless() && noise.full_scale == 0.0) {
    const bench::BenchOutput ref = bench::run_bench(
        {grid, bench::FilterPair{bench::FilterSetting::make(1.0), bench::FilterSetting::make(1.0)}, BellOutcome{},
         s.y_offset});
    const auto h = measure::design_cgh(grid, true, {.center = measure::intensity_centroid(ref.field)});
    noise.full_scale = measure::correlate_2f(ref.field, h).focal_image.peak();
  }

  double min_ratio = 1.0;
  for (double r : spec.sweep) min_ratio = std::min(min_ratio, r);
  const double t_beta = min_ratio;

  struct RatioPoint {
    std::vector<std::string> row;
    double rel_error = 0;
    bool ok = false;
  };
  std::vector<RatioPoint> ratio_points(spec.sweep.size());
  parallel_for(spec.sweep.size(), s.threads, [&](std::size_t i) {
    const double target = spec.sweep[i];
    RatioPoint& pt = ratio_points[i];
    const double t_alpha = t_beta / target;
    std::vector<std::string> cells(6);
    std::string status = "ok";
    try {
      const bench::BenchOutput out = bench::run_bench(
          {grid, bench::FilterPair{bench::FilterSetting::make(t_alpha), bench::FilterSetting::make(t_beta)},
           BellOutcome{}, s.y_offset});
      const optics::ScalarField detected = complex(std::sqrt(out.transmitted_power)) * out.field;
      const auto r = measure::modal_decomposition(detected, noise, s.frames);
      double ss = 0;
      for (double q : r.frame_ratios) ss += (q - target) * (q - target);
      pt.rel_error = std::sqrt(ss / double(r.frame_ratios.size())) / target;
      cells = {num(r.ratio()), num(measure::moments(r.frame_ratios).std), num(pt.rel_error), num(r.abs_alpha),
               num(r.abs_beta), num(r.delta_phi)};
      pt.ok = std::isfinite(pt.rel_error);
      if (!pt.ok) status = "infinite-ratio";
    } catch (const std::exception& e) {
      status = error_tag(e);
    }
    pt.row = {num(target), cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], num(t_alpha), num(t_beta),
              status};
  });

  ReportTable ratios{"fig3a",
                     {"ratio_target", "ratio_retrieved", "ratio_std", "rel_error", "abs_alpha", "abs_beta",
                      "delta_phi_rad", "t_alpha", "t_beta", "status"},
                     {}};
  double max_rel = 0, failed = 0;
  bool monotone = true;
  double prev = -1;
  for (std::size_t i = 0; i < ratio_points.size(); ++i) {
    const RatioPoint& pt = ratio_points[i];
    ratios.rows.push_back(pt.row);
    if (!pt.ok) {
      ++failed;
      monotone = false;
      report.lines.push_back(fmt::format("|beta/alpha| = {:g}: {}", spec.sweep[i], pt.row.back()));
      continue;
    }
    max_rel = std::max(max_rel, pt.rel_error);
    if (pt.rel_error < prev) monotone = false;
    prev = pt.rel_error;
    report.lines.push_back(fmt::format("|beta/alpha| = {:g}: retrieved {} (relative error {})", spec.sweep[i],
                                       pt.row[1], pt.row[3]));
  }
  report.tables.push_back(std::move(ratios));

  struct TiltPoint {
    std::vector<std::string> row;
    double error_deg = 0;
    bool ok = false;
    std::optional<measure::CcdImage> measured, theory;
  };
  std::vector<TiltPoint> tilt_points(spec.tilts.size());
  parallel_for(spec.tilts.size(), s.threads, [&](std::size_t i) {
    const double tilt = spec.tilts[i];
    TiltPoint& pt = tilt_points[i];
    const double plate_phase = bench::tilt_to_phase(tilt, s.plate.thickness, s.plate.index, s.wavelength);
    const double encoded = wrap(-plate_phase);
    std::vector<std::string> cells(5);
    std::string status = "ok";
    try {
      const bench::FilterPair filters{bench::FilterSetting::tilted(1.0, tilt, s.plate, s.wavelength),
                                      bench::FilterSetting::make(1.0)};
      const bench::BenchOutput out = bench::run_bench({grid, filters, BellOutcome{}, s.y_offset});
      const optics::ScalarField detected = complex(std::sqrt(out.transmitted_power)) * out.field;
      pt.theory = measure::render_ccd(detected, measure::NoiseModel{});
      pt.measured = measure::render_ccd(detected, noise.for_frame(0));
      const auto r = measure::modal_decomposition(detected, noise, s.frames);
      pt.error_deg = deg(wrap(r.delta_phi - encoded));
      cells = {num(r.delta_phi), num(r.delta_phi_std), num(pt.error_deg), num(r.abs_alpha), num(r.abs_beta)};
      pt.ok = r.phase_defined;
      if (!pt.ok) status = "phase-undefined";
    } catch (const std::exception& e) {
      status = error_tag(e);
    }
    pt.row = {num(tilt), num(plate_phase), num(encoded), cells[0], cells[1], cells[2], cells[3], cells[4], status};
  });

  ReportTable phases{"fig3b",
                     {"tilt_deg", "plate_phase_rad", "phase_encoded_rad", "phase_retrieved_rad", "phase_std_rad",
                      "phase_error_deg", "abs_alpha", "abs_beta", "status"},
                     {}};
  double max_phase_err = 0;
  for (std::size_t i = 0; i < tilt_points.size(); ++i) {
    TiltPoint& pt = tilt_points[i];
    phases.rows.push_back(pt.row);
    const std::string tag = fmt::format("{:g}", spec.tilts[i]);
    std::string safe = tag;
    for (char& c : safe)
      if (c == '.') c = 'p';
    if (pt.measured) report.images.push_back({"fig3b_tilt" + safe + "_measured", std::move(*pt.measured)});
    if (pt.theory) report.images.push_back({"fig3b_tilt" + safe + "_theory", std::move(*pt.theory)});
    if (!pt.ok) {
      ++failed;
      report.lines.push_back(fmt::format("tilt {} deg: {}", tag, pt.row.back()));
      continue;
    }
    max_phase_err = std::max(max_phase_err, std::abs(pt.error_deg));
    report.lines.push_back(fmt::format("tilt {} deg: encoded {} rad, retrieved {} +/- {} rad (error {} deg)", tag,
                                       pt.row[2], pt.row[3], pt.row[4], pt.row[5]));
  }
  report.tables.push_back(std::move(phases));

  report.summary = {{"max_ratio_rel_error", max_rel},
                    {"ratio_error_monotone", monotone ? 1.0 : 0.0},
                    {"max_abs_phase_error_deg", max_phase_err},
                    {"full_scale_intensity", noise.full_scale},
                    {"failed_points", failed}};
  add_provenance(report, s);
  return report;
}

// ---------------------------------------------------------------------------

RunReport run_teleport(const RunSettings& s) {
  RunReport report;
  report.mode = "teleport";
  const bench::FilterPair filters = s.filters();
  const PayloadCoeffs payload = bench::payload_of(filters);
  const BellOutcome o = s.selected_outcome();
  const bench::BenchOutput out = bench::run_bench({s.grid(), filters, o, s.y_offset});
  const Correction corr = correction_for(o);

  const Spinor coeffs = mode_coefficients(out.field);
  const double fid = fidelity(corr.apply(coeffs), payload);
  report.tables.push_back({"teleport",
                           {"outcome", "correction", "probability", "alpha_re", "alpha_im", "beta_re", "beta_im",
                            "b0_re", "b0_im", "b1_re", "b1_im", "fidelity"},
                           {{o.label(), std::string(corr.name()), num(out.probability), num(payload.alpha().real()),
                             num(payload.alpha().imag()), num(payload.beta().real()), num(payload.beta().imag()),
                             num(coeffs[0].real()), num(coeffs[0].imag()), num(coeffs[1].real()),
                             num(coeffs[1].imag()), num(fid)}}});
  report.images.push_back({"teleport_M", measure::render_ccd(out.field, measure::NoiseModel{})});
  report.summary = {{"probability", out.probability}, {"fidelity", fid}};
  report.lines.push_back(fmt::format("outcome {} ({}): probability {:.6f}, corrected fidelity {:.12f}", o.label(),
                                     corr.name(), out.probability, fid));
  add_provenance(report, s);
  return report;
}

RunReport run_angle(const RunSettings& s) {
  RunReport report;
  report.mode = "angle";
  const bench::FilterPair filters = s.filters();
  const PayloadCoeffs payload = bench::payload_of(filters);
  const bench::BenchOutput out = bench::run_bench({s.grid(), filters, s.selected_outcome(), s.y_offset});
  const auto r = measure::measure_angle(out.field, s.noise(), s.frames, s.angle_options());
  const double target = std::abs(payload.beta()) / std::abs(payload.alpha());
  report.tables.push_back({"angle",
                           {"ratio_target", "ratio_retrieved", std::string(measure::MeasurementResult::csv_header())},
                           {{num(target), num(r.ratio()), r.csv_row()}}});
  report.images.push_back({"angle_frame0", measure::render_ccd(out.field, s.noise().for_frame(0))});
  report.summary = {{"theta_deg", *r.theta_deg}, {"theta_std", r.theta_std}, {"ratio", r.ratio()}};
  report.lines.push_back(
      fmt::format("theta {:.4f} +/- {:.4f} deg, |beta/alpha| {:.6f} (target {:.6f})", *r.theta_deg, r.theta_std,
                  r.ratio(), target));
  add_provenance(report, s);
  return report;
}

RunReport run_decompose(const RunSettings& s) {
  RunReport report;
  report.mode = "decompose";
  const bench::FilterPair filters = s.filters();
  const PayloadCoeffs payload = bench::payload_of(filters);
  const bench::BenchOutput out = bench::run_bench({s.grid(), filters, s.selected_outcome(), s.y_offset});
  const auto r = measure::modal_decomposition(out.field, s.noise(), s.frames);
  const double target = std::abs(payload.beta()) / std::abs(payload.alpha());
  const double phase_target = wrap(std::arg(payload.beta()) - std::arg(payload.alpha()));
  report.tables.push_back(
      {"decompose",
       {"ratio_target", "phase_target_rad", "ratio_retrieved", std::string(measure::MeasurementResult::csv_header())},
       {{num(target), num(phase_target), num(r.ratio()), r.csv_row()}}});

  const auto h = measure::design_cgh(out.field.grid(), true, {.center = measure::intensity_centroid(out.field)});
  report.images.push_back({"decompose_focal", measure::correlate_2f(out.field, h).focal_image});
  report.images.push_back({"decompose_M", measure::render_ccd(out.field, measure::NoiseModel{})});
  report.summary = {{"abs_alpha", r.abs_alpha}, {"abs_beta", r.abs_beta}, {"delta_phi", r.delta_phi}};
  report.lines.push_back(fmt::format("|alpha| {:.6f} |beta| {:.6f} delta_phi {:.6f} rad (targets ratio {:.6f}, "
                                     "phase {:.6f} rad)",
                                     r.abs_alpha, r.abs_beta, r.delta_phi, target, phase_target));
  add_provenance(report, s);
  return report;
}

}  // namespace cebit::harness
