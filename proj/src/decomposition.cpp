#include <cmath>
#include <limits>
#include <numbers>

#include "cebit/errors.hpp"
#include "cebit/measurement.hpp"

namespace cebit::measure {

namespace {

struct ChannelIntensities {
  double a = 0, b = 0, cos = 0, sin = 0;
};

ChannelIntensities read_channels(const CcdImage& img, const Hologram& h) {
  auto px = [&](std::size_t k) { return img.at(h.entries[k].read_x, h.entries[k].read_y); };
  return {px(0), px(1), px(2), px(3)};
}

double wrap(double radians) {
  double r = std::remainder(radians, 2.0 * std::numbers::pi);
  return r <= -std::numbers::pi ? r + 2.0 * std::numbers::pi : r;
}

}  // namespace

Offset intensity_centroid(const ScalarField& M) {
  const GridSpec& g = M.grid();
  double w = 0, sx = 0, sy = 0;
  for (int iy = 0; iy < g.n(); ++iy)
    for (int ix = 0; ix < g.n(); ++ix) {
      const double v = std::norm(M.at(ix, iy));
      w += v;
      sx += v * g.coord(ix);
      sy += v * g.coord(iy);
    }
  if (!(w > 0)) throw DarkBeam("cannot locate the centroid of a dark field");
  return {sx / w, sy / w};
}

MeasurementResult modal_decomposition(const ScalarField& M, const NoiseModel& noise, int frames) {
  if (frames < 1) throw InvalidArgument("frames must be at least 1");

  // The beam may be displaced by an unknown y0; the filters follow its centroid.
  const Hologram h = design_cgh(M.grid(), true, CghOptions{.center = intensity_centroid(M)});
  const Correlation corr = correlate_2f(M, h);

  std::vector<ChannelIntensities> per_frame;
  per_frame.reserve(std::size_t(frames));
  if (noise.is_noiseless()) {
    per_frame.assign(std::size_t(frames), read_channels(corr.focal_image, h));
  } else {
    for (int k = 0; k < frames; ++k) {
      CcdImage img = corr.focal_image;
      apply_noise(img, noise.for_frame(std::uint64_t(k)));
      per_frame.push_back(read_channels(img, h));
    }
  }

  ChannelIntensities mean;
  for (const auto& c : per_frame) {
    mean.a += c.a;
    mean.b += c.b;
    mean.cos += c.cos;
    mean.sin += c.sin;
  }
  const double inv = 1.0 / frames;
  mean = {mean.a * inv, mean.b * inv, mean.cos * inv, mean.sin * inv};

  const double tolerance =
      noise.is_noiseless() ? kUnitCircleTolerance : std::numeric_limits<double>::infinity();

  MeasurementResult r;
  r.frames = frames;
  r.seed = noise.seed;
  const double total = mean.a + mean.b;
  if (!(total > 0)) throw DarkBeam("no correlation signal in the first-order channels");
  r.abs_alpha = std::sqrt(mean.a / total);
  r.abs_beta = std::sqrt(mean.b / total);
  try {
    r.delta_phi = phase_from_interference(mean.a, mean.b, mean.cos, mean.sin, tolerance);
    r.phase_defined = true;
  } catch (const PhaseUndefined&) {
    r.delta_phi = 0.0;
    r.phase_defined = false;
  }

  std::vector<double> alphas, betas, phase_offsets;
  for (const auto& c : per_frame) {
    const double t = c.a + c.b;
    alphas.push_back(t > 0 ? std::sqrt(c.a / t) : 0.0);
    betas.push_back(t > 0 ? std::sqrt(c.b / t) : 0.0);
    r.frame_ratios.push_back(c.a > 0 ? std::sqrt(c.b / c.a) : std::numeric_limits<double>::infinity());
    if (r.phase_defined) {
      try {
        phase_offsets.push_back(wrap(phase_from_interference(c.a, c.b, c.cos, c.sin, tolerance) - r.delta_phi));
      } catch (const PhaseUndefined&) {
      }
    }
  }
  r.abs_alpha_std = moments(alphas).std;
  r.abs_beta_std = moments(betas).std;
  r.delta_phi_std = moments(phase_offsets).std;
  return r;
}

}  // namespace cebit::measure
