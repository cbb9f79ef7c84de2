#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "cebit/errors.hpp"
#include "cebit/measurement.hpp"

namespace cebit::measure {

namespace {

std::vector<double> box_smooth(const CcdImage& img, int box) {
  const int n = img.grid.n();
  const int r = box / 2;
  std::vector<double> out(img.pixels.size());
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      double sum = 0;
      int count = 0;
      for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx) {
          const int x = ix + dx, y = iy + dy;
          if (x < 0 || y < 0 || x >= n || y >= n) continue;
          sum += img.at(x, y);
          ++count;
        }
      out[img.grid.index(ix, iy)] = sum / count;
    }
  return out;
}

struct Component {
  std::vector<std::size_t> pixels;
};

// 8-connected components of the pixels above `level`.
std::vector<Component> label_components(const std::vector<double>& values, int n, double level) {
  std::vector<int> label(values.size(), -1);
  std::vector<Component> comps;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < values.size(); ++start) {
    if (label[start] >= 0 || !(values[start] > level)) continue;
    const int id = int(comps.size());
    comps.emplace_back();
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      comps[std::size_t(id)].pixels.push_back(k);
      const int ix = int(k % std::size_t(n)), iy = int(k / std::size_t(n));
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int x = ix + dx, y = iy + dy;
          if (x < 0 || y < 0 || x >= n || y >= n) continue;
          const std::size_t nb = std::size_t(y) * std::size_t(n) + std::size_t(x);
          if (label[nb] >= 0 || !(values[nb] > level)) continue;
          label[nb] = id;
          stack.push_back(nb);
        }
    }
  }
  return comps;
}

}  // namespace

LobeAxis find_lobe_axis(const CcdImage& img, const AngleOptions& opts) {
  if (opts.smoothing < 1 || opts.smoothing % 2 == 0) throw InvalidArgument("smoothing box must be odd and positive");
  if (!(opts.threshold > 0 && opts.threshold < 1)) throw InvalidArgument("threshold must lie in (0, 1)");
  const int n = img.grid.n();
  const std::vector<double> smooth = box_smooth(img, opts.smoothing);
  const double peak = *std::max_element(smooth.begin(), smooth.end());
  if (!(peak > 0)) throw SegmentationFailure("image is dark", 0);

  std::vector<Component> comps = label_components(smooth, n, opts.threshold * peak);
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.pixels.size() > b.pixels.size(); });
  const double min_size = opts.min_component_fraction * double(comps.front().pixels.size());
  const auto dominant = std::count_if(comps.begin(), comps.end(), [&](const Component& c) {
    return double(c.pixels.size()) >= min_size;
  });
  if (dominant != 2)
    throw SegmentationFailure(fmt::format("expected two lobes after thresholding, found {}", dominant),
                              int(dominant));

  LobeAxis axis;
  for (std::size_t k = 0; k < 2; ++k) {
    double w = 0, sx = 0, sy = 0;
    for (std::size_t p : comps[k].pixels) {
      const double v = img.pixels[p];
      const int ix = int(p % std::size_t(n)), iy = int(p / std::size_t(n));
      w += v;
      sx += v * img.grid.coord(ix);
      sy += v * img.grid.coord(iy);
    }
    if (!(w > 0)) throw SegmentationFailure("lobe carries no intensity", int(dominant));
    axis.centroids[k] = {sx / w, sy / w};
  }
  const double dx = axis.centroids[1][0] - axis.centroids[0][0];
  const double dy = axis.centroids[1][1] - axis.centroids[0][1];
  axis.theta_deg = std::atan2(std::abs(dx), std::abs(dy)) * 180.0 / std::numbers::pi;
  return axis;
}

double estimate_angle(const CcdImage& img, const AngleOptions& opts) { return find_lobe_axis(img, opts).theta_deg; }

double ratio_from_angle(double theta_deg) {
  if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
    throw InvalidArgument(fmt::format("angle {} deg is outside [0, 90]", theta_deg));
  if (theta_deg == 0.0) throw InfiniteRatio("cot(0) is infinite");
  if (theta_deg == 90.0) return 0.0;
  return 1.0 / std::tan(theta_deg * std::numbers::pi / 180.0);
}

MeasurementResult measure_angle(const ScalarField& M, const NoiseModel& noise, int frames,
                                const AngleOptions& opts) {
  if (frames < 1) throw InvalidArgument("frames must be at least 1");
  std::vector<double> angles;
  angles.reserve(std::size_t(frames));
  for (int k = 0; k < frames; ++k)
    angles.push_back(estimate_angle(render_ccd(M, noise.for_frame(std::uint64_t(k))), opts));

  const Moments theta = moments(angles);
  MeasurementResult r;
  r.theta_deg = theta.mean;
  r.theta_std = theta.std;
  const double ratio = ratio_from_angle(theta.mean);
  r.abs_alpha = 1.0 / std::hypot(1.0, ratio);
  r.abs_beta = ratio * r.abs_alpha;
  r.delta_phi = 0.0;
  r.phase_defined = false;

  std::vector<double> alphas, betas;
  for (double a : angles) {
    const double q = ratio_from_angle(a);
    r.frame_ratios.push_back(q);
    alphas.push_back(1.0 / std::hypot(1.0, q));
    betas.push_back(q / std::hypot(1.0, q));
  }
  r.abs_alpha_std = moments(alphas).std;
  r.abs_beta_std = moments(betas).std;
  r.frames = frames;
  r.seed = noise.seed;
  return r;
}

}  // namespace cebit::measure
