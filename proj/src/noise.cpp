#include <algorithm>
#include <random>

#include "cebit/errors.hpp"
#include "cebit/measurement.hpp"

namespace cebit::measure {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

NoiseModel NoiseModel::for_frame(std::uint64_t frame) const {
  NoiseModel out = *this;
  out.seed = splitmix64(seed ^ splitmix64(frame + 1));
  return out;
}

void apply_noise(CcdImage& img, const NoiseModel& noise) {
  if (noise.gaussian_sigma < 0) throw InvalidArgument("gaussian_sigma must be non-negative");
  if (noise.shot_noise && !(noise.photons > 0)) throw InvalidArgument("shot noise needs a positive photon count");

  if (!noise.is_noiseless()) {
    const double reference = noise.full_scale > 0 ? noise.full_scale : img.peak();
    if (reference > 0) {
      std::mt19937_64 rng(noise.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      const double sigma = noise.gaussian_sigma * reference;
      const double per_photon = reference / noise.photons;
      for (double& v : img.pixels) {
        if (noise.shot_noise) {
          const double mean_photons = std::max(v, 0.0) / per_photon;
          if (mean_photons > 0) {
            std::poisson_distribution<long long> shot(mean_photons);
            v = double(shot(rng)) * per_photon;
          }
        }
        if (sigma > 0) v += sigma * normal(rng);
      }
    }
  }
  for (double& v : img.pixels) {
    v = std::max(v, 0.0);
    if (img.saturation_level) v = std::min(v, *img.saturation_level);
  }
}

}  // namespace cebit::measure
