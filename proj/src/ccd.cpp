#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "cebit/measurement.hpp"

namespace cebit::measure {

double CcdImage::peak() const {
  double m = 0;
  for (double v : pixels) m = std::max(m, v);
  return m;
}

CcdImage render_ccd(const ScalarField& f, const NoiseModel& noise) {
  CcdImage img(f.grid());
  const auto s = f.samples();
  for (std::size_t i = 0; i < s.size(); ++i) img.pixels[i] = std::norm(s[i]);
  apply_noise(img, noise);
  return img;
}

CcdImage render_ccd(const VectorBeam& b, optics::Path path, const NoiseModel& noise) {
  CcdImage img(b.grid());
  const auto ex = b.component(path, optics::Polarization::x).samples();
  const auto ey = b.component(path, optics::Polarization::y).samples();
  for (std::size_t i = 0; i < ex.size(); ++i) img.pixels[i] = std::norm(ex[i]) + std::norm(ey[i]);
  apply_noise(img, noise);
  return img;
}

Moments moments(const std::vector<double>& values) {
  Moments m;
  if (values.empty()) return m;
  for (double v : values) m.mean += v;
  m.mean /= double(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.std = std::sqrt(ss / double(values.size() - 1));
  }
  return m;
}

double MeasurementResult::ratio() const { return abs_beta / abs_alpha; }

std::string_view MeasurementResult::csv_header() {
  return "abs_alpha,abs_beta,delta_phi_rad,theta_deg,abs_alpha_std,abs_beta_std,delta_phi_std,theta_std,"
         "frames,seed";
}

std::string MeasurementResult::csv_row() const {
  const std::string theta = theta_deg ? fmt::format("{:.10g}", *theta_deg) : std::string();
  return fmt::format("{:.10g},{:.10g},{:.10g},{},{:.6g},{:.6g},{:.6g},{:.6g},{},{}", abs_alpha, abs_beta,
                     delta_phi, theta, abs_alpha_std, abs_beta_std, delta_phi_std, theta_std, frames, seed);
}

}  // namespace cebit::measure
