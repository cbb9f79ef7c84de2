#include "cebit/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "cebit/errors.hpp"

namespace cebit {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used == value.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ConfigError(fmt::format("{}: '{}' is not a number", key, value), key);
}

template <class Int>
Int parse_int(const std::string& key, const std::string& value) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError(fmt::format("{}: '{}' is not an integer", key, value), key);
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, value), key);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(fmt::format("line {}: expected key=value, got '{}'", line_no, body), body);
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError(fmt::format("line {}: empty key", line_no));
    if (value.empty()) throw ConfigError(fmt::format("{}: empty value", key), key);
    cfg.entries_[std::move(key)] = std::move(value);
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const std::vector<std::string_view>& RunSettings::known_keys() {
  static const std::vector<std::string_view> keys{
      "grid.n",          "grid.window_w0", "grid.w0",         "wavelength",     "payload.t_alpha",
      "payload.t_beta",  "payload.tilt_alpha_deg", "plate.thickness", "plate.index", "beam.y_offset",
      "outcome",         "noise.sigma",    "noise.shot",      "noise.photons",  "frames",
      "seed",            "suite.count",    "threads",         "angle.threshold"};
  return keys;
}

void RunSettings::apply(const KeyValueConfig& cfg) {
  for (const auto& [key, value] : cfg.entries()) {
    if (key == "grid.n") grid_n = parse_int<int>(key, value);
    else if (key == "grid.window_w0") window_w0 = parse_double(key, value);
    else if (key == "grid.w0") waist = parse_double(key, value);
    else if (key == "wavelength") wavelength = parse_double(key, value);
    else if (key == "payload.t_alpha") t_alpha = parse_double(key, value);
    else if (key == "payload.t_beta") t_beta = parse_double(key, value);
    else if (key == "payload.tilt_alpha_deg") tilt_alpha_deg = parse_double(key, value);
    else if (key == "plate.thickness") plate.thickness = parse_double(key, value);
    else if (key == "plate.index") plate.index = parse_double(key, value);
    else if (key == "beam.y_offset") y_offset = parse_double(key, value);
    else if (key == "outcome") {
      try {
        outcome = BellOutcome::parse(value);
      } catch (const InvalidArgument& e) {
        throw ConfigError(fmt::format("outcome: {}", e.what()), key);
      }
    } else if (key == "noise.sigma") noise_sigma = parse_double(key, value);
    else if (key == "noise.shot") shot_noise = parse_bool(key, value);
    else if (key == "noise.photons") photons = parse_double(key, value);
    else if (key == "frames") frames = parse_int<int>(key, value);
    else if (key == "seed") seed = parse_int<std::uint64_t>(key, value);
    else if (key == "suite.count") count = parse_int<int>(key, value);
    else if (key == "threads") threads = parse_int<int>(key, value);
    else if (key == "angle.threshold") angle_threshold = parse_double(key, value);
    else throw ConfigError("unknown config key '" + key + "'", key);
  }
}

void RunSettings::validate() const {
  auto require = [](bool ok, std::string_view key, std::string_view what) {
    if (!ok) throw InvalidArgument(fmt::format("{}: {}", key, what));
  };
  require(grid_n >= 64 && (grid_n & (grid_n - 1)) == 0, "grid.n", "must be a power of two >= 64");
  require(window_w0 >= 6.0, "grid.window_w0", "must be at least 6 waists");
  require(waist > 0, "grid.w0", "must be positive");
  require(wavelength > 0, "wavelength", "must be positive");
  require(t_alpha >= 0 && t_alpha <= 1, "payload.t_alpha", "must lie in [0, 1]");
  require(t_beta >= 0 && t_beta <= 1, "payload.t_beta", "must lie in [0, 1]");
  require(t_alpha > 0 || t_beta > 0, "payload.t_alpha", "both transmittances are zero");
  require(std::abs(tilt_alpha_deg) < 45, "payload.tilt_alpha_deg", "must be below 45 degrees");
  require(plate.thickness > 0, "plate.thickness", "must be positive");
  require(plate.index > 1, "plate.index", "must exceed 1");
  require(noise_sigma >= 0, "noise.sigma", "must be non-negative");
  require(photons > 0, "noise.photons", "must be positive");
  require(frames >= 1, "frames", "must be at least 1");
  require(count >= 1, "suite.count", "must be at least 1");
  require(threads >= 1, "threads", "must be at least 1");
  require(angle_threshold > 0 && angle_threshold < 1, "angle.threshold", "must lie in (0, 1)");
}

optics::GridSpec RunSettings::grid() const { return optics::GridSpec::with_window(grid_n, window_w0, waist); }

measure::NoiseModel RunSettings::noise() const {
  measure::NoiseModel n;
  n.gaussian_sigma = noise_sigma;
  n.shot_noise = shot_noise;
  n.photons = photons;
  n.seed = seed;
  return n;
}

bench::FilterPair RunSettings::filters() const {
  const bench::FilterSetting alpha = tilt_alpha_deg == 0.0
                                         ? bench::FilterSetting::make(t_alpha)
                                         : bench::FilterSetting::tilted(t_alpha, tilt_alpha_deg, plate, wavelength);
  return {alpha, bench::FilterSetting::make(t_beta)};
}

measure::AngleOptions RunSettings::angle_options() const {
  measure::AngleOptions o;
  o.threshold = angle_threshold;
  return o;
}

std::string RunSettings::canonical() const {
  std::map<std::string, std::string> kv{
      {"grid.n", fmt::format("{}", grid_n)},
      {"grid.window_w0", fmt::format("{:.17g}", window_w0)},
      {"grid.w0", fmt::format("{:.17g}", waist)},
      {"wavelength", fmt::format("{:.17g}", wavelength)},
      {"payload.t_alpha", fmt::format("{:.17g}", t_alpha)},
      {"payload.t_beta", fmt::format("{:.17g}", t_beta)},
      {"payload.tilt_alpha_deg", fmt::format("{:.17g}", tilt_alpha_deg)},
      {"plate.thickness", fmt::format("{:.17g}", plate.thickness)},
      {"plate.index", fmt::format("{:.17g}", plate.index)},
      {"beam.y_offset", fmt::format("{:.17g}", y_offset)},
      {"outcome", outcome ? outcome->label() : "all"},
      {"noise.sigma", fmt::format("{:.17g}", noise_sigma)},
      {"noise.shot", shot_noise ? "true" : "false"},
      {"noise.photons", fmt::format("{:.17g}", photons)},
      {"frames", fmt::format("{}", frames)},
      {"seed", fmt::format("{}", seed)},
      {"suite.count", fmt::format("{}", count)},
      {"angle.threshold", fmt::format("{:.17g}", angle_threshold)},
  };
  // threads is deliberately absent: results do not depend on it.
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace cebit
