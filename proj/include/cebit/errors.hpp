#pragma once

#include <stdexcept>
#include <string>

namespace cebit {

/// Base of every error raised by the library. The CLI maps ConfigError to
/// exit code 2 and every other Error to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Payload with alpha = beta = 0.
class InvalidPayload : public Error {
 public:
  using Error::Error;
};

/// A mode leaks more power out of the sampling window than allowed.
class GridTooSmall : public Error {
 public:
  GridTooSmall(const std::string& what, double leakage) : Error(what), leakage_(leakage) {}
  double leakage() const noexcept { return leakage_; }

 private:
  double leakage_;
};

/// A beam carries significant power outside the first-order mode pair.
class BasisLeakage : public Error {
 public:
  BasisLeakage(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class DarkBeam : public Error {
 public:
  using Error::Error;
};

/// Lobe segmentation did not find exactly two dominant components.
class SegmentationFailure : public Error {
 public:
  SegmentationFailure(const std::string& what, int components) : Error(what), components_(components) {}
  int components() const noexcept { return components_; }

 private:
  int components_;
};

class InfiniteRatio : public Error {
 public:
  using Error::Error;
};

/// Interference intensities do not describe a point on the unit circle.
class MeasurementInconsistency : public Error {
 public:
  using Error::Error;
};

class PhaseUndefined : public Error {
 public:
  using Error::Error;
};

/// Hologram carriers alias or their correlation spots overlap.
class AliasingError : public Error {
 public:
  using Error::Error;
};

class OutOfBounds : public Error {
 public:
  using Error::Error;
};

/// Configuration text or command line could not be interpreted. `key()` names
/// the offending entry when there is one.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::string key = {}) : Error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

}  // namespace cebit
