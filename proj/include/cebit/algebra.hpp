#pragma once

// Exact state-vector engine for the three cebits C (path), A (polarization)
// and B (spatial mode). Basis index is 4c + 2a + b.

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace cebit {

using complex = std::complex<double>;
using Spinor = std::array<complex, 2>;
using Matrix2 = std::array<std::array<complex, 2>, 2>;

constexpr int basis_index(int c, int a, int b) { return 4 * c + 2 * a + b; }

struct CebitState {
  std::array<complex, 8> amplitudes{};

  complex& operator()(int c, int a, int b) { return amplitudes[basis_index(c, a, b)]; }
  const complex& operator()(int c, int a, int b) const { return amplitudes[basis_index(c, a, b)]; }

  static CebitState basis(int c, int a, int b);

  double norm_squared() const;
  CebitState normalized() const;

  friend CebitState operator+(const CebitState& lhs, const CebitState& rhs);
  friend CebitState operator*(complex k, const CebitState& s);

  /// Sixteen comma-separated values: (re, im) for indices 0..7.
  std::string to_csv() const;
  static CebitState from_csv(std::string_view line);
};

/// Payload (alpha, beta) held in normalized form.
class PayloadCoeffs {
 public:
  /// Throws InvalidPayload when alpha = beta = 0.
  PayloadCoeffs(complex alpha, complex beta);

  complex alpha() const { return alpha_; }
  complex beta() const { return beta_; }
  Spinor spinor() const { return {alpha_, beta_}; }

 private:
  complex alpha_;
  complex beta_;
};

struct BellOutcome {
  int c = 0;
  int a = 0;

  /// Parses "00", "01", "10" or "11".
  static BellOutcome parse(std::string_view text);
  std::string label() const;
  friend bool operator==(const BellOutcome&, const BellOutcome&) = default;
};

inline constexpr std::array<BellOutcome, 4> kAllOutcomes{
    BellOutcome{0, 0}, BellOutcome{0, 1}, BellOutcome{1, 0}, BellOutcome{1, 1}};

struct Correction {
  enum class Label { I, X, Z, XZ };
  Label label;
  Matrix2 matrix;

  Spinor apply(const Spinor& v) const;
  std::string_view name() const;
};

struct Projection {
  Spinor b_state{};      // normalized B factor, zero when undefined
  double probability = 0;
  bool defined = false;  // false for a zero-probability branch
};

CebitState prepare_input(const PayloadCoeffs& p);

/// C-NOT with control C and target A: |c,a,b> -> |c,a^c,b>.
CebitState apply_cnot_CA(const CebitState& s);

/// Hadamard on the C factor, H = [[1,1],[1,-1]]/sqrt(2).
CebitState apply_hadamard_C(const CebitState& s);

CebitState teleport_transform(const CebitState& s);

Projection project_CA(const CebitState& s, BellOutcome o);

Correction correction_for(BellOutcome o);

/// |<b, p>|^2 after normalizing both vectors. Throws InvalidArgument on a zero vector.
double fidelity(const Spinor& b_state, const Spinor& reference);
double fidelity(const Spinor& b_state, const PayloadCoeffs& p);

}  // namespace cebit
