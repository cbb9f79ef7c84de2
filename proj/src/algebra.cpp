#include "cebit/algebra.hpp"

#include <cmath>
#include <charconv>
#include <vector>

#include <fmt/format.h>

#include "cebit/errors.hpp"

namespace cebit {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double spinor_norm2(const Spinor& v) { return std::norm(v[0]) + std::norm(v[1]); }

}  // namespace

CebitState CebitState::basis(int c, int a, int b) {
  CebitState s;
  s(c, a, b) = 1.0;
  return s;
}

double CebitState::norm_squared() const {
  double sum = 0;
  for (const auto& z : amplitudes) sum += std::norm(z);
  return sum;
}

CebitState CebitState::normalized() const {
  const double n2 = norm_squared();
  if (n2 == 0) throw InvalidArgument("cannot normalize the zero cebit state");
  return complex(1.0 / std::sqrt(n2)) * *this;
}

CebitState operator+(const CebitState& lhs, const CebitState& rhs) {
  CebitState out;
  for (int i = 0; i < 8; ++i) out.amplitudes[i] = lhs.amplitudes[i] + rhs.amplitudes[i];
  return out;
}

CebitState operator*(complex k, const CebitState& s) {
  CebitState out;
  for (int i = 0; i < 8; ++i) out.amplitudes[i] = k * s.amplitudes[i];
  return out;
}

std::string CebitState::to_csv() const {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += fmt::format("{:.17g},{:.17g}", amplitudes[i].real(), amplitudes[i].imag());
  }
  return out;
}

CebitState CebitState::from_csv(std::string_view line) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t comma = std::min(line.find(',', pos), line.size());
    std::string field(line.substr(pos, comma - pos));
    try {
      std::size_t used = 0;
      values.push_back(std::stod(field, &used));
      if (used != field.size() && field.find_first_not_of(" \t\r", used) != std::string::npos)
        throw InvalidArgument("trailing characters in cebit state field '" + field + "'");
    } catch (const std::logic_error&) {
      throw InvalidArgument("malformed cebit state field '" + field + "'");
    }
    pos = comma + 1;
  }
  if (values.size() != 16)
    throw InvalidArgument(fmt::format("cebit state needs 16 values, got {}", values.size()));
  CebitState s;
  for (int i = 0; i < 8; ++i) s.amplitudes[i] = {values[2 * i], values[2 * i + 1]};
  return s;
}

PayloadCoeffs::PayloadCoeffs(complex alpha, complex beta) {
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (!(n2 > 0) || !std::isfinite(n2)) throw InvalidPayload("payload (alpha, beta) is not normalizable");
  const double inv = 1.0 / std::sqrt(n2);
  alpha_ = alpha * inv;
  beta_ = beta * inv;
}

BellOutcome BellOutcome::parse(std::string_view text) {
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1'))
    throw InvalidArgument("outcome must be one of 00, 01, 10, 11; got '" + std::string(text) + "'");
  return {text[0] - '0', text[1] - '0'};
}

std::string BellOutcome::label() const { return {char('0' + c), char('0' + a)}; }

Spinor Correction::apply(const Spinor& v) const {
  return {matrix[0][0] * v[0] + matrix[0][1] * v[1], matrix[1][0] * v[0] + matrix[1][1] * v[1]};
}

std::string_view Correction::name() const {
  switch (label) {
    case Label::I: return "I";
    case Label::X: return "X";
    case Label::Z: return "Z";
    case Label::XZ: return "XZ";
  }
  return "?";
}

CebitState prepare_input(const PayloadCoeffs& p) {
  CebitState s;
  for (int c = 0; c < 2; ++c) {
    const complex coeff = (c == 0 ? p.alpha() : p.beta()) * kInvSqrt2;
    s(c, 0, 0) = coeff;
    s(c, 1, 1) = coeff;
  }
  return s;
}

CebitState apply_cnot_CA(const CebitState& s) {
  CebitState out;
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) out(c, a ^ c, b) = s(c, a, b);
  return out;
}

CebitState apply_hadamard_C(const CebitState& s) {
  CebitState out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      out(0, a, b) = (s(0, a, b) + s(1, a, b)) * kInvSqrt2;
      out(1, a, b) = (s(0, a, b) - s(1, a, b)) * kInvSqrt2;
    }
  return out;
}

CebitState teleport_transform(const CebitState& s) { return apply_hadamard_C(apply_cnot_CA(s)); }

Projection project_CA(const CebitState& s, BellOutcome o) {
  Projection p;
  const Spinor branch{s(o.c, o.a, 0), s(o.c, o.a, 1)};
  p.probability = spinor_norm2(branch);
  if (p.probability > 0) {
    const double inv = 1.0 / std::sqrt(p.probability);
    p.b_state = {branch[0] * inv, branch[1] * inv};
    p.defined = true;
  }
  return p;
}

Correction correction_for(BellOutcome o) {
  const complex one{1, 0}, zero{0, 0};
  if (o.c == 0 && o.a == 0) return {Correction::Label::I, {{{one, zero}, {zero, one}}}};
  if (o.c == 0 && o.a == 1) return {Correction::Label::X, {{{zero, one}, {one, zero}}}};
  if (o.c == 1 && o.a == 0) return {Correction::Label::Z, {{{one, zero}, {zero, -one}}}};
  // X * Z
  return {Correction::Label::XZ, {{{zero, -one}, {one, zero}}}};
}

double fidelity(const Spinor& b_state, const Spinor& reference) {
  const double nb = spinor_norm2(b_state);
  const double nr = spinor_norm2(reference);
  if (nb == 0 || nr == 0) throw InvalidArgument("fidelity of a zero vector is undefined");
  const complex inner = std::conj(b_state[0]) * reference[0] + std::conj(b_state[1]) * reference[1];
  return std::min(1.0, std::norm(inner) / (nb * nr));
}

double fidelity(const Spinor& b_state, const PayloadCoeffs& p) { return fidelity(b_state, p.spinor()); }

}  // namespace cebit
