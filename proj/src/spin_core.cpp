#include "spin1bell/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spin1bell {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

double ket_norm_squared(const Ket& ket) {
  double sum = 0.0;
  for (const auto& a : ket) sum += std::norm(a);
  return sum;
}

// <u ⊗ v | Ψ> with real u, v.
Complex project(const Amplitudes& amps, const RealKet& u, const RealKet& v) {
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j < 3; ++j) {
    Complex row{0.0, 0.0};
    for (std::size_t k = 0; k < 3; ++k) row += v[k] * amps[3 * j + k];
    sum += u[j] * row;
  }
  return sum;
}

}  // namespace

RotationMatrix RotationMatrix::transposed() const {
  Matrix3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = entries_[j][i];
  return RotationMatrix(t);
}

double RotationMatrix::determinant() const {
  const auto& m = entries_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
  Matrix3 c{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] += a(i, k) * b(k, j);
  return RotationMatrix(c);
}

double max_abs_diff(const Matrix3& a, const Matrix3& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
  return worst;
}

SpinState SpinState::from_amplitudes(const Amplitudes& amplitudes) {
  double sum = 0.0;
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("state amplitudes must be finite");
    }
    sum += std::norm(a);
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized: norm^2 = " + std::to_string(sum));
  }
  return SpinState(amplitudes);
}

double SpinState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

double JointProbTable::total() const {
  double sum = 0.0;
  for (const auto& row : probs)
    for (double p : row) sum += p;
  return sum;
}

RotationMatrix rotation_matrix(Angle beta) {
  const double b = beta.normalized();
  const double c = std::cos(b);
  const double s = std::sin(b);
  const double half_plus = 0.5 * (1.0 + c);
  const double half_minus = 0.5 * (1.0 - c);
  const double off = s * kInvSqrt2;
  return RotationMatrix(Matrix3{{
      {half_plus, -off, half_minus},
      {off, c, -off},
      {half_minus, off, half_plus},
  }});
}

SpinState singlet_state() {
  Amplitudes amps{};
  amps[pair_index(Outcome::plus, Outcome::minus)] = kInvSqrt3;
  amps[pair_index(Outcome::zero, Outcome::zero)] = -kInvSqrt3;
  amps[pair_index(Outcome::minus, Outcome::plus)] = kInvSqrt3;
  return SpinState::from_amplitudes(amps);
}

SpinState product_state(const Ket& ket1, const Ket& ket2) {
  const double n1 = ket_norm_squared(ket1);
  const double n2 = ket_norm_squared(ket2);
  if (!(n1 > 0.0) || !(n2 > 0.0) || !std::isfinite(n1) || !std::isfinite(n2)) {
    throw std::invalid_argument("product state kets must have finite nonzero norm");
  }
  const double scale = 1.0 / std::sqrt(n1 * n2);
  Amplitudes amps{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) amps[3 * j + k] = scale * ket1[j] * ket2[k];
  // renormalize once more so rounding in the scale cannot trip the norm check
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  const double fix = 1.0 / std::sqrt(sum);
  for (auto& a : amps) a *= fix;
  return SpinState::from_amplitudes(amps);
}

RealKet rotated_eigenvector(Angle beta, Outcome m) {
  return rotation_matrix(beta).column(index_of(m));
}

SpinState rotate_state(const SpinState& state, Angle beta1, Angle beta2) {
  const auto d1 = rotation_matrix(beta1);
  const auto d2 = rotation_matrix(beta2);
  const auto& in = state.amplitudes();
  Amplitudes out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Complex sum{0.0, 0.0};
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) sum += d1(i, k) * d2(j, l) * in[3 * k + l];
      out[3 * i + j] = sum;
    }
  return SpinState::from_amplitudes(out);
}

JointProbTable joint_prob_table(const SpinState& state, Angle beta1, Angle beta2) {
  if (std::abs(state.norm_squared() - 1.0) > SpinState::kNormTolerance) {
    throw std::invalid_argument("joint_prob_table requires a normalized state");
  }
  const auto d1 = rotation_matrix(beta1);
  const auto d2 = rotation_matrix(beta2);
  JointProbTable table{beta1, beta2, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto u = d1.column(i);
    for (std::size_t j = 0; j < 3; ++j) {
      const double p = std::norm(project(state.amplitudes(), u, d2.column(j)));
      table.probs[i][j] = std::clamp(p, 0.0, 1.0);
    }
  }
  return table;
}

RealKet marginal_distribution(const SpinState& state, std::size_t side, Angle beta) {
  if (side > 1) throw std::invalid_argument("side must be 0 or 1");
  const auto table = side == 0 ? joint_prob_table(state, beta, Angle{})
                               : joint_prob_table(state, Angle{}, beta);
  RealKet out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[side == 0 ? i : j] += table.probs[i][j];
  for (auto& p : out) p = std::clamp(p, 0.0, 1.0);
  return out;
}

std::array<double, kStateDim> singlet_rotated_expansion(Angle beta1, Angle beta2) {
  const auto singlet = singlet_state();
  const auto d1 = rotation_matrix(beta1);
  const auto d2 = rotation_matrix(beta2);
  std::array<double, kStateDim> out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out[3 * i + j] = project(singlet.amplitudes(), d1.column(i), d2.column(j)).real();
  return out;
}

}  // namespace spin1bell
