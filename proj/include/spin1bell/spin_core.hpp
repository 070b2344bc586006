#pragma once

// Spin-1 two-particle kernel: y-axis rotation matrices, z-basis product
// states, rotated-basis expansions and joint outcome probability tables.
//
// Basis ordering is (+1, 0, -1) throughout; index 0 is m = +1.

#include <array>
#include <complex>
#include <cstddef>
#include <span>

#include "spin1bell/angle.hpp"

namespace spin1bell {

using Complex = std::complex<double>;

/// Spin projection along the measured direction.
enum class Outcome : int { plus = 1, zero = 0, minus = -1 };

inline constexpr std::array<Outcome, 3> kOutcomes = {Outcome::plus, Outcome::zero,
                                                     Outcome::minus};

constexpr std::size_t index_of(Outcome m) {
  return static_cast<std::size_t>(1 - static_cast<int>(m));
}

constexpr Outcome outcome_at(std::size_t index) { return kOutcomes.at(index); }

constexpr int quantum_number(Outcome m) { return static_cast<int>(m); }

using Matrix3 = std::array<std::array<double, 3>, 3>;
using RealKet = std::array<double, 3>;
using Ket = std::array<Complex, 3>;

/// Spin-1 rotation about y. Row index is the z-basis outcome, column index the
/// rotated-basis outcome, so column m holds the rotated eigenvector |m'>.
class RotationMatrix {
 public:
  explicit RotationMatrix(const Matrix3& entries) : entries_(entries) {}

  double operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  const Matrix3& entries() const { return entries_; }

  RealKet column(std::size_t col) const {
    return {entries_[0][col], entries_[1][col], entries_[2][col]};
  }

  RotationMatrix transposed() const;
  double determinant() const;

  friend RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b);

 private:
  Matrix3 entries_;
};

/// Largest absolute entry of a - b.
double max_abs_diff(const Matrix3& a, const Matrix3& b);

inline constexpr std::size_t kStateDim = 9;
using Amplitudes = std::array<Complex, kStateDim>;

/// Slot of amplitude (m1, m2) in the product ordering (+1,+1), (+1,0), ..., (-1,-1).
constexpr std::size_t pair_index(Outcome m1, Outcome m2) {
  return 3 * index_of(m1) + index_of(m2);
}

/// Unit-norm pure state of two spin-1 particles in the z product basis.
class SpinState {
 public:
  /// Tolerance on |norm² - 1| accepted at construction.
  static constexpr double kNormTolerance = 1e-12;

  /// Throws std::invalid_argument unless the amplitudes are unit-norm.
  static SpinState from_amplitudes(const Amplitudes& amplitudes);

  const Amplitudes& amplitudes() const { return amplitudes_; }
  Complex amplitude(Outcome m1, Outcome m2) const { return amplitudes_[pair_index(m1, m2)]; }
  double norm_squared() const;

 private:
  explicit SpinState(const Amplitudes& amplitudes) : amplitudes_(amplitudes) {}
  Amplitudes amplitudes_;
};

/// Joint outcome probabilities P(m1, m2) for analyzer settings (beta1, beta2).
struct JointProbTable {
  Angle beta1;
  Angle beta2;
  Matrix3 probs{};

  double at(Outcome m1, Outcome m2) const { return probs[index_of(m1)][index_of(m2)]; }
  double total() const;
};

RotationMatrix rotation_matrix(Angle beta);

/// (1/√3)(|+1,-1> - |0,0> + |-1,+1>), the total-spin-zero state.
SpinState singlet_state();

/// Normalized tensor product ket1 ⊗ ket2. Throws on a zero-norm ket.
SpinState product_state(const Ket& ket1, const Ket& ket2);

/// Eigenvector of the spin projection along beta with eigenvalue m, expressed
/// in the z basis.
RealKet rotated_eigenvector(Angle beta, Outcome m);

/// Applies D(beta1) ⊗ D(beta2) to the amplitude vector.
SpinState rotate_state(const SpinState& state, Angle beta1, Angle beta2);

JointProbTable joint_prob_table(const SpinState& state, Angle beta1, Angle beta2);

/// Outcome distribution of one particle measured along beta (the other
/// particle traced out). side 0 is particle 1.
RealKet marginal_distribution(const SpinState& state, std::size_t side, Angle beta);

/// Coefficients <m1'| ⊗ <m2'| Ψ> of the singlet in the rotated product basis,
/// in pair_index order.
std::array<double, kStateDim> singlet_rotated_expansion(Angle beta1, Angle beta2);

}  // namespace spin1bell
