#pragma once

// Test-only oracles. These deliberately avoid the library's closed-form
// rotation matrix: the rotation comes from the general Wigner small-d
// factorial sum, and probabilities from an explicit 9x9 Kronecker product.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "spin1bell/spin_core.hpp"

namespace spin1bell::testing {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// d^j_{m'm}(β) by the Wigner sum over k.
inline double wigner_small_d(int j, int mp, int m, double beta) {
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double pre = std::sqrt(factorial(j + m) * factorial(j - m) * factorial(j + mp) *
                               factorial(j - mp));
  double sum = 0.0;
  for (int k = 0; k <= 2 * j; ++k) {
    const int a = j + m - k, b = j - k - mp, e = k - m + mp;
    if (a < 0 || b < 0 || e < 0) continue;
    const double sign = (e % 2 == 0) ? 1.0 : -1.0;
    sum += sign * pre / (factorial(a) * factorial(k) * factorial(b) * factorial(e)) *
           std::pow(c, 2 * j - 2 * k + m - mp) * std::pow(s, 2 * k - m + mp);
  }
  return sum;
}

/// Rotation matrix with rows indexed by z outcome and columns by rotated outcome.
inline Matrix3 oracle_rotation(double beta) {
  constexpr std::array<int, 3> ms = {1, 0, -1};
  Matrix3 d{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) d[r][c] = wigner_small_d(1, ms[r], ms[c], beta);
  return d;
}

/// P(m1, m2) = |((D1 ⊗ D2)^T ψ)_{m1 m2}|² via the full 9x9 matrix.
inline Matrix3 oracle_probabilities(const Amplitudes& psi, double beta1, double beta2) {
  const auto d1 = oracle_rotation(beta1);
  const auto d2 = oracle_rotation(beta2);
  std::array<std::array<double, 9>, 9> kron{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t l = 0; l < 3; ++l) kron[3 * j + k][3 * i + l] = d1[j][i] * d2[k][l];
  Matrix3 p{};
  for (std::size_t col = 0; col < 9; ++col) {
    std::complex<double> amp{0.0, 0.0};
    for (std::size_t row = 0; row < 9; ++row) amp += kron[row][col] * psi[row];
    p[col / 3][col % 3] = std::norm(amp);
  }
  return p;
}

/// S assembled from oracle probability tables.
inline double oracle_s(const Amplitudes& psi, double b1, double b1p, double b2, double b2p) {
  const auto a = oracle_probabilities(psi, b1, b2);
  const auto b = oracle_probabilities(psi, b1, b2p);
  const auto c = oracle_probabilities(psi, b1p, b2p);
  const auto e = oracle_probabilities(psi, b1p, b2);
  return a[0][0] - b[0][0] + c[0][0] + e[1][1] + e[1][2] + e[2][1] + e[2][2];
}

template <class Rng>
double uniform_angle(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
}

template <class Rng>
Amplitudes random_amplitudes(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Amplitudes a;
  double norm = 0.0;
  for (auto& x : a) {
    const double re = n(rng);
    const double im = n(rng);
    x = {re, im};
    norm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(norm);
  return a;
}

}  // namespace spin1bell::testing
