// Scalar reference kernels: one call into the single-configuration path per
// element. SIMD variants are tested against these.

#include <cmath>

#include "kernel_table.hpp"

namespace spin1bell::kernels::detail {

namespace {

AngleConfig config_at(const AngleColumns& a, std::size_t i) {
  return {Angle(a.beta1[i]), Angle(a.beta1_prime[i]), Angle(a.beta2[i]),
          Angle(a.beta2_prime[i])};
}

void s_batch_scalar(const Complex* state, const AngleColumns& angles, double* out) {
  Amplitudes amps{};
  for (std::size_t k = 0; k < kStateDim; ++k) amps[k] = state[k];
  const auto psi = SpinState::from_amplitudes(amps);
  for (std::size_t i = 0; i < angles.size(); ++i) out[i] = s_value(psi, config_at(angles, i)).s;
}

void singlet_closed_scalar(const AngleColumns& angles, double* out) {
  for (std::size_t i = 0; i < angles.size(); ++i)
    out[i] = s_singlet_closed_form(config_at(angles, i));
}

void product_closed_scalar(const AngleColumns& angles, double* out) {
  for (std::size_t i = 0; i < angles.size(); ++i)
    out[i] = s_product_closed_form(config_at(angles, i));
}

void sincos_scalar(const double* x, std::size_t n, double* sin_out, double* cos_out) {
  for (std::size_t i = 0; i < n; ++i) {
    sin_out[i] = std::sin(x[i]);
    cos_out[i] = std::cos(x[i]);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{s_batch_scalar, singlet_closed_scalar,
                                     product_closed_scalar, sincos_scalar};
  return table;
}

}  // namespace spin1bell::kernels::detail
