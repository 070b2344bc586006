#include <stdexcept>
#include <string>

#include "kernel_table.hpp"
#include "spin1bell/kernels.hpp"

namespace spin1bell::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::KernelTable& table_for(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return detail::scalar_table();
    case Backend::avx2:
      if (const auto* t = detail::avx2_table(); t != nullptr && cpu_has_avx2()) return *t;
      break;
    case Backend::neon:
      if (const auto* t = detail::neon_table(); t != nullptr) return *t;
      break;
  }
  throw std::invalid_argument("kernel backend '" + std::string(backend_name(backend)) +
                              "' is not available on this build/CPU");
}

void check_sizes(const AngleColumns& angles, std::span<double> out) {
  const std::size_t n = angles.size();
  if (angles.beta1_prime.size() != n || angles.beta2.size() != n ||
      angles.beta2_prime.size() != n || out.size() != n) {
    throw std::invalid_argument("angle columns and output must have equal lengths");
  }
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

bool is_available(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2();
    case Backend::neon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon})
    if (is_available(b)) out.push_back(b);
  return out;
}

Backend best_backend() {
  static const Backend best = [] {
    if (is_available(Backend::avx2)) return Backend::avx2;
    if (is_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
  }();
  return best;
}

AngleBatch::AngleBatch(std::span<const AngleConfig> configs) {
  reserve(configs.size());
  for (const auto& c : configs) push_back(c);
}

void AngleBatch::reserve(std::size_t n) {
  beta1_.reserve(n);
  beta1_prime_.reserve(n);
  beta2_.reserve(n);
  beta2_prime_.reserve(n);
}

void AngleBatch::push_back(const AngleConfig& c) {
  beta1_.push_back(c.beta1.radians());
  beta1_prime_.push_back(c.beta1_prime.radians());
  beta2_.push_back(c.beta2.radians());
  beta2_prime_.push_back(c.beta2_prime.radians());
}

void AngleBatch::clear() {
  beta1_.clear();
  beta1_prime_.clear();
  beta2_.clear();
  beta2_prime_.clear();
}

AngleConfig AngleBatch::config(std::size_t i) const {
  return {Angle(beta1_.at(i)), Angle(beta1_prime_.at(i)), Angle(beta2_.at(i)),
          Angle(beta2_prime_.at(i))};
}

void s_batch(Backend backend, const SpinState& state, const AngleColumns& angles,
             std::span<double> out) {
  check_sizes(angles, out);
  table_for(backend).s_batch(state.amplitudes().data(), angles, out.data());
}

void s_batch(const SpinState& state, const AngleColumns& angles, std::span<double> out) {
  s_batch(best_backend(), state, angles, out);
}

void s_singlet_closed_batch(Backend backend, const AngleColumns& angles, std::span<double> out) {
  check_sizes(angles, out);
  table_for(backend).singlet_closed(angles, out.data());
}

void s_singlet_closed_batch(const AngleColumns& angles, std::span<double> out) {
  s_singlet_closed_batch(best_backend(), angles, out);
}

void s_product_closed_batch(Backend backend, const AngleColumns& angles, std::span<double> out) {
  check_sizes(angles, out);
  table_for(backend).product_closed(angles, out.data());
}

void s_product_closed_batch(const AngleColumns& angles, std::span<double> out) {
  s_product_closed_batch(best_backend(), angles, out);
}

void sincos_batch(Backend backend, std::span<const double> x, std::span<double> sin_out,
                  std::span<double> cos_out) {
  if (sin_out.size() != x.size() || cos_out.size() != x.size()) {
    throw std::invalid_argument("sincos_batch output spans must match the input length");
  }
  table_for(backend).sincos(x.data(), x.size(), sin_out.data(), cos_out.data());
}

}  // namespace spin1bell::kernels
