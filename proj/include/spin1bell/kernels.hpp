#pragma once

// Batched S evaluation. Each kernel has a scalar reference implementation and
// SIMD variants (AVX2+FMA on x86-64, NEON on AArch64) picked at runtime from
// what the CPU supports. All variants agree with the scalar path to 1e-12.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "spin1bell/bell_functional.hpp"
#include "spin1bell/spin_core.hpp"

namespace spin1bell::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend backend);

/// Backends compiled in and supported by the running CPU. Always contains scalar.
std::vector<Backend> available_backends();
bool is_available(Backend backend);

/// Widest available backend; fixed for the lifetime of the process.
Backend best_backend();

/// Structure-of-arrays view over angle configurations, in radians.
struct AngleColumns {
  std::span<const double> beta1;
  std::span<const double> beta1_prime;
  std::span<const double> beta2;
  std::span<const double> beta2_prime;

  std::size_t size() const { return beta1.size(); }
};

/// Owning structure-of-arrays buffer of angle configurations.
class AngleBatch {
 public:
  AngleBatch() = default;
  explicit AngleBatch(std::span<const AngleConfig> configs);

  void reserve(std::size_t n);
  void push_back(const AngleConfig& config);
  void clear();

  std::size_t size() const { return beta1_.size(); }
  AngleConfig config(std::size_t i) const;
  AngleColumns columns() const { return {beta1_, beta1_prime_, beta2_, beta2_prime_}; }

 private:
  std::vector<double> beta1_;
  std::vector<double> beta1_prime_;
  std::vector<double> beta2_;
  std::vector<double> beta2_prime_;
};

/// S (table path) for one state at every configuration. out.size() must equal
/// angles.size(); throws std::invalid_argument otherwise or if the backend is
/// unavailable.
void s_batch(Backend backend, const SpinState& state, const AngleColumns& angles,
             std::span<double> out);
void s_batch(const SpinState& state, const AngleColumns& angles, std::span<double> out);

void s_singlet_closed_batch(Backend backend, const AngleColumns& angles, std::span<double> out);
void s_singlet_closed_batch(const AngleColumns& angles, std::span<double> out);

void s_product_closed_batch(Backend backend, const AngleColumns& angles, std::span<double> out);
void s_product_closed_batch(const AngleColumns& angles, std::span<double> out);

/// Elementwise sin and cos; exposed so the vector trig can be checked directly.
void sincos_batch(Backend backend, std::span<const double> x, std::span<double> sin_out,
                  std::span<double> cos_out);

}  // namespace spin1bell::kernels
