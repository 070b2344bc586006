#pragma once

// Two-lane double wrappers over AArch64 Advanced SIMD.

#include <arm_neon.h>

#include <cstddef>

namespace spin1bell::kernels::detail {
namespace {

struct NeonOps {
  using V = float64x2_t;
  using M = uint64x2_t;
  static constexpr std::size_t kLanes = 2;

  static V load(const double* p) { return vld1q_f64(p); }
  static void store(double* p, V v) { vst1q_f64(p, v); }
  static V set1(double x) { return vdupq_n_f64(x); }
  static V add(V a, V b) { return vaddq_f64(a, b); }
  static V sub(V a, V b) { return vsubq_f64(a, b); }
  static V mul(V a, V b) { return vmulq_f64(a, b); }
  static V fma(V a, V b, V c) { return vfmaq_f64(c, a, b); }
  static V fnma(V a, V b, V c) { return vfmsq_f64(c, a, b); }
  static V round_nearest(V a) { return vrndnq_f64(a); }
  static V floor(V a) { return vrndmq_f64(a); }
  static V min(V a, V b) { return vminq_f64(a, b); }
  static V neg(V a) { return vnegq_f64(a); }
  static M eq(V a, V b) { return vceqq_f64(a, b); }
  static M lor(M a, M b) { return vorrq_u64(a, b); }
  static V select(M m, V a, V b) { return vbslq_f64(m, a, b); }
};

}  // namespace
}  // namespace spin1bell::kernels::detail
