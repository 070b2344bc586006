#pragma once

#include <cstddef>

#include "spin1bell/kernels.hpp"

namespace spin1bell::kernels::detail {

// Per-backend entry points. Sizes are validated by the dispatcher; `state`
// points at 9 interleaved complex amplitudes.
struct KernelTable {
  void (*s_batch)(const Complex* state, const AngleColumns& angles, double* out);
  void (*singlet_closed)(const AngleColumns& angles, double* out);
  void (*product_closed)(const AngleColumns& angles, double* out);
  void (*sincos)(const double* x, std::size_t n, double* sin_out, double* cos_out);
};

const KernelTable& scalar_table();

// nullptr when the backend was not compiled into this build.
const KernelTable* avx2_table();
const KernelTable* neon_table();

}  // namespace spin1bell::kernels::detail
