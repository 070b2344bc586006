#include "kernel_table.hpp"

#if defined(SPIN1BELL_HAVE_NEON)

#include "ops_neon.hpp"
#include "vec_math.hpp"

namespace spin1bell::kernels::detail {

const KernelTable* neon_table() { return &VecMath<NeonOps>::table(); }

}  // namespace spin1bell::kernels::detail

#else

namespace spin1bell::kernels::detail {

const KernelTable* neon_table() { return nullptr; }

}  // namespace spin1bell::kernels::detail

#endif
