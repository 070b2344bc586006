#include "kernel_table.hpp"

#if defined(SPIN1BELL_HAVE_AVX2)

#include "ops_avx2.hpp"
#include "vec_math.hpp"

namespace spin1bell::kernels::detail {

const KernelTable* avx2_table() { return &VecMath<Avx2Ops>::table(); }

}  // namespace spin1bell::kernels::detail

#else

namespace spin1bell::kernels::detail {

const KernelTable* avx2_table() { return nullptr; }

}  // namespace spin1bell::kernels::detail

#endif
