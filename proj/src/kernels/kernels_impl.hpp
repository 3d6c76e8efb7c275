#pragma once

#include "betalab/kernels.hpp"

namespace betalab::kernels::detail {

KernelTable make_scalar_table() noexcept;

#if defined(BETALAB_HAVE_AVX2)
KernelTable make_avx2_table() noexcept;
#endif

#if defined(BETALAB_HAVE_NEON)
KernelTable make_neon_table() noexcept;
#endif

}  // namespace betalab::kernels::detail
