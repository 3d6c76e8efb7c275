#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace betalab::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table = detail::make_scalar_table();
  return table;
}

namespace {

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(BETALAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(BETALAB_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

}  // namespace

std::optional<KernelTable> kernels_for(Isa isa) noexcept {
  if (!cpu_supports(isa)) return std::nullopt;
  switch (isa) {
    case Isa::Scalar:
      return scalar_kernels();
#if defined(BETALAB_HAVE_AVX2)
    case Isa::Avx2:
      return detail::make_avx2_table();
#endif
#if defined(BETALAB_HAVE_NEON)
    case Isa::Neon:
      return detail::make_neon_table();
#endif
    default:
      return std::nullopt;
  }
}

Isa detect_isa() noexcept {
  if (const char* forced = std::getenv("BETALAB_ISA")) {
    const std::string_view name{forced};
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && cpu_supports(isa)) return isa;
    }
  }
  if (cpu_supports(Isa::Avx2)) return Isa::Avx2;
  if (cpu_supports(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& active() noexcept {
  static const KernelTable table = *kernels_for(detect_isa());
  return table;
}

}  // namespace betalab::kernels
