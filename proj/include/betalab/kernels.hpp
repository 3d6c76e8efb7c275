#pragma once

// Element-wise arithmetic used by the grid sweeps. Every kernel exists as a
// scalar reference and as vector variants; all variants perform the same IEEE
// operations in the same order (no FMA contraction), so results are
// bit-identical across ISAs. Input spans must have equal length.

#include <optional>
#include <span>
#include <string_view>

namespace betalab::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// out[i] = (a[i] + b[i]) - c[i]
  void (*add_sub)(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c, std::span<double> out);
  /// out[i] = (a[i] - b[i]) - c[i]
  void (*sub_sub)(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c, std::span<double> out);
  /// out[i] = a[i] - s * b[i]
  void (*sub_scaled)(std::span<const double> a, double s,
                     std::span<const double> b, std::span<double> out);
  /// out[i] = (c0 + c1 * u[i]) + c2 * v[i]
  void (*affine2)(double c0, double c1, std::span<const double> u, double c2,
                  std::span<const double> v, std::span<double> out);
  /// max_i |a[i]|; NaN if any element is NaN; 0 for an empty span.
  double (*max_abs)(std::span<const double> a);
};

const KernelTable& scalar_kernels() noexcept;

/// Variant table for `isa`, or nullopt when not compiled in or not supported
/// by the running CPU.
std::optional<KernelTable> kernels_for(Isa isa) noexcept;

/// Best available ISA on this machine, honoring BETALAB_ISA=scalar|avx2|neon.
Isa detect_isa() noexcept;

/// Table selected at first use (detect_isa()).
const KernelTable& active() noexcept;

}  // namespace betalab::kernels
