#include <cmath>
#include <cstddef>

#include "kernels_impl.hpp"

namespace betalab::kernels::detail {
namespace {

void add_sub(std::span<const double> a, std::span<const double> b,
             std::span<const double> c, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) - c[i];
}

void sub_sub(std::span<const double> a, std::span<const double> b,
             std::span<const double> c, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] - b[i]) - c[i];
}

void sub_scaled(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - s * b[i];
}

void affine2(double c0, double c1, std::span<const double> u, double c2,
             std::span<const double> v, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (c0 + c1 * u[i]) + c2 * v[i];
  }
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double value : a) {
    if (std::isnan(value)) return value;
    const double mag = std::fabs(value);
    if (mag > m) m = mag;
  }
  return m;
}

}  // namespace

KernelTable make_scalar_table() noexcept {
  return KernelTable{Isa::Scalar, add_sub, sub_sub, sub_scaled, affine2, max_abs};
}

}  // namespace betalab::kernels::detail
