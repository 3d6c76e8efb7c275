#include <arm_neon.h>

#include <cmath>
#include <cstddef>
#include <limits>

#include "kernels_impl.hpp"

namespace betalab::kernels::detail {
namespace {

constexpr std::size_t kLanes = 2;

void add_sub(std::span<const double> a, std::span<const double> b,
             std::span<const double> c, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t sum = vaddq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    vst1q_f64(out.data() + i, vsubq_f64(sum, vld1q_f64(c.data() + i)));
  }
  for (; i < n; ++i) out[i] = (a[i] + b[i]) - c[i];
}

void sub_sub(std::span<const double> a, std::span<const double> b,
             std::span<const double> c, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t diff = vsubq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    vst1q_f64(out.data() + i, vsubq_f64(diff, vld1q_f64(c.data() + i)));
  }
  for (; i < n; ++i) out[i] = (a[i] - b[i]) - c[i];
}

void sub_scaled(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> out) {
  const std::size_t n = out.size();
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    // vmulq + vsubq, not vfmsq: keep the rounding of the scalar path
    const float64x2_t prod = vmulq_f64(vs, vld1q_f64(b.data() + i));
    vst1q_f64(out.data() + i, vsubq_f64(vld1q_f64(a.data() + i), prod));
  }
  for (; i < n; ++i) out[i] = a[i] - s * b[i];
}

void affine2(double c0, double c1, std::span<const double> u, double c2,
             std::span<const double> v, std::span<double> out) {
  const std::size_t n = out.size();
  const float64x2_t v0 = vdupq_n_f64(c0);
  const float64x2_t v1 = vdupq_n_f64(c1);
  const float64x2_t v2 = vdupq_n_f64(c2);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t head = vaddq_f64(v0, vmulq_f64(v1, vld1q_f64(u.data() + i)));
    const float64x2_t tail = vmulq_f64(v2, vld1q_f64(v.data() + i));
    vst1q_f64(out.data() + i, vaddq_f64(head, tail));
  }
  for (; i < n; ++i) out[i] = (c0 + c1 * u[i]) + c2 * v[i];
}

double max_abs(std::span<const double> a) {
  const std::size_t n = a.size();
  float64x2_t acc = vdupq_n_f64(0.0);
  uint64x2_t nan_seen = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t x = vld1q_f64(a.data() + i);
    const uint64x2_t ordered = vceqq_f64(x, x);
    nan_seen = vorrq_u64(nan_seen, vreinterpretq_u64_u32(vmvnq_u32(vreinterpretq_u32_u64(ordered))));
    acc = vmaxq_f64(acc, vabsq_f64(x));
  }
  if ((vgetq_lane_u64(nan_seen, 0) | vgetq_lane_u64(nan_seen, 1)) != 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) {
    if (std::isnan(a[i])) return a[i];
    const double mag = std::fabs(a[i]);
    if (mag > m) m = mag;
  }
  return m;
}

}  // namespace

KernelTable make_neon_table() noexcept {
  return KernelTable{Isa::Neon, add_sub, sub_sub, sub_scaled, affine2, max_abs};
}

}  // namespace betalab::kernels::detail
