// Compiled with -mavx2 (no -mfma); only reached after a CPUID check.
#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <limits>

#include "kernels_impl.hpp"

namespace betalab::kernels::detail {
namespace {

constexpr std::size_t kLanes = 4;

void add_sub(std::span<const double> a, std::span<const double> b,
             std::span<const double> c, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d sum = _mm256_add_pd(_mm256_loadu_pd(a.data() + i),
                                      _mm256_loadu_pd(b.data() + i));
    _mm256_storeu_pd(out.data() + i,
                     _mm256_sub_pd(sum, _mm256_loadu_pd(c.data() + i)));
  }
  for (; i < n; ++i) out[i] = (a[i] + b[i]) - c[i];
}

void sub_sub(std::span<const double> a, std::span<const double> b,
             std::span<const double> c, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i),
                                       _mm256_loadu_pd(b.data() + i));
    _mm256_storeu_pd(out.data() + i,
                     _mm256_sub_pd(diff, _mm256_loadu_pd(c.data() + i)));
  }
  for (; i < n; ++i) out[i] = (a[i] - b[i]) - c[i];
}

void sub_scaled(std::span<const double> a, double s, std::span<const double> b,
                std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d prod = _mm256_mul_pd(vs, _mm256_loadu_pd(b.data() + i));
    _mm256_storeu_pd(out.data() + i,
                     _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), prod));
  }
  for (; i < n; ++i) out[i] = a[i] - s * b[i];
}

void affine2(double c0, double c1, std::span<const double> u, double c2,
             std::span<const double> v, std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d v0 = _mm256_set1_pd(c0);
  const __m256d v1 = _mm256_set1_pd(c1);
  const __m256d v2 = _mm256_set1_pd(c2);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d head =
        _mm256_add_pd(v0, _mm256_mul_pd(v1, _mm256_loadu_pd(u.data() + i)));
    const __m256d tail = _mm256_mul_pd(v2, _mm256_loadu_pd(v.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(head, tail));
  }
  for (; i < n; ++i) out[i] = (c0 + c1 * u[i]) + c2 * v[i];
}

double max_abs(std::span<const double> a) {
  const std::size_t n = a.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  __m256d nan_seen = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(a.data() + i);
    nan_seen = _mm256_or_pd(nan_seen, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, x));
  }
  if (_mm256_movemask_pd(nan_seen) != 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  alignas(32) double lanes[kLanes];
  _mm256_store_pd(lanes, acc);
  double m = 0.0;
  for (double lane : lanes) m = lane > m ? lane : m;
  for (; i < n; ++i) {
    if (std::isnan(a[i])) return a[i];
    const double mag = std::fabs(a[i]);
    if (mag > m) m = mag;
  }
  return m;
}

}  // namespace

KernelTable make_avx2_table() noexcept {
  return KernelTable{Isa::Avx2, add_sub, sub_sub, sub_scaled, affine2, max_abs};
}

}  // namespace betalab::kernels::detail
