// Compiled with -mavx2 only; the dispatcher never calls into this file unless
// the CPU reports AVX2.

#include <immintrin.h>

#include <bit>

#include "kgg/simd/kernels.hpp"

namespace kgg::simd::avx2 {

namespace {

inline std::size_t lanes_set(__m256d mask) {
  return static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(mask))));
}

}  // namespace

std::size_t count_closed_diameter(const double* xs, const double* ys, std::size_t n, double ax,
                                  double ay, double bx, double by, double tau) {
  const __m256d vax = _mm256_set1_pd(ax);
  const __m256d vay = _mm256_set1_pd(ay);
  const __m256d vbx = _mm256_set1_pd(bx);
  const __m256d vby = _mm256_set1_pd(by);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d vtau = _mm256_set1_pd(tau);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d px = _mm256_mul_pd(_mm256_sub_pd(vax, x), _mm256_sub_pd(vbx, x));
    const __m256d py = _mm256_mul_pd(_mm256_sub_pd(vay, y), _mm256_sub_pd(vby, y));
    const __m256d d = _mm256_mul_pd(two, _mm256_add_pd(px, py));
    count += lanes_set(_mm256_cmp_pd(d, vtau, _CMP_LE_OQ));
  }
  return count + scalar::count_closed_diameter(xs + i, ys + i, n - i, ax, ay, bx, by, tau);
}

std::size_t count_open_lune(const double* xs, const double* ys, std::size_t n, double px,
                            double py, double qx, double qy, double tau) {
  const double ex = px - qx;
  const double ey = py - qy;
  const __m256d vpq2 = _mm256_set1_pd(ex * ex + ey * ey);
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d vqx = _mm256_set1_pd(qx);
  const __m256d vqy = _mm256_set1_pd(qy);
  const __m256d vtau = _mm256_set1_pd(tau);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d dpx = _mm256_sub_pd(vpx, x);
    const __m256d dpy = _mm256_sub_pd(vpy, y);
    const __m256d dqx = _mm256_sub_pd(vqx, x);
    const __m256d dqy = _mm256_sub_pd(vqy, y);
    const __m256d pr2 = _mm256_add_pd(_mm256_mul_pd(dpx, dpx), _mm256_mul_pd(dpy, dpy));
    const __m256d qr2 = _mm256_add_pd(_mm256_mul_pd(dqx, dqx), _mm256_mul_pd(dqy, dqy));
    const __m256d slack = _mm256_sub_pd(vpq2, _mm256_max_pd(pr2, qr2));
    count += lanes_set(_mm256_cmp_pd(slack, vtau, _CMP_GT_OQ));
  }
  return count + scalar::count_open_lune(xs + i, ys + i, n - i, px, py, qx, qy, tau);
}

std::size_t count_affine_below(const double* base, const double* slope, std::size_t n, double t,
                               double tau) {
  const __m256d vt = _mm256_set1_pd(t);
  const __m256d vneg = _mm256_set1_pd(-tau);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v =
        _mm256_add_pd(_mm256_loadu_pd(base + i), _mm256_mul_pd(vt, _mm256_loadu_pd(slope + i)));
    count += lanes_set(_mm256_cmp_pd(v, vneg, _CMP_LT_OQ));
  }
  return count + scalar::count_affine_below(base + i, slope + i, n - i, t, tau);
}

std::size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 std::size_t n, double x, double y, double tau) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d vtau = _mm256_set1_pd(tau);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(vx, _mm256_loadu_pd(cx + i));
    const __m256d dy = _mm256_sub_pd(vy, _mm256_loadu_pd(cy + i));
    const __m256d v = _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                    _mm256_loadu_pd(r2 + i));
    count += lanes_set(_mm256_cmp_pd(v, vtau, _CMP_LE_OQ));
  }
  return count + scalar::count_disks_covering(cx + i, cy + i, r2 + i, n - i, x, y, tau);
}

}  // namespace kgg::simd::avx2
