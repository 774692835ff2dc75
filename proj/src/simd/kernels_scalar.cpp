#include <algorithm>

#include "kgg/simd/kernels.hpp"

namespace kgg::simd::scalar {

std::size_t count_closed_diameter(const double* xs, const double* ys, std::size_t n, double ax,
                                  double ay, double bx, double by, double tau) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = 2.0 * ((ax - xs[i]) * (bx - xs[i]) + (ay - ys[i]) * (by - ys[i]));
    count += d <= tau;
  }
  return count;
}

std::size_t count_open_lune(const double* xs, const double* ys, std::size_t n, double px,
                            double py, double qx, double qy, double tau) {
  const double ex = px - qx;
  const double ey = py - qy;
  const double pq2 = ex * ex + ey * ey;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dpx = px - xs[i];
    const double dpy = py - ys[i];
    const double dqx = qx - xs[i];
    const double dqy = qy - ys[i];
    const double pr2 = dpx * dpx + dpy * dpy;
    const double qr2 = dqx * dqx + dqy * dqy;
    count += pq2 - std::max(pr2, qr2) > tau;
  }
  return count;
}

std::size_t count_affine_below(const double* base, const double* slope, std::size_t n, double t,
                               double tau) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    count += base[i] + t * slope[i] < -tau;
  }
  return count;
}

std::size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 std::size_t n, double x, double y, double tau) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x - cx[i];
    const double dy = y - cy[i];
    count += dx * dx + dy * dy - r2[i] <= tau;
  }
  return count;
}

}  // namespace kgg::simd::scalar
