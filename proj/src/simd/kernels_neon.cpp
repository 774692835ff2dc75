// AArch64 variant. Kept free of standard-library headers beyond <stddef.h> so it
// builds in freestanding syntax checks on non-ARM hosts.

#include <arm_neon.h>

#include <stddef.h>

namespace kgg::simd {

namespace scalar {
size_t count_closed_diameter(const double* xs, const double* ys, size_t n, double ax,
                                  double ay, double bx, double by, double tau);
size_t count_open_lune(const double* xs, const double* ys, size_t n, double px,
                            double py, double qx, double qy, double tau);
size_t count_affine_below(const double* base, const double* slope, size_t n, double t,
                               double tau);
size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 size_t n, double x, double y, double tau);
}  // namespace scalar

namespace neon {

namespace {

// Each set lane of a comparison mask is all ones; shifting by 63 leaves 1.
inline size_t lanes_set(uint64x2_t mask) {
  return static_cast<size_t>(vaddvq_u64(vshrq_n_u64(mask, 63)));
}

}  // namespace

size_t count_closed_diameter(const double* xs, const double* ys, size_t n, double ax,
                                  double ay, double bx, double by, double tau) {
  const float64x2_t vax = vdupq_n_f64(ax);
  const float64x2_t vay = vdupq_n_f64(ay);
  const float64x2_t vbx = vdupq_n_f64(bx);
  const float64x2_t vby = vdupq_n_f64(by);
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t vtau = vdupq_n_f64(tau);
  size_t count = 0;
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(xs + i);
    const float64x2_t y = vld1q_f64(ys + i);
    const float64x2_t px = vmulq_f64(vsubq_f64(vax, x), vsubq_f64(vbx, x));
    const float64x2_t py = vmulq_f64(vsubq_f64(vay, y), vsubq_f64(vby, y));
    const float64x2_t d = vmulq_f64(two, vaddq_f64(px, py));
    count += lanes_set(vcleq_f64(d, vtau));
  }
  return count + scalar::count_closed_diameter(xs + i, ys + i, n - i, ax, ay, bx, by, tau);
}

size_t count_open_lune(const double* xs, const double* ys, size_t n, double px,
                            double py, double qx, double qy, double tau) {
  const double ex = px - qx;
  const double ey = py - qy;
  const float64x2_t vpq2 = vdupq_n_f64(ex * ex + ey * ey);
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  const float64x2_t vqx = vdupq_n_f64(qx);
  const float64x2_t vqy = vdupq_n_f64(qy);
  const float64x2_t vtau = vdupq_n_f64(tau);
  size_t count = 0;
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(xs + i);
    const float64x2_t y = vld1q_f64(ys + i);
    const float64x2_t dpx = vsubq_f64(vpx, x);
    const float64x2_t dpy = vsubq_f64(vpy, y);
    const float64x2_t dqx = vsubq_f64(vqx, x);
    const float64x2_t dqy = vsubq_f64(vqy, y);
    const float64x2_t pr2 = vaddq_f64(vmulq_f64(dpx, dpx), vmulq_f64(dpy, dpy));
    const float64x2_t qr2 = vaddq_f64(vmulq_f64(dqx, dqx), vmulq_f64(dqy, dqy));
    const float64x2_t slack = vsubq_f64(vpq2, vmaxq_f64(pr2, qr2));
    count += lanes_set(vcgtq_f64(slack, vtau));
  }
  return count + scalar::count_open_lune(xs + i, ys + i, n - i, px, py, qx, qy, tau);
}

size_t count_affine_below(const double* base, const double* slope, size_t n, double t,
                               double tau) {
  const float64x2_t vt = vdupq_n_f64(t);
  const float64x2_t vneg = vdupq_n_f64(-tau);
  size_t count = 0;
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vaddq_f64(vld1q_f64(base + i), vmulq_f64(vt, vld1q_f64(slope + i)));
    count += lanes_set(vcltq_f64(v, vneg));
  }
  return count + scalar::count_affine_below(base + i, slope + i, n - i, t, tau);
}

size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 size_t n, double x, double y, double tau) {
  const float64x2_t vx = vdupq_n_f64(x);
  const float64x2_t vy = vdupq_n_f64(y);
  const float64x2_t vtau = vdupq_n_f64(tau);
  size_t count = 0;
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t dx = vsubq_f64(vx, vld1q_f64(cx + i));
    const float64x2_t dy = vsubq_f64(vy, vld1q_f64(cy + i));
    const float64x2_t v =
        vsubq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)), vld1q_f64(r2 + i));
    count += lanes_set(vcleq_f64(v, vtau));
  }
  return count + scalar::count_disks_covering(cx + i, cy + i, r2 + i, n - i, x, y, tau);
}

}  // namespace neon
}  // namespace kgg::simd
