#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "kgg/error.hpp"
#include "kgg/simd/kernels.hpp"

namespace kgg::simd {

#if !defined(KGG_HAVE_AVX2)
namespace avx2 {
// Unreachable: backend_available(Avx2) is false on this build.
std::size_t count_closed_diameter(const double*, const double*, std::size_t, double, double,
                                  double, double, double) { std::abort(); }
std::size_t count_open_lune(const double*, const double*, std::size_t, double, double, double,
                            double, double) { std::abort(); }
std::size_t count_affine_below(const double*, const double*, std::size_t, double, double) {
  std::abort();
}
std::size_t count_disks_covering(const double*, const double*, const double*, std::size_t, double,
                                 double, double) { std::abort(); }
}  // namespace avx2
#endif

#if !defined(KGG_HAVE_NEON)
namespace neon {
std::size_t count_closed_diameter(const double*, const double*, std::size_t, double, double,
                                  double, double, double) { std::abort(); }
std::size_t count_open_lune(const double*, const double*, std::size_t, double, double, double,
                            double, double) { std::abort(); }
std::size_t count_affine_below(const double*, const double*, std::size_t, double, double) {
  std::abort();
}
std::size_t count_disks_covering(const double*, const double*, const double*, std::size_t, double,
                                 double, double) { std::abort(); }
}  // namespace neon
#endif

namespace {

bool cpu_has_avx2() {
#if defined(KGG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("KGG_SIMD")) {
    const std::string want = env;
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
    if (want == "neon" && backend_available(Backend::Neon)) return Backend::Neon;
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return cpu_has_avx2();
    case Backend::Neon:
#if defined(KGG_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (!backend_available(b)) {
    throw InvalidArgument("SIMD backend '" + std::string(backend_name(b)) + "' is not available");
  }
  current().store(b, std::memory_order_relaxed);
}

std::size_t count_closed_diameter(Coords pts, Point a, Point b, double tau) {
  const auto n = pts.size();
  switch (active_backend()) {
    case Backend::Avx2:
      return avx2::count_closed_diameter(pts.x.data(), pts.y.data(), n, a.x, a.y, b.x, b.y, tau);
    case Backend::Neon:
      return neon::count_closed_diameter(pts.x.data(), pts.y.data(), n, a.x, a.y, b.x, b.y, tau);
    case Backend::Scalar: break;
  }
  return scalar::count_closed_diameter(pts.x.data(), pts.y.data(), n, a.x, a.y, b.x, b.y, tau);
}

std::size_t count_open_lune(Coords pts, Point p, Point q, double tau) {
  const auto n = pts.size();
  switch (active_backend()) {
    case Backend::Avx2:
      return avx2::count_open_lune(pts.x.data(), pts.y.data(), n, p.x, p.y, q.x, q.y, tau);
    case Backend::Neon:
      return neon::count_open_lune(pts.x.data(), pts.y.data(), n, p.x, p.y, q.x, q.y, tau);
    case Backend::Scalar: break;
  }
  return scalar::count_open_lune(pts.x.data(), pts.y.data(), n, p.x, p.y, q.x, q.y, tau);
}

std::size_t count_affine_below(std::span<const double> base, std::span<const double> slope,
                               double t, double tau) {
  const auto n = std::min(base.size(), slope.size());
  switch (active_backend()) {
    case Backend::Avx2: return avx2::count_affine_below(base.data(), slope.data(), n, t, tau);
    case Backend::Neon: return neon::count_affine_below(base.data(), slope.data(), n, t, tau);
    case Backend::Scalar: break;
  }
  return scalar::count_affine_below(base.data(), slope.data(), n, t, tau);
}

std::size_t count_disks_covering(Disks disks, Point x, double tau) {
  const auto n = disks.size();
  switch (active_backend()) {
    case Backend::Avx2:
      return avx2::count_disks_covering(disks.cx.data(), disks.cy.data(), disks.r2.data(), n, x.x,
                                        x.y, tau);
    case Backend::Neon:
      return neon::count_disks_covering(disks.cx.data(), disks.cy.data(), disks.r2.data(), n, x.x,
                                        x.y, tau);
    case Backend::Scalar: break;
  }
  return scalar::count_disks_covering(disks.cx.data(), disks.cy.data(), disks.r2.data(), n, x.x,
                                      x.y, tau);
}

}  // namespace kgg::simd
