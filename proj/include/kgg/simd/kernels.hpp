#pragma once

// Counting kernels behind the proximity and disk-depth predicates. Each kernel
// has a scalar reference and vector variants (AVX2 on x86-64, NEON on
// AArch64); the variant is chosen at runtime from CPU features. All variants
// evaluate the same expression tree in the same order without fused
// multiply-add, so they return identical counts on identical input.

#include <cstddef>
#include <span>
#include <string_view>

#include "kgg/geom.hpp"

namespace kgg::simd {

/// Structure-of-arrays view over point coordinates.
struct Coords {
  std::span<const double> x;
  std::span<const double> y;

  std::size_t size() const { return x.size(); }
};

/// Structure-of-arrays view over closed disks (center, squared radius).
struct Disks {
  std::span<const double> cx;
  std::span<const double> cy;
  std::span<const double> r2;

  std::size_t size() const { return cx.size(); }
};

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

/// Backend used by the dispatching entry points below. Selected from CPU
/// features on first use; KGG_SIMD=scalar|avx2|neon overrides.
Backend active_backend();

/// Pins the dispatch to a backend (tests, benchmarking). Throws
/// InvalidArgument if the backend is not available on this machine.
void force_backend(Backend b);

/// Number of r with 2 (a-r).(b-r) <= tau, i.e. in the closed disk D[a,b].
/// Points equal to a or b evaluate to exactly 0 and are counted.
std::size_t count_closed_diameter(Coords pts, Point a, Point b, double tau);

/// Number of r with |pq|^2 - max(|pr|^2, |qr|^2) > tau (open lune).
std::size_t count_open_lune(Coords pts, Point p, Point q, double tau);

/// Number of i with base[i] + t * slope[i] < -tau.
std::size_t count_affine_below(std::span<const double> base, std::span<const double> slope,
                               double t, double tau);

/// Number of disks with |x - c|^2 - r^2 <= tau.
std::size_t count_disks_covering(Disks disks, Point x, double tau);

// Per-backend entry points, exposed for equivalence testing.
namespace scalar {
std::size_t count_closed_diameter(const double* xs, const double* ys, std::size_t n, double ax,
                                  double ay, double bx, double by, double tau);
std::size_t count_open_lune(const double* xs, const double* ys, std::size_t n, double px,
                            double py, double qx, double qy, double tau);
std::size_t count_affine_below(const double* base, const double* slope, std::size_t n, double t,
                               double tau);
std::size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 std::size_t n, double x, double y, double tau);
}  // namespace scalar

namespace avx2 {
std::size_t count_closed_diameter(const double* xs, const double* ys, std::size_t n, double ax,
                                  double ay, double bx, double by, double tau);
std::size_t count_open_lune(const double* xs, const double* ys, std::size_t n, double px,
                            double py, double qx, double qy, double tau);
std::size_t count_affine_below(const double* base, const double* slope, std::size_t n, double t,
                               double tau);
std::size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 std::size_t n, double x, double y, double tau);
}  // namespace avx2

namespace neon {
std::size_t count_closed_diameter(const double* xs, const double* ys, std::size_t n, double ax,
                                  double ay, double bx, double by, double tau);
std::size_t count_open_lune(const double* xs, const double* ys, std::size_t n, double px,
                            double py, double qx, double qy, double tau);
std::size_t count_affine_below(const double* base, const double* slope, std::size_t n, double t,
                               double tau);
std::size_t count_disks_covering(const double* cx, const double* cy, const double* r2,
                                 std::size_t n, double x, double y, double tau);
}  // namespace neon

}  // namespace kgg::simd
