#pragma once

#include <span>
#include <vector>

#include "kgg/geom.hpp"
#include "kgg/simd/kernels.hpp"

namespace kgg::detail {

// Owning structure-of-arrays copy of a point set, fed to the SIMD kernels.
class SoaPoints {
 public:
  explicit SoaPoints(std::span<const Point> pts) {
    xs_.reserve(pts.size());
    ys_.reserve(pts.size());
    for (const Point& p : pts) {
      xs_.push_back(p.x);
      ys_.push_back(p.y);
    }
  }

  simd::Coords view() const { return {xs_, ys_}; }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

}  // namespace kgg::detail
