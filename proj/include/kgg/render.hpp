#pragma once

#include <string>
#include <vector>

#include "kgg/geom.hpp"
#include "kgg/graph.hpp"
#include "kgg/partition_mst.hpp"

namespace kgg {

struct Scene {
  PointSet points;
  std::vector<std::string> labels;
  PointSet blockers;
  std::vector<Edge> edges;
  std::vector<Edge> highlighted;  ///< drawn over edges, e.g. a matching
  std::vector<Disk> disks;
};

struct RenderOptions {
  int size = 800;
  int margin = 40;
};

/// SVG document with a fixed viewport; identical scenes give identical bytes.
std::string render_svg(const Scene& scene, const RenderOptions& options = {});

}  // namespace kgg
