#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgg/geom.hpp"

namespace kgg {

/// Contents of a point file: one "x y [label=NAME]" per line, '#' comments.
struct PointFile {
  PointSet points;
  std::vector<std::string> labels;  ///< parallel to points; empty = unlabeled
};

/// Throws ParseError naming the offending line.
PointFile parse_points(std::string_view text);

/// Canonical form: shortest round-trip decimal for each coordinate.
std::string format_points(std::span<const Point> points, std::span<const std::string> labels = {});

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

/// Reads a point file, or a JSON document carrying the points either as a
/// graph ("vertices") or as a verification report ("counterexample").
PointFile read_points(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace kgg
