#include "kgg/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace kgg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderOptions& options) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto extend = [&](Point p, double r) {
    lo_x = std::min(lo_x, p.x - r);
    lo_y = std::min(lo_y, p.y - r);
    hi_x = std::max(hi_x, p.x + r);
    hi_y = std::max(hi_y, p.y + r);
  };
  for (const Point& p : scene.points) extend(p, 0.0);
  for (const Point& p : scene.blockers) extend(p, 0.0);
  for (const Disk& d : scene.disks) extend(d.center, std::sqrt(d.radius2));
  if (!(lo_x <= hi_x)) lo_x = lo_y = 0.0, hi_x = hi_y = 1.0;

  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double inner = options.size - 2.0 * options.margin;
  const double scale = inner / span;
  const double off_x = options.margin + (inner - (hi_x - lo_x) * scale) / 2.0;
  const double off_y = options.margin + (inner - (hi_y - lo_y) * scale) / 2.0;
  auto sx = [&](double x) { return num(off_x + (x - lo_x) * scale); };
  auto sy = [&](double y) { return num(options.size - (off_y + (y - lo_y) * scale)); };

  const std::string size = std::to_string(options.size);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out += "<g fill=\"#3b82f6\" fill-opacity=\"0.12\" stroke=\"#3b82f6\" stroke-width=\"1\">\n";
  for (const Disk& d : scene.disks) {
    out += "<circle cx=\"" + sx(d.center.x) + "\" cy=\"" + sy(d.center.y) + "\" r=\"" +
           num(std::sqrt(d.radius2) * scale) + "\"/>\n";
  }
  out += "</g>\n";

  auto segment = [&](Edge e) {
    const Point& a = scene.points[static_cast<std::size_t>(e.u)];
    const Point& b = scene.points[static_cast<std::size_t>(e.v)];
    return "<line x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) + "\" x2=\"" + sx(b.x) + "\" y2=\"" +
           sy(b.y) + "\"/>\n";
  };
  out += "<g stroke=\"#555\" stroke-width=\"1.5\">\n";
  for (Edge e : scene.edges) out += segment(e);
  out += "</g>\n";
  out += "<g stroke=\"#dc2626\" stroke-width=\"3\">\n";
  for (Edge e : scene.highlighted) out += segment(e);
  out += "</g>\n";

  out += "<g fill=\"black\">\n";
  for (const Point& p : scene.points) {
    out += "<circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"4\"/>\n";
  }
  out += "</g>\n";
  out += "<g fill=\"#f59e0b\" stroke=\"black\" stroke-width=\"0.5\">\n";
  for (const Point& p : scene.blockers) {
    const double px = off_x + (p.x - lo_x) * scale;
    const double py = options.size - (off_y + (p.y - lo_y) * scale);
    out += "<rect x=\"" + num(px - 3) + "\" y=\"" + num(py - 3) +
           "\" width=\"6\" height=\"6\"/>\n";
  }
  out += "</g>\n";

  out += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < scene.labels.size() && i < scene.points.size(); ++i) {
    if (scene.labels[i].empty()) continue;
    const Point& p = scene.points[i];
    out += "<text x=\"" + num(off_x + (p.x - lo_x) * scale + 6) + "\" y=\"" +
           num(options.size - (off_y + (p.y - lo_y) * scale) - 6) + "\">" +
           escape(scene.labels[i]) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace kgg
