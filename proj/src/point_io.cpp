#include "kgg/point_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kgg/error.hpp"

namespace kgg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

double parse_coordinate(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(token) +
                     "' is not a finite number");
  }
  return value;
}

}  // namespace

PointFile parse_points(std::string_view text) {
  PointFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x y [label=NAME]'");
    }
    if (tokens.size() > 3) {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing tokens");
    }
    const Point p{parse_coordinate(tokens[0], line_no), parse_coordinate(tokens[1], line_no)};
    std::string label;
    if (tokens.size() == 3) {
      constexpr std::string_view prefix = "label=";
      if (tokens[2].substr(0, prefix.size()) != prefix || tokens[2].size() == prefix.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": third field must be label=NAME");
      }
      label = std::string(tokens[2].substr(prefix.size()));
    }
    file.points.push_back(p);
    file.labels.push_back(std::move(label));
  }
  return file;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw InvalidArgument("cannot format number");
  return std::string(buf.data(), end);
}

std::string format_points(std::span<const Point> points, std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += format_double(points[i].x);
    out += ' ';
    out += format_double(points[i].y);
    if (i < labels.size() && !labels[i].empty()) {
      out += " label=";
      out += labels[i];
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << contents;
}

PointFile read_points(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return parse_points(text);

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
  PointFile file;
  try {
    if (doc.contains("vertices")) {
      for (const auto& v : doc.at("vertices")) {
        file.points.push_back({v.at("x").get<double>(), v.at("y").get<double>()});
        file.labels.push_back(v.value("label", std::string{}));
      }
    } else if (doc.contains("counterexample") && doc["counterexample"].is_object()) {
      for (const auto& p : doc["counterexample"].at("points")) {
        file.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        file.labels.emplace_back();
      }
    } else {
      throw ParseError("'" + path.string() + "': JSON has neither vertices nor a counterexample");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
  return file;
}

}  // namespace kgg
