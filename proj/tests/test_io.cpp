#include <doctest.h>

#include <filesystem>

#include "kgg/error.hpp"
#include "kgg/point_io.hpp"
#include "kgg/random.hpp"
#include "kgg/render.hpp"

using namespace kgg;

TEST_CASE("parse point files") {
  const PointFile f = parse_points("# header\n0 0\n  1.5 -2 label=b  # trailing\n\n3e2 +4\n");
  REQUIRE(f.points.size() == 3);
  CHECK(f.points[1] == Point{1.5, -2});
  CHECK(f.points[2] == Point{300, 4});
  CHECK(f.labels == std::vector<std::string>{"", "b", ""});
}

TEST_CASE("parse errors carry line numbers") {
  auto message = [](std::string_view text) {
    try {
      parse_points(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("0 0\n1 x\n") == "line 2: 'x' is not a finite number");
  CHECK(message("0 0\n\n5\n") == "line 3: expected 'x y [label=NAME]'");
  CHECK(message("0 0 name\n") == "line 1: third field must be label=NAME");
  CHECK(message("0 0 label=a b\n") == "line 1: unexpected trailing tokens");
  CHECK(message("inf 0\n").rfind("line 1:", 0) == 0);
}

TEST_CASE("canonical emission round-trips") {
  Rng rng(12);
  const PointSet pts = random_points(rng, 50, Distribution::Gaussian);
  std::vector<std::string> labels(pts.size());
  labels[3] = "p3";
  const std::string text = format_points(pts, labels);
  const PointFile back = parse_points(text);
  CHECK(back.points == pts);
  CHECK(back.labels == labels);
  CHECK(format_points(back.points, back.labels) == text);
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(1e-300) == "1e-300");
}

TEST_CASE("read JSON graph and report documents") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto graph = dir / "kgg_io_graph.json";
  write_file(graph, R"({"vertices":[{"id":0,"x":1.25,"y":2,"label":"a"},{"id":1,"x":-3,"y":0}]})");
  const PointFile g = read_points(graph);
  CHECK(g.points == PointSet{{1.25, 2}, {-3, 0}});
  CHECK(g.labels[0] == "a");
  const auto report = dir / "kgg_io_report.json";
  write_file(report, R"({"theorem":"x","counterexample":{"index":3,"points":[[0.5,1],[2,3]]}})");
  CHECK(read_points(report).points == PointSet{{0.5, 1}, {2, 3}});
  write_file(report, R"({"counterexample":null})");
  CHECK_THROWS_AS(read_points(report), ParseError);
  CHECK_THROWS_AS(read_points(dir / "kgg_io_missing.txt"), ParseError);
  std::filesystem::remove(graph);
  std::filesystem::remove(report);
}

TEST_CASE("generator is reproducible") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  // std::mt19937_64 is specified by the standard: the 10000th output from
  // the default seed is fixed
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const auto k = c.below(6);
    CHECK(k < 6);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 5) == derive_seed(1, 5));
}

TEST_CASE("random point sets") {
  for (Distribution d : {Distribution::Uniform, Distribution::Gaussian, Distribution::Clustered}) {
    Rng rng(3);
    const PointSet pts = random_points(rng, 30, d);
    CHECK(pts.size() == 30);
    CHECK_NOTHROW(validate_points(pts, {}));
    Rng again(3);
    CHECK(random_points(again, 30, d) == pts);
  }
  CHECK(parse_distribution("clustered") == Distribution::Clustered);
  CHECK(distribution_name(Distribution::Gaussian) == "gaussian");
  CHECK_THROWS_AS(parse_distribution("poisson"), InvalidArgument);
}

TEST_CASE("svg output") {
  Scene scene;
  scene.points = {{0, 0}, {1, 0}, {0.5, 1}};
  const std::string bare = render_svg(scene);
  CHECK(bare.find("<line") == std::string::npos);
  CHECK(bare.find("r=\"4\"") != std::string::npos);
  scene.edges = {{0, 1}};
  scene.highlighted = {{1, 2}};
  scene.blockers = {{0.5, 0.2}};
  scene.labels = {"a<", "", ""};
  scene.disks = {{{0.5, 0}, 0.25, {0, 0}, {1, 0}, {0, 1}}};
  const std::string full = render_svg(scene);
  CHECK(full == render_svg(scene));
  CHECK(full.find("<line") != std::string::npos);
  CHECK(full.find("<rect x=") != std::string::npos);
  CHECK(full.find("a&lt;") != std::string::npos);
  CHECK(full.rfind("<svg", 0) == 0);
  CHECK(render_svg(Scene{}).find("</svg>") != std::string::npos);
}
