#include <doctest.h>

#include <cstdlib>
#include <limits>

#include "kgg/error.hpp"
#include "kgg/geom.hpp"

using namespace kgg;

TEST_CASE("dist2") {
  CHECK(dist2({0, 0}, {0, 0}) == 0.0);
  CHECK(dist2({0, 0}, {3, 4}) == 25.0);
  CHECK(dist2({1, 1}, {-2, 5}) == 25.0);
}

TEST_CASE("disk membership on the (0,0)-(2,0) disk") {
  const Point a{0, 0};
  const Point b{2, 0};
  CHECK(disk_membership(a, b, {1, 0}) == DiskMembership::Inside);
  CHECK(disk_membership(a, b, {1, 1}) == DiskMembership::Boundary);
  CHECK(disk_membership(a, b, {3, 3}) == DiskMembership::Outside);
  CHECK(diameter_discriminant(a, b, {3, 3}) == 24.0);
  CHECK(counts_as_contained(DiskMembership::Boundary));
  CHECK(counts_as_contained(DiskMembership::Inside));
  CHECK_FALSE(counts_as_contained(DiskMembership::Outside));
  // endpoints sit on the circle
  CHECK(disk_membership(a, b, a) == DiskMembership::Boundary);
}

TEST_CASE("tolerance band") {
  const Point a{0, 0};
  const Point b{2, 0};
  // d = 2 (1 + h)^2 ... evaluate a point just outside the circle
  const Point r{1, 1 + 1e-12};
  CHECK(disk_membership(a, b, r) == DiskMembership::Boundary);
  CHECK(disk_membership(a, b, r, TolerancePolicy{0.0}) == DiskMembership::Outside);
  CHECK(disk_membership(a, b, {1, 1 + 1e-3}) == DiskMembership::Outside);
}

TEST_CASE("degenerate diameter") {
  CHECK_THROWS_AS(disk_membership({1, 1}, {1, 1}, {0, 0}), DegenerateDiameter);
  CHECK_THROWS_AS(disk_membership({1, 1}, {1, 1 + 1e-10}, {0, 0}), DegenerateDiameter);
  CHECK_NOTHROW(disk_membership({1, 1}, {1, 1 + 1e-6}, {0, 0}));
}

TEST_CASE("translation keeps the class for representable coordinates") {
  const Point a{0, 0};
  const Point b{4, 0};
  const Point rs[] = {{2, 2}, {2, 1}, {5, 1}, {0, 2}, {3, -3}};
  for (const Point r : rs) {
    const auto base = disk_membership(a, b, r);
    for (const double t : {-8.0, 16.0, 1024.0}) {
      CHECK(disk_membership({a.x + t, a.y - t}, {b.x + t, b.y - t}, {r.x + t, r.y - t}) == base);
    }
  }
}

TEST_CASE("scaling keeps strict classes") {
  const Point a{0.1, 0.3};
  const Point b{0.7, -0.2};
  const Point rs[] = {{0.4, 0.05}, {1.0, 1.0}, {0.2, 0.4}, {-0.3, 0.0}};
  for (const Point r : rs) {
    const auto base = disk_membership(a, b, r);
    REQUIRE(base != DiskMembership::Boundary);
    for (const double s : {2.0, 10.0, 1e3}) {
      CHECK(disk_membership({a.x * s, a.y * s}, {b.x * s, b.y * s}, {r.x * s, r.y * s}) == base);
    }
  }
}

TEST_CASE("tolerance policy") {
  CHECK_THROWS_AS(validate(TolerancePolicy{-1.0}), InvalidArgument);
  CHECK_NOTHROW(validate(TolerancePolicy{0.0}));
  ::setenv("KGG_TAU", "1e-6", 1);
  CHECK(TolerancePolicy::from_env().tau == 1e-6);
  ::unsetenv("KGG_TAU");
  CHECK(TolerancePolicy::from_env().tau == 1e-9);
}

TEST_CASE("validate_points") {
  const PointSet ok{{0, 0}, {1, 0}, {0, 1}};
  CHECK_NOTHROW(validate_points(ok, {}));
  const PointSet dup{{0, 0}, {1, 0}, {0, 1e-12}};
  CHECK_THROWS_AS(validate_points(dup, {}), DuplicatePoints);
  const PointSet bad{{0, 0}, {std::numeric_limits<double>::quiet_NaN(), 0}};
  CHECK_THROWS_AS(validate_points(bad, {}), InvalidArgument);
}

TEST_CASE("orientation and crossing") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 0}, {0, -1}) == -1);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(segments_properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_properly_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
  CHECK_FALSE(segments_properly_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
}

TEST_CASE("weight sequence order") {
  auto ws = [](std::vector<double> v) { return WeightSequence(std::move(v)); };
  CHECK(compare_ws(ws({3, 1}), ws({3, 2})) == std::weak_ordering::less);
  CHECK(compare_ws(ws({5}), ws({5})) == std::weak_ordering::equivalent);
  CHECK(compare_ws(ws({2, 2}), ws({3})) == std::weak_ordering::less);
  CHECK(compare_ws(ws({3}), ws({3, 1})) == std::weak_ordering::less);
  CHECK(ws({1, 3, 2}).weights() == std::vector<double>{3, 2, 1});
  CHECK(ws({1, 3, 2}).front() == 3);
}
