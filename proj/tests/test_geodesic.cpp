#include <doctest.h>

#include <cmath>

#include "bsmap/geodesic.hpp"
#include "test_util.hpp"

using namespace bsmap;

TEST_CASE("perpendicular diameters cross at the origin") {
  const Geodesic real_axis{BoundaryPoint(0.0), BoundaryPoint(kPi)};
  const Geodesic imag_axis{BoundaryPoint(kPi / 2), BoundaryPoint(3 * kPi / 2)};
  CHECK(real_axis.diameter);
  const auto x = geodesic_intersection(real_axis, imag_axis);
  REQUIRE(x.has_value());
  CHECK(std::abs(x->z) < 1e-15);
}

TEST_CASE("interleaved endpoints force a crossing, separated ones exclude it") {
  const Geodesic g1{BoundaryPoint(0.1), BoundaryPoint(2.0)};
  const Geodesic crossing{BoundaryPoint(1.0), BoundaryPoint(3.0)};
  const Geodesic disjoint{BoundaryPoint(2.5), BoundaryPoint(5.0)};
  CHECK(geodesic_intersection(g1, crossing).has_value());
  CHECK(!geodesic_intersection(g1, disjoint).has_value());
}

TEST_CASE("coincident geodesics are degenerate") {
  const Geodesic g1{BoundaryPoint(0.3), BoundaryPoint(2.1)};
  const Geodesic g2{BoundaryPoint(2.1), BoundaryPoint(0.3)};
  CHECK_THROWS_AS(geodesic_intersection(g1, g2), DegenerateGeodesics);
}

TEST_CASE("intersection is symmetric") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 500; ++k) {
    const Geodesic g1{testutil::random_boundary(rng), testutil::random_boundary(rng)};
    const Geodesic g2{testutil::random_boundary(rng), testutil::random_boundary(rng)};
    std::optional<DiskPoint> a, b;
    try {
      a = geodesic_intersection(g1, g2);
      b = geodesic_intersection(g2, g1);
    } catch (const DegenerateGeodesics&) {
      continue;
    }
    CHECK(a.has_value() == b.has_value());
    if (a) CHECK(std::abs(a->z - b->z) < 1e-12);
  }
}

TEST_CASE("intersection point lies on both geodesics") {
  auto rng = testutil::fixed_rng();
  int found = 0;
  for (int k = 0; k < 500 && found < 100; ++k) {
    const Geodesic g1{testutil::random_boundary(rng), testutil::random_boundary(rng)};
    const Geodesic g2{testutil::random_boundary(rng), testutil::random_boundary(rng)};
    const auto x = geodesic_intersection(g1, g2);
    if (!x) continue;
    ++found;
    CHECK(std::abs(side_of(g1, x->z)) < 1e-9 * std::max(1.0, std::abs(g1.center)));
    CHECK(std::abs(side_of(g2, x->z)) < 1e-9 * std::max(1.0, std::abs(g2.center)));
  }
  CHECK(found == 100);
}

TEST_CASE("euclidean representation is consistent with the endpoints") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 300; ++k) {
    const Geodesic g{testutil::random_boundary(rng), testutil::random_boundary(rng)};
    const double scale = g.diameter ? 1.0 : std::abs(g.center);
    CHECK(std::abs(side_of(g, g.u.unit())) < 1e-10 * std::max(1.0, scale));
    CHECK(std::abs(side_of(g, g.w.unit())) < 1e-10 * std::max(1.0, scale));
    if (!g.diameter) CHECK(std::abs(std::norm(g.center) - 1.0 - g.radius * g.radius) < 1e-10);
  }
}

TEST_CASE("antipodal endpoints give a diameter") {
  const Geodesic g{BoundaryPoint(0.7), BoundaryPoint(0.7 + kPi)};
  CHECK(g.diameter);
  CHECK(std::abs(side_of(g, Complex(0, 0))) == 0.0);
}

TEST_CASE("degenerate endpoints are rejected") {
  CHECK_THROWS_AS(Geodesic(BoundaryPoint(1.0), BoundaryPoint(1.0)), DegenerateGeodesics);
}

TEST_CASE("crosses_segment: fixed examples") {
  const Geodesic real_axis{BoundaryPoint(0.0), BoundaryPoint(kPi)};
  CHECK(crosses_segment(real_axis, DiskPoint(Complex(0, -0.5)), DiskPoint(Complex(0, 0.5))));
  CHECK(!crosses_segment(real_axis, DiskPoint(Complex(0.2, 0.5)), DiskPoint(Complex(0.2, 0.7))));
}

TEST_CASE("crosses_segment agrees with dense sampling of side_of") {
  auto rng = testutil::fixed_rng();
  int done = 0;
  for (int k = 0; k < 4000 && done < 1000; ++k) {
    const Geodesic g{testutil::random_boundary(rng), testutil::random_boundary(rng)};
    const DiskPoint p = testutil::random_disk_point(rng);
    const DiskPoint q = testutil::random_disk_point(rng);
    if (std::abs(p.z - q.z) < 1e-4) continue;
    // sign change of side_of along a dense sample of the segment
    const auto pts = testutil::geodesic_arc_points(p.z, q.z, 400);
    bool sampled = false;
    const double s0 = side_of(g, pts.front());
    for (const Complex& z : pts)
      if (side_of(g, z) * s0 <= 0.0) sampled = true;
    // skip near-tangent configurations the sampling cannot resolve
    double closest = 1e9;
    for (const Complex& z : pts) closest = std::min(closest, std::abs(side_of(g, z)));
    if (closest < 1e-4 * std::max(1.0, std::abs(g.center))) continue;
    ++done;
    CHECK(crosses_segment(g, p, q) == sampled);
  }
  CHECK(done == 1000);
}

TEST_CASE("other_endpoint lands on the geodesic through both points") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 300; ++k) {
    const BoundaryPoint w = testutil::random_boundary(rng);
    const DiskPoint v = testutil::random_disk_point(rng);
    const BoundaryPoint b = other_endpoint(w, v.z);
    const Geodesic g{w, b};
    CHECK(std::abs(side_of(g, v.z)) < 1e-9 * std::max(1.0, g.diameter ? 1.0 : std::abs(g.center)));
  }
}
