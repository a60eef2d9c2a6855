#pragma once

#include <optional>

#include "bsmap/moebius.hpp"

namespace bsmap {

/// Oriented geodesic of the disk, from endpoint u to endpoint w on the circle
/// at infinity. Carries a cached Euclidean representation: either the circle
/// orthogonal to the unit circle through both endpoints, or a diameter when
/// the endpoints are antipodal within tol::antipodal.
struct Geodesic {
  BoundaryPoint u, w;
  bool diameter = false;
  Complex center{};     // orthogonal-circle center, |center|^2 = 1 + radius^2
  double radius = 0.0;  // valid when !diameter
  Complex axis{};       // unit direction of the line, valid when diameter

  Geodesic(BoundaryPoint from, BoundaryPoint to);
};

/// Signed side value of z relative to the geodesic. Zero on the geodesic,
/// opposite signs on the two sides of it. For the orthogonal-circle case this
/// is Re(conj(center) z) - (1+|z|^2)/2, which avoids the |center|^2
/// cancellation for near-diameter circles.
double side_of(const Geodesic& g, Complex z);

/// True iff g meets the closed geodesic segment pq. Two distinct geodesics
/// meet at most once inside the disk, so this reduces to a sign test at the
/// segment endpoints.
bool crosses_segment(const Geodesic& g, DiskPoint p, DiskPoint q);

/// Crossing point of the two open geodesics inside the disk, or nullopt when
/// they do not cross there. Throws DegenerateGeodesics when they coincide.
std::optional<DiskPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2);

/// Second ideal endpoint of the geodesic through boundary point w and
/// interior point v.
BoundaryPoint other_endpoint(BoundaryPoint w, Complex v);

/// Unit tangent of the geodesic at a point z on it, oriented to have positive
/// component along the direction towards target t.
Complex tangent_at(const Geodesic& g, Complex z, Complex towards);

}  // namespace bsmap
