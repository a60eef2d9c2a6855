#include "bsmap/geodesic.hpp"

#include <cmath>

namespace bsmap {

Geodesic::Geodesic(BoundaryPoint from, BoundaryPoint to) : u(from), w(to) {
  if (circ_dist(u, w) <= tol::endpoint_distinct)
    throw DegenerateGeodesics("geodesic endpoints coincide");
  const Complex a = u.unit();
  if (circ_dist(BoundaryPoint(u.angle + kPi), w) <= tol::antipodal) {
    diameter = true;
    axis = a;
    return;
  }
  // circle orthogonal to the unit circle through both endpoints:
  // Re(conj(center) z) = 1 on |z| = 1
  const Complex b = w.unit();
  const double det = a.real() * b.imag() - a.imag() * b.real();
  center = Complex(b.imag() - a.imag(), a.real() - b.real()) / det;
  radius = std::sqrt(std::max(0.0, std::norm(center) - 1.0));
}

double side_of(const Geodesic& g, Complex z) {
  if (g.diameter) return g.axis.real() * z.imag() - g.axis.imag() * z.real();
  return g.center.real() * z.real() + g.center.imag() * z.imag() - 0.5 * (1.0 + std::norm(z));
}

bool crosses_segment(const Geodesic& g, DiskPoint p, DiskPoint q) {
  return side_of(g, p.z) * side_of(g, q.z) <= 0.0;
}

namespace {

// Both intersection points of a line t -> t*dir (unit dir through the
// origin) with the circle |z - c| = r orthogonal to the unit circle are
// roots of t^2 - 2 beta t + 1 = 0; the root of smaller modulus is inside
// the disk.
std::optional<double> inside_root(double beta) {
  const double disc = beta * beta - 1.0;
  if (disc <= 0.0) return std::nullopt;
  const double big = beta + std::copysign(std::sqrt(disc), beta);
  return 1.0 / big;
}

}  // namespace

std::optional<DiskPoint> geodesic_intersection(const Geodesic& g1, const Geodesic& g2) {
  const bool same =
      (approx_equal(g1.u, g2.u) && approx_equal(g1.w, g2.w)) ||
      (approx_equal(g1.u, g2.w) && approx_equal(g1.w, g2.u));
  if (same) throw DegenerateGeodesics("geodesics coincide");

  // endpoints must interleave for an interior crossing
  if (side_of(g1, g2.u.unit()) * side_of(g1, g2.w.unit()) >= 0.0) return std::nullopt;
  if (side_of(g2, g1.u.unit()) * side_of(g2, g1.w.unit()) >= 0.0) return std::nullopt;

  Complex point;
  if (g1.diameter && g2.diameter) {
    point = Complex(0.0, 0.0);
  } else if (g1.diameter || g2.diameter) {
    const Geodesic& line = g1.diameter ? g1 : g2;
    const Geodesic& circ = g1.diameter ? g2 : g1;
    const double beta = circ.center.real() * line.axis.real() + circ.center.imag() * line.axis.imag();
    const auto t = inside_root(beta);
    if (!t) return std::nullopt;
    point = *t * line.axis;
  } else {
    // both radical points lie on the line through the origin orthogonal to
    // the center difference
    const Complex dc = g1.center - g2.center;
    const double len = std::abs(dc);
    if (len < 1e-14) return std::nullopt;
    const Complex dir = Complex(-dc.imag(), dc.real()) / len;
    const double beta = g1.center.real() * dir.real() + g1.center.imag() * dir.imag();
    const auto t = inside_root(beta);
    if (!t) return std::nullopt;
    point = *t * dir;
  }
  if (!(std::abs(point) < 1.0 - tol::disk_interior)) return std::nullopt;
  return DiskPoint(point);
}

BoundaryPoint other_endpoint(BoundaryPoint w, Complex v) {
  const Complex a = w.unit();
  const double rhs = 0.5 * (1.0 + std::norm(v));
  const double det = a.real() * v.imag() - a.imag() * v.real();
  if (std::abs(det) < 1e-14) return BoundaryPoint(w.angle + kPi);  // v on the diameter through w
  const double cx = (v.imag() - a.imag() * rhs) / det;
  const double cy = (a.real() * rhs - v.real()) / det;
  // ideal endpoints sit symmetrically about the center direction
  return BoundaryPoint(2.0 * std::atan2(cy, cx) - w.angle);
}

Complex tangent_at(const Geodesic& g, Complex z, Complex towards) {
  Complex t;
  if (g.diameter) {
    t = g.axis;
  } else {
    const Complex radial = z - g.center;
    t = Complex(-radial.imag(), radial.real()) / std::abs(radial);
  }
  const Complex chord = towards - z;
  if (t.real() * chord.real() + t.imag() * chord.imag() < 0.0) t = -t;
  return t;
}

}  // namespace bsmap
