#pragma once

#include <complex>
#include <numbers>

#include "bsmap/errors.hpp"
#include "bsmap/tolerances.hpp"

namespace bsmap {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point of the circle at infinity, stored as an angle reduced to [0, 2*pi).
/// All interval logic on the circle is done on angles; the unit-complex form
/// is derived on demand.
struct BoundaryPoint {
  double angle = 0.0;

  BoundaryPoint() = default;
  explicit BoundaryPoint(double a) : angle(reduce(a)) {}

  Complex unit() const { return std::polar(1.0, angle); }
  static BoundaryPoint from_complex(Complex z) { return BoundaryPoint(std::arg(z)); }
  static double reduce(double a);
};

/// Circular distance between two angles, in [0, pi].
double circ_dist(double a, double b);
inline double circ_dist(BoundaryPoint a, BoundaryPoint b) { return circ_dist(a.angle, b.angle); }
bool approx_equal(BoundaryPoint a, BoundaryPoint b, double tolerance = tol::angle_eq);

/// Counterclockwise offset of x from lo, in [0, 2*pi).
double ccw_delta(double x, double lo);
/// Length of the counterclockwise arc lo -> hi.
inline double ccw_span(double lo, double hi) { return ccw_delta(hi, lo); }
/// Membership in the half-open counterclockwise arc [lo, hi).
inline bool in_arc_half_open(double x, double lo, double hi) {
  return ccw_delta(x, lo) < ccw_span(lo, hi);
}
/// Membership in the open counterclockwise arc (lo, hi).
inline bool in_arc_open(double x, double lo, double hi) {
  const double d = ccw_delta(x, lo);
  return d > 0.0 && d < ccw_span(lo, hi);
}

/// A point strictly inside the unit disk.
struct DiskPoint {
  Complex z;
  explicit DiskPoint(Complex value);
};

/// 2x2 complex matrix acting on the disk by z -> (a z + b)/(c z + d).
/// Entries are kept exactly as produced (scalar prefactors and all);
/// normalization to det 1 happens only where trace classification needs it.
struct DiskMoebius {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Complex det() const { return a * d - b * c; }
  DiskMoebius normalized() const;

  static DiskMoebius identity() { return {}; }
  static DiskMoebius rotation(double theta);  // z -> e^{i theta} z
};

Complex apply(const DiskMoebius& m, Complex z);
BoundaryPoint apply(const DiskMoebius& m, BoundaryPoint x);
DiskPoint apply(const DiskMoebius& m, DiskPoint p);

DiskMoebius compose(const DiskMoebius& m1, const DiskMoebius& m2);
DiskMoebius inverse(const DiskMoebius& m);

/// |m'(z)| = |det| / |cz + d|^2.
double derivative_modulus(const DiskMoebius& m, Complex z);
inline double derivative_modulus(const DiskMoebius& m, BoundaryPoint x) {
  return derivative_modulus(m, x.unit());
}

/// Operator-norm distance of m (after det-1 normalization) from the nearest
/// scalar multiple of the identity. Zero exactly for scalar matrices.
double scalar_identity_residual(const DiskMoebius& m);

/// Sampled functional check: unit circle stays on the unit circle and the
/// center stays inside.
bool is_disk_preserving(const DiskMoebius& m, double tolerance = tol::boundary);

struct FixedPoints {
  BoundaryPoint attracting;
  BoundaryPoint repelling;
};

/// Fixed points of a hyperbolic disk-preserving map, both on the circle at
/// infinity. Throws NotHyperbolic when |trace| <= 2 + tol::trace_margin after
/// normalization, NotDiskPreserving when the fixed points fail to land on the
/// circle.
FixedPoints fixed_points(const DiskMoebius& m);

/// Hyperbolic distance in the metric 2|dz|/(1-|z|^2) (curvature -1).
double hyp_distance(DiskPoint p, DiskPoint q);

}  // namespace bsmap
