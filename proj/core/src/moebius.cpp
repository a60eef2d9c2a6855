#include "bsmap/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace bsmap {

double BoundaryPoint::reduce(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double circ_dist(double a, double b) {
  const double d = BoundaryPoint::reduce(a - b);
  return std::min(d, kTwoPi - d);
}

bool approx_equal(BoundaryPoint a, BoundaryPoint b, double tolerance) {
  return circ_dist(a, b) < tolerance;
}

double ccw_delta(double x, double lo) { return BoundaryPoint::reduce(x - lo); }

DiskPoint::DiskPoint(Complex value) : z(value) {
  if (!(std::abs(z) < 1.0 - tol::disk_interior))
    throw Error("point not strictly inside the unit disk");
}

DiskMoebius DiskMoebius::normalized() const {
  const Complex dt = det();
  if (std::abs(dt) <= tol::det_min) throw Error("matrix is singular");
  const Complex s = std::sqrt(dt);
  return {a / s, b / s, c / s, d / s};
}

DiskMoebius DiskMoebius::rotation(double theta) {
  const Complex h = std::polar(1.0, 0.5 * theta);
  return {h, 0.0, 0.0, std::conj(h)};
}

Complex apply(const DiskMoebius& m, Complex z) {
  const Complex den = m.c * z + m.d;
  if (std::abs(den) <= tol::pole) throw PoleAtInput("Moebius map has a pole at the input");
  return (m.a * z + m.b) / den;
}

BoundaryPoint apply(const DiskMoebius& m, BoundaryPoint x) {
  return BoundaryPoint::from_complex(apply(m, x.unit()));
}

DiskPoint apply(const DiskMoebius& m, DiskPoint p) { return DiskPoint(apply(m, p.z)); }

DiskMoebius compose(const DiskMoebius& m1, const DiskMoebius& m2) {
  return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
          m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

DiskMoebius inverse(const DiskMoebius& m) { return {m.d, -m.b, -m.c, m.a}; }

double derivative_modulus(const DiskMoebius& m, Complex z) {
  const Complex den = m.c * z + m.d;
  if (std::abs(den) <= tol::pole) throw PoleAtInput("derivative undefined at a pole");
  return std::abs(m.det()) / std::norm(den);
}

namespace {

// largest singular value of a 2x2 complex matrix
double op_norm(Complex a, Complex b, Complex c, Complex d) {
  const double p = std::norm(a) + std::norm(c);
  const double q = std::norm(b) + std::norm(d);
  const Complex r = std::conj(a) * b + std::conj(c) * d;
  const double disc = std::sqrt(std::max(0.0, (p - q) * (p - q) + 4.0 * std::norm(r)));
  return std::sqrt(std::max(0.0, 0.5 * (p + q + disc)));
}

}  // namespace

double scalar_identity_residual(const DiskMoebius& m) {
  const DiskMoebius nm = m.normalized();
  const Complex s = 0.5 * (nm.a + nm.d);
  return op_norm(nm.a - s, nm.b, nm.c, nm.d - s);
}

bool is_disk_preserving(const DiskMoebius& m, double tolerance) {
  if (std::abs(m.det()) <= tol::det_min) return false;
  try {
    for (int k = 0; k < 8; ++k) {
      const Complex z = std::polar(1.0, 0.37 + k * kTwoPi / 8.0);
      if (std::abs(std::abs(apply(m, z)) - 1.0) > tolerance) return false;
    }
    return std::abs(apply(m, Complex(0.0, 0.0))) < 1.0;
  } catch (const PoleAtInput&) {
    return false;  // a pole on the closed disk rules the map out
  }
}

FixedPoints fixed_points(const DiskMoebius& m) {
  const DiskMoebius nm = m.normalized();
  const Complex tr = nm.a + nm.d;
  if (!(std::abs(tr) > 2.0 + tol::trace_margin))
    throw NotHyperbolic("matrix is not hyperbolic: |trace| <= 2 after normalization");
  if (std::abs(nm.c) <= tol::pole)
    throw NotDiskPreserving("hyperbolic fixed points are not on the unit circle");

  // roots of c z^2 + (d - a) z - b = 0; (a-d)^2 + 4bc = tr^2 - 4
  const Complex disc = std::sqrt(tr * tr - 4.0);
  const Complex z1 = ((nm.a - nm.d) + disc) / (2.0 * nm.c);
  const Complex z2 = ((nm.a - nm.d) - disc) / (2.0 * nm.c);
  // negated comparisons so NaN fails the check
  if (!(std::abs(std::abs(z1) - 1.0) <= 1e-6) || !(std::abs(std::abs(z2) - 1.0) <= 1e-6))
    throw NotDiskPreserving("hyperbolic fixed points are not on the unit circle");

  // multipliers at the two fixed points are reciprocal; < 1 marks attraction
  const double d1 = derivative_modulus(nm, z1);
  FixedPoints fp;
  if (d1 < 1.0) {
    fp.attracting = BoundaryPoint::from_complex(z1);
    fp.repelling = BoundaryPoint::from_complex(z2);
  } else {
    fp.attracting = BoundaryPoint::from_complex(z2);
    fp.repelling = BoundaryPoint::from_complex(z1);
  }
  return fp;
}

double hyp_distance(DiskPoint p, DiskPoint q) {
  const Complex num = p.z - q.z;
  const Complex den = 1.0 - std::conj(q.z) * p.z;
  return 2.0 * std::atanh(std::abs(num) / std::abs(den));
}

}  // namespace bsmap
