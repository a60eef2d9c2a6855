#pragma once

// Internal quadruple-precision helpers. Matrix products over the group and
// vertex intersections of nearly tangent side circles lose up to half their
// digits in double; these kernels run in __float128 and the results are
// rounded back to double at the interface.

#include <optional>

#include <quadmath.h>

#include "bsmap/moebius.hpp"

namespace bsmap::quad {

using Real = __float128;

struct QComplex {
  Real re{0}, im{0};
};

inline QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
inline QComplex operator-(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
inline QComplex operator*(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QComplex operator*(Real s, QComplex a) { return {s * a.re, s * a.im}; }
inline Real norm(QComplex a) { return a.re * a.re + a.im * a.im; }
inline Real abs(QComplex a) { return sqrtq(norm(a)); }
inline QComplex conj(QComplex a) { return {a.re, -a.im}; }
inline QComplex div(QComplex a, QComplex b) {
  const Real n = norm(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
inline QComplex sqrt(QComplex a) {
  const Real m = abs(a);
  // clamp: roundoff can push m - |re| slightly negative for real inputs
  QComplex r{sqrtq(fmaxq((m + a.re) / 2, Real(0))), sqrtq(fmaxq((m - a.re) / 2, Real(0)))};
  if (a.im < 0) r.im = -r.im;
  return r;
}
inline Complex to_double(QComplex a) {
  return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

struct QMatrix {
  QComplex a, b, c, d;
};

inline QMatrix compose(const QMatrix& m1, const QMatrix& m2) {
  return {m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
          m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}
inline QMatrix inverse(const QMatrix& m) {
  return {m.d, {-m.b.re, -m.b.im}, {-m.c.re, -m.c.im}, m.a};
}
inline QComplex det(const QMatrix& m) { return m.a * m.d - m.b * m.c; }
inline DiskMoebius to_double(const QMatrix& m) {
  return {to_double(m.a), to_double(m.b), to_double(m.c), to_double(m.d)};
}

/// Operator-norm distance from the nearest scalar multiple of the identity,
/// after det-1 normalization.
double scalar_residual(const QMatrix& m);

struct FixedAngles {
  double attracting = 0.0;
  double repelling = 0.0;
};

/// Fixed points of a hyperbolic disk-preserving matrix, as circle angles.
FixedAngles fixed_angles(const QMatrix& m);

/// Geodesic between two circle angles, in the Euclidean representation.
struct QGeodesic {
  bool diameter = false;
  QComplex center;  // orthogonal circle, valid when !diameter
  QComplex axis;    // unit line direction, valid when diameter
  QComplex u, w;    // endpoint unit vectors
};

QGeodesic geodesic(double angle_u, double angle_w);

/// Crossing point of the two geodesics inside the open unit disk.
std::optional<Complex> intersection(const QGeodesic& g1, const QGeodesic& g2);

}  // namespace bsmap::quad
