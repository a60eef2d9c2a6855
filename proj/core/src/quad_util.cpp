#include "quad_util.hpp"

#include "bsmap/errors.hpp"
#include "bsmap/tolerances.hpp"

namespace bsmap::quad {

double scalar_residual(const QMatrix& m) {
  const QComplex s = sqrt(det(m));
  const QMatrix nm{div(m.a, s), div(m.b, s), div(m.c, s), div(m.d, s)};
  const QComplex mid = Real(0.5) * (nm.a + nm.d);
  const QComplex x11 = nm.a - mid, x22 = nm.d - mid;
  const Real p = norm(x11) + norm(nm.c);
  const Real q = norm(nm.b) + norm(x22);
  const QComplex r = conj(x11) * nm.b + conj(nm.c) * x22;
  const Real disc = sqrtq((p - q) * (p - q) + 4 * norm(r));
  return static_cast<double>(sqrtq((p + q + disc) / 2));
}

FixedAngles fixed_angles(const QMatrix& m) {
  const QComplex s = sqrt(det(m));
  const QMatrix nm{div(m.a, s), div(m.b, s), div(m.c, s), div(m.d, s)};
  const QComplex tr = nm.a + nm.d;
  if (!(abs(tr) > 2 + Real(tol::trace_margin)))
    throw NotHyperbolic("matrix is not hyperbolic: |trace| <= 2 after normalization");
  if (abs(nm.c) < Real(1e-30))
    throw NotDiskPreserving("hyperbolic fixed points are not on the unit circle");
  const QComplex disc = sqrt(tr * tr - QComplex{4, 0});
  const QComplex two_c = Real(2) * nm.c;
  const QComplex z1 = div((nm.a - nm.d) + disc, two_c);
  const QComplex z2 = div((nm.a - nm.d) - disc, two_c);
  // negated comparisons so NaN fails the check
  if (!(fabsq(abs(z1) - 1) <= 1e-6) || !(fabsq(abs(z2) - 1) <= 1e-6))
    throw NotDiskPreserving("hyperbolic fixed points are not on the unit circle");
  const Real d1 = Real(1) / norm(nm.c * z1 + nm.d);
  FixedAngles fp;
  const double a1 = static_cast<double>(atan2q(z1.im, z1.re));
  const double a2 = static_cast<double>(atan2q(z2.im, z2.re));
  if (d1 < 1) {
    fp.attracting = a1;
    fp.repelling = a2;
  } else {
    fp.attracting = a2;
    fp.repelling = a1;
  }
  return fp;
}

QGeodesic geodesic(double angle_u, double angle_w) {
  QGeodesic g;
  const Real au = angle_u, aw = angle_w;
  g.u = {cosq(au), sinq(au)};
  g.w = {cosq(aw), sinq(aw)};
  if (circ_dist(angle_u + kPi, angle_w) <= tol::antipodal) {
    g.diameter = true;
    g.axis = g.u;
    return g;
  }
  const Real d = g.u.re * g.w.im - g.u.im * g.w.re;
  g.center = {(g.w.im - g.u.im) / d, (g.u.re - g.w.re) / d};
  return g;
}

namespace {

Real side_of(const QGeodesic& g, QComplex z) {
  if (g.diameter) return g.axis.re * z.im - g.axis.im * z.re;
  return g.center.re * z.re + g.center.im * z.im - (1 + norm(z)) / 2;
}

std::optional<Real> inside_root(Real beta) {
  const Real disc = beta * beta - 1;
  if (disc <= 0) return std::nullopt;
  const Real big = beta + copysignq(sqrtq(disc), beta);
  return 1 / big;
}

}  // namespace

std::optional<Complex> intersection(const QGeodesic& g1, const QGeodesic& g2) {
  if (side_of(g1, g2.u) * side_of(g1, g2.w) >= 0) return std::nullopt;
  if (side_of(g2, g1.u) * side_of(g2, g1.w) >= 0) return std::nullopt;

  QComplex point;
  if (g1.diameter && g2.diameter) {
    point = {0, 0};
  } else if (g1.diameter || g2.diameter) {
    const QGeodesic& line = g1.diameter ? g1 : g2;
    const QGeodesic& circ = g1.diameter ? g2 : g1;
    const Real beta = circ.center.re * line.axis.re + circ.center.im * line.axis.im;
    const auto t = inside_root(beta);
    if (!t) return std::nullopt;
    point = *t * line.axis;
  } else {
    const QComplex dc = g1.center - g2.center;
    const Real len = abs(dc);
    if (len < 1e-30) return std::nullopt;
    const QComplex dir{-dc.im / len, dc.re / len};
    const Real beta = g1.center.re * dir.re + g1.center.im * dir.im;
    const auto t = inside_root(beta);
    if (!t) return std::nullopt;
    point = *t * dir;
  }
  if (!(abs(point) < 1 - Real(tol::disk_interior))) return std::nullopt;
  return to_double(point);
}

}  // namespace bsmap::quad
