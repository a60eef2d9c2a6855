#include "bsmap/polygon.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "quad_util.hpp"

namespace bsmap {

int sigma_pairing(int i, int genus) {
  const int n = 8 * genus - 4;
  if (i < 1 || i > n) throw IndexOutOfRange("side index out of range");
  int s = (i % 2 == 1) ? (4 * genus - i) : (2 - i);
  s %= n;
  if (s <= 0) s += n;
  return s;
}

double regular_side_length(int genus) {
  return std::acosh(1.0 + 2.0 * std::cos(kPi / (4 * genus - 2)));
}

namespace {

double euclid_distance_to(const Geodesic& g, Complex z) {
  if (g.diameter) return std::abs(g.axis.real() * z.imag() - g.axis.imag() * z.real());
  return std::abs(std::abs(z - g.center) - g.radius);
}

double interior_angle(const MarkedPolygon& poly, int i) {
  // angle at V_i between side i-1 (towards V_{i-1}) and side i (towards V_{i+1})
  const Complex v = poly.V(i).z;
  const Complex t_prev = tangent_at(poly.side_geodesic(i - 1), v, poly.V(i - 1).z);
  const Complex t_next = tangent_at(poly.side_geodesic(i), v, poly.V(i + 1).z);
  const double dot = t_prev.real() * t_next.real() + t_prev.imag() * t_next.imag();
  const double cross = t_prev.real() * t_next.imag() - t_prev.imag() * t_next.real();
  return std::atan2(std::abs(cross), dot);
}

}  // namespace

PolygonMetrics metrics(const MarkedPolygon& poly) {
  PolygonMetrics m;
  m.side_lengths.reserve(poly.n);
  m.interior_angles.reserve(poly.n);
  double angle_sum = 0.0;
  for (int i = 1; i <= poly.n; ++i) {
    m.side_lengths.push_back(hyp_distance(poly.V(i), poly.V(i + 1)));
    m.perimeter += m.side_lengths.back();
    m.interior_angles.push_back(interior_angle(poly, i));
    angle_sum += m.interior_angles.back();
  }
  m.area = (poly.n - 2) * kPi - angle_sum;
  return m;
}

std::vector<Check> validate(const MarkedPolygon& poly) {
  std::vector<Check> checks;
  const int n = poly.n;

  // boundary points in the order P_1, Q_1, P_2, Q_2, ...
  {
    double min_gap = kTwoPi;
    double prev = 0.0;
    const double base = poly.P(1).angle;
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      for (const double ang : {poly.P(i).angle, poly.Q(i).angle}) {
        if (first) {
          first = false;
          continue;
        }
        const double rel = ccw_delta(ang, base);
        min_gap = std::min(min_gap, rel - prev);
        prev = rel;
      }
    }
    min_gap = std::min(min_gap, kTwoPi - prev);
    checks.push_back({"circular-order", min_gap, 0.0, 0.0, min_gap > 0.0});
  }

  const PolygonMetrics m = metrics(poly);

  {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      const Geodesic g = poly.side_geodesic(i);
      worst = std::max(worst, euclid_distance_to(g, poly.V(i).z));
      worst = std::max(worst, euclid_distance_to(g, poly.V(i + 1).z));
    }
    checks.push_back({"vertex-on-side", worst, 0.0, tol::vertex_on_side,
                      worst <= tol::vertex_on_side});
  }
  {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
      worst = std::max(worst, std::abs(m.side_lengths[i - 1] -
                                       m.side_lengths[poly.sigma(i) - 1]));
    checks.push_back({"side-length-pairing", worst, 0.0, tol::polygon_check,
                      worst <= tol::polygon_check});
  }
  {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      const double sum = m.interior_angles[i - 1] +
                         m.interior_angles[poly.wrap(poly.sigma(i) + 1) - 1];
      worst = std::max(worst, std::abs(sum - kPi));
    }
    checks.push_back({"angle-sum", worst, kPi, tol::polygon_check,
                      worst <= tol::polygon_check});
  }
  {
    double worst = 0.0;
    for (int i = 1; i <= n; ++i) {
      const int s = poly.sigma(i);
      worst = std::max(worst, circ_dist(apply(poly.T(i), poly.P(i)), poly.Q(s + 1)));
      worst = std::max(worst, circ_dist(apply(poly.T(i), poly.Q(i + 1)), poly.P(s)));
    }
    checks.push_back({"endpoint-mapping", worst, 0.0, tol::polygon_check,
                      worst <= tol::polygon_check});
  }
  {
    // the sigma(i)-vs-i product collapses to a scalar matrix, so its residual
    // carries roundoff of order eps * |T_sigma| * |T_i|; the bound only
    // widens beyond tol::polygon_check for very stretched polygons
    const auto frob = [](const DiskMoebius& t) {
      return std::sqrt(std::norm(t.a) + std::norm(t.b) + std::norm(t.c) + std::norm(t.d));
    };
    double worst = 0.0, worst_tol = tol::polygon_check;
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      const DiskMoebius& ts = poly.T(poly.sigma(i));
      const DiskMoebius& ti = poly.T(i);
      const double res = scalar_identity_residual(compose(ts, ti));
      const double bound =
          std::max(tol::polygon_check, 32.0 * std::numeric_limits<double>::epsilon() *
                                           frob(ts) * frob(ti));
      ok = ok && res <= bound;
      worst = std::max(worst, res);
      worst_tol = std::max(worst_tol, bound);
    }
    checks.push_back({"pairing-involution", worst, 0.0, worst_tol, ok});
  }
  {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = is_disk_preserving(poly.T(i), tol::polygon_check);
    checks.push_back({"pairing-disk-preserving", ok ? 0.0 : 1.0, 0.0,
                      tol::polygon_check, ok});
  }
  {
    const double expected = kTwoPi * (2 * poly.genus - 2);
    const double dev = std::abs(m.area - expected);
    checks.push_back({"gauss-bonnet-area", dev, 0.0, tol::area_gauss_bonnet,
                      dev <= tol::area_gauss_bonnet});
  }
  return checks;
}

void ensure_valid(const MarkedPolygon& poly) {
  for (const Check& c : validate(poly))
    if (!c.pass) throw CheckFailure("polygon check failed: " + c.name);
}

namespace {

// sends z1, z2, z3 to 0, 1, infinity
DiskMoebius three_point_map(Complex z1, Complex z2, Complex z3) {
  const Complex d23 = z2 - z3;
  const Complex d21 = z2 - z1;
  return {d23, -z1 * d23, d21, -z3 * d21};
}

}  // namespace

DiskMoebius pairing_from_correspondence(Complex s1, Complex s2, Complex s3,
                                        Complex t1, Complex t2, Complex t3) {
  constexpr double kMinSep = 1e-12;
  if (std::abs(s1 - s2) < kMinSep || std::abs(s1 - s3) < kMinSep ||
      std::abs(s2 - s3) < kMinSep || std::abs(t1 - t2) < kMinSep ||
      std::abs(t1 - t3) < kMinSep || std::abs(t2 - t3) < kMinSep)
    throw Error("triple correspondence needs three distinct points on each side");
  const DiskMoebius result = compose(inverse(three_point_map(t1, t2, t3)),
                                     three_point_map(s1, s2, s3));
  if (!is_disk_preserving(result, tol::polygon_check))
    throw NotDiskPreserving("triple correspondence is not realized by a disk isometry");
  return result;
}

MarkedPolygon regular_polygon(int genus) {
  if (genus < 2) throw OutOfDomain("genus must be >= 2");
  const int n = 8 * genus - 4;
  const double half_step = kPi / n;

  // right triangle (center, side midpoint, vertex) with angles pi/n and pi/4:
  // cosh(circumradius) = cot(pi/n) cot(pi/4)
  const double circumradius = std::acosh(1.0 / std::tan(half_step));
  const double rho = std::tanh(0.5 * circumradius);

  MarkedPolygon poly;
  poly.genus = genus;
  poly.n = n;
  poly.vertices.reserve(n);
  poly.endpoints_p.resize(n);
  poly.endpoints_q.resize(n);

  // side-extension circle for side i is centered along the side midline
  const double center_mag = (1.0 + rho * rho) / (2.0 * rho * std::cos(half_step));
  const double psi = std::acos(1.0 / center_mag);

  for (int i = 1; i <= n; ++i) {
    const double phi = kTwoPi * (i - 1) / n;
    poly.vertices.emplace_back(std::polar(rho, phi));
    const double mid = phi + half_step;
    poly.endpoints_p[i - 1] = BoundaryPoint(mid - psi);
    poly.endpoints_q[i % n] = BoundaryPoint(mid + psi);  // Q_{i+1}
  }

  poly.pairings.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const int s = sigma_pairing(i, genus);
    poly.pairings.push_back(pairing_from_correspondence(
        poly.P(i).unit(), poly.Q(i + 1).unit(), poly.V(i).z,
        poly.Q(s + 1).unit(), poly.P(s).unit(), poly.V(s + 1).z));
  }

  ensure_valid(poly);
  return poly;
}

MarkedPolygon from_side_geodesics(int genus,
                                  std::vector<BoundaryPoint> endpoints_p,
                                  std::vector<BoundaryPoint> endpoints_q,
                                  std::vector<DiskMoebius> pairings) {
  if (genus < 2) throw OutOfDomain("genus must be >= 2");
  const int n = 8 * genus - 4;
  if (static_cast<int>(endpoints_p.size()) != n ||
      static_cast<int>(endpoints_q.size()) != n ||
      static_cast<int>(pairings.size()) != n)
    throw IndexOutOfRange("expected 8g-4 entries in each list");

  MarkedPolygon poly;
  poly.genus = genus;
  poly.n = n;
  poly.endpoints_p = std::move(endpoints_p);
  poly.endpoints_q = std::move(endpoints_q);
  poly.pairings = std::move(pairings);

  // circular order P_1, Q_1, P_2, Q_2, ... must be strict
  {
    const double base = poly.P(1).angle;
    double prev = 0.0;
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      for (const double ang : {poly.P(i).angle, poly.Q(i).angle}) {
        if (first) {
          first = false;
          continue;
        }
        const double rel = ccw_delta(ang, base);
        if (!(rel > prev)) throw OrderViolation("boundary points out of circular order");
        prev = rel;
      }
    }
  }

  // Vertices are crossings of consecutive side geodesics. For stretched
  // polygons the two circles are nearly tangent with large, nearly equal
  // centers, so the crossing is computed in quadruple precision.
  poly.vertices.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const int prev = poly.wrap(i - 1);
    if (circ_dist(poly.P(prev), poly.P(i)) <= tol::endpoint_distinct)
      throw NoVertex("consecutive side geodesics coincide");
    const quad::QGeodesic a = quad::geodesic(poly.P(prev).angle, poly.Q(prev + 1).angle);
    const quad::QGeodesic b = quad::geodesic(poly.P(i).angle, poly.Q(i + 1).angle);
    const std::optional<Complex> v = quad::intersection(a, b);
    if (!v) throw NoVertex("consecutive side geodesics do not cross inside the disk");
    poly.vertices.push_back(DiskPoint(*v));
  }

  ensure_valid(poly);
  return poly;
}

IsoarealCheck isoareal_check(const MarkedPolygon& poly) {
  const PolygonMetrics m = metrics(poly);
  IsoarealCheck c;
  c.lhs = m.perimeter * m.perimeter;
  const double d_n = poly.n * std::tan(m.area / (2.0 * poly.n));
  c.rhs = 4.0 * d_n * m.area;
  c.slack = c.lhs - c.rhs;
  return c;
}

}  // namespace bsmap
