#pragma once

#include <string>
#include <vector>

#include "bsmap/geodesic.hpp"
#include "bsmap/moebius.hpp"

namespace bsmap {

/// Side pairing for the (8g-4)-gon, 1-based with representatives in 1..8g-4:
///   sigma(i) = 4g - i   (mod 8g-4)   for odd i,
///   sigma(i) = 2 - i    (mod 8g-4)   for even i.
/// An involution without fixed points.
int sigma_pairing(int i, int genus);

/// Marked fundamental (8g-4)-gon. Vertices V_1..V_n counterclockwise, side i
/// runs from V_i to V_{i+1} along the geodesic P_i -> Q_{i+1}, and T_i is the
/// Moebius map identifying side i with side sigma(i):
///   T_i(P_i) = Q_{sigma(i)+1},  T_i(Q_{i+1}) = P_{sigma(i)},  T_i(V_i) = V_{sigma(i)+1}.
/// The 4n boundary points sit on the circle in the order
/// P_1, Q_1, P_2, Q_2, ..., P_n, Q_n.
struct MarkedPolygon {
  int genus = 2;
  int n = 12;  // 8*genus - 4
  std::vector<DiskPoint> vertices;         // V_1..V_n
  std::vector<BoundaryPoint> endpoints_p;  // P_1..P_n
  std::vector<BoundaryPoint> endpoints_q;  // Q_1..Q_n
  std::vector<DiskMoebius> pairings;       // T_1..T_n

  // 1-based accessors; indices wrap mod n into 1..n.
  int wrap(int i) const { return ((i - 1) % n + n) % n + 1; }
  int sigma(int i) const { return sigma_pairing(wrap(i), genus); }
  const DiskPoint& V(int i) const { return vertices[wrap(i) - 1]; }
  BoundaryPoint P(int i) const { return endpoints_p[wrap(i) - 1]; }
  BoundaryPoint Q(int i) const { return endpoints_q[wrap(i) - 1]; }
  const DiskMoebius& T(int i) const { return pairings[wrap(i) - 1]; }
  Geodesic side_geodesic(int i) const { return {P(i), Q(i + 1)}; }
};

struct PolygonMetrics {
  double perimeter = 0.0;
  double area = 0.0;  // angle defect: (n-2)*pi - sum of interior angles
  std::vector<double> side_lengths;     // side i = V_i .. V_{i+1}
  std::vector<double> interior_angles;  // at vertex i, radians
};

PolygonMetrics metrics(const MarkedPolygon& poly);

/// One named consistency check with its observed residual.
struct Check {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs every polygon invariant (boundary-point order, vertices on side
/// geodesics, paired side lengths, angle sums, endpoint mapping, pairing
/// involution, disk preservation, Gauss-Bonnet area).
std::vector<Check> validate(const MarkedPolygon& poly);

/// Throws CheckFailure naming the first failing check.
void ensure_valid(const MarkedPolygon& poly);

/// Side length of the regular (8g-4)-gon with right angles:
/// acosh(1 + 2 cos(pi/(4g-2))).
double regular_side_length(int genus);

/// The regular (8g-4)-gon: all sides of equal hyperbolic length, all interior
/// angles pi/2, V_1 on the positive real axis.
MarkedPolygon regular_polygon(int genus);

/// Unique Moebius map sending the source triple to the target triple (via
/// cross-ratio), validated to preserve the disk. Throws NotDiskPreserving
/// when the correspondence is not realized by a disk isometry.
DiskMoebius pairing_from_correspondence(Complex s1, Complex s2, Complex s3,
                                        Complex t1, Complex t2, Complex t3);

/// Assembles a marked polygon from its side-extension data: vertices are the
/// crossings of consecutive side geodesics. Throws OrderViolation when the
/// boundary points are not in the required circular order, NoVertex when
/// consecutive geodesics fail to cross inside the disk.
MarkedPolygon from_side_geodesics(int genus,
                                  std::vector<BoundaryPoint> endpoints_p,
                                  std::vector<BoundaryPoint> endpoints_q,
                                  std::vector<DiskMoebius> pairings);

/// Perimeter^2 >= 4 d_n Area with d_n = n tan(Area/2n), equality exactly on
/// the regular polygon.
struct IsoarealCheck {
  double lhs = 0.0;    // perimeter^2
  double rhs = 0.0;    // 4 n tan(area/2n) area
  double slack = 0.0;  // lhs - rhs
};

IsoarealCheck isoareal_check(const MarkedPolygon& poly);

}  // namespace bsmap
