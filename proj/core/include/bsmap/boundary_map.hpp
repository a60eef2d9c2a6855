#pragma once

#include <optional>
#include <vector>

#include "bsmap/polygon.hpp"

namespace bsmap {

/// A point of S x S minus the diagonal: the oriented geodesic from u to w,
/// with w the forward endpoint.
struct GeodesicPair {
  BoundaryPoint u, w;
};

/// The piecewise-Moebius circle map of a marked polygon: branch T_i on the
/// half-open arc [P_i, P_{i+1}), together with its two-dimensional extension
/// (branch chosen by the forward endpoint) and the geometric variant (branch
/// chosen by the side through which the geodesic leaves the polygon).
class BoundaryMap {
 public:
  explicit BoundaryMap(MarkedPolygon poly);

  const MarkedPolygon& polygon() const { return poly_; }

  /// Index i of the branch arc [P_i, P_{i+1}) containing x. Points within
  /// tol::near_endpoint_warn of an arc endpoint classify by the half-open
  /// rule; step() flags them.
  int branch_of(BoundaryPoint x) const;
  bool near_branch_endpoint(BoundaryPoint x) const;

  struct Step {
    BoundaryPoint image;
    int branch = 0;
    bool near_endpoint = false;
  };

  /// One application of the boundary map: x -> T_i x for x in [P_i, P_{i+1}).
  Step step(BoundaryPoint x) const;

  /// Two-coordinate extension: (u, w) -> (T_i u, T_i w), branch chosen by w.
  GeodesicPair step_pair(const GeodesicPair& p) const;

  /// Side through which the oriented geodesic uw leaves the polygon, nullopt
  /// when the geodesic misses it. Throws AmbiguousExit when the geodesic
  /// passes a vertex within tol::vertex_grazing (callers pick a policy).
  std::optional<int> exit_side(const GeodesicPair& p) const;

  bool in_geometric_domain(const GeodesicPair& p) const;

  /// (u, w) -> (T_i u, T_i w) with i the exit side. Throws NotInDomain when
  /// the geodesic misses the polygon.
  GeodesicPair geometric_step(const GeodesicPair& p) const;

  /// The bijection from the geometric domain onto the rectilinear one:
  /// identity on the overlap, the bulge correction T_{sigma(i)-1} T_i on the
  /// rest, where i is the branch of w.
  GeodesicPair to_rectilinear(const GeodesicPair& p) const;

  /// Membership in the rectilinear domain, which has the finite rectangular
  /// structure: u in [Q_{i+2}, P_{i-1}] over w in [P_i, Q_i), and
  /// u in [Q_{i+2}, P_i] over w in [Q_i, P_{i+1}).
  bool in_rectilinear_domain(const GeodesicPair& p) const;

  struct OrbitStats {
    long near_endpoint_hits = 0;
  };

  /// Sum of log |T'_{branch}(x_k)| along nsteps of the forward orbit of x0.
  double orbit_log_derivative_sum(BoundaryPoint x0, long nsteps,
                                  OrbitStats* stats = nullptr) const;

 private:
  MarkedPolygon poly_;
  int n_;
  // branch lookup table: P angles sorted ascending with their side indices
  std::vector<double> branch_angles_;
  std::vector<int> branch_sides_;
  // cached per-side data for exit queries
  std::vector<Complex> verts_;
  std::vector<double> vert_rhs_;  // (1 + |V_i|^2) / 2
  std::vector<double> beyond_lo_, beyond_span_;  // the arc (P_i, Q_{i+1})
  std::vector<double> log_abs_det_;              // log |det T_i|
};

}  // namespace bsmap
