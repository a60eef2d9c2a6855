#include "bsmap/boundary_map.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace bsmap {

namespace {
constexpr int kMaxSides = 256;  // stack scratch bound for exit queries (genus <= 32)
}

BoundaryMap::BoundaryMap(MarkedPolygon poly) : poly_(std::move(poly)), n_(poly_.n) {
  if (n_ > kMaxSides) throw Error("polygon has too many sides for the exit cache");
  std::vector<std::pair<double, int>> order;
  order.reserve(n_);
  for (int i = 1; i <= n_; ++i) order.emplace_back(poly_.P(i).angle, i);
  std::sort(order.begin(), order.end());
  branch_angles_.reserve(n_);
  branch_sides_.reserve(n_);
  for (const auto& [ang, side] : order) {
    branch_angles_.push_back(ang);
    branch_sides_.push_back(side);
  }

  verts_.reserve(n_);
  vert_rhs_.reserve(n_);
  beyond_lo_.reserve(n_);
  beyond_span_.reserve(n_);
  log_abs_det_.reserve(n_);
  for (int i = 1; i <= n_; ++i) {
    const Complex v = poly_.V(i).z;
    verts_.push_back(v);
    vert_rhs_.push_back(0.5 * (1.0 + std::norm(v)));
    beyond_lo_.push_back(poly_.P(i).angle);
    beyond_span_.push_back(ccw_span(poly_.P(i).angle, poly_.Q(i + 1).angle));
    log_abs_det_.push_back(std::log(std::abs(poly_.T(i).det())));
  }
}

int BoundaryMap::branch_of(BoundaryPoint x) const {
  const auto it = std::upper_bound(branch_angles_.begin(), branch_angles_.end(), x.angle);
  const std::size_t idx =
      (it == branch_angles_.begin()) ? branch_angles_.size() - 1
                                     : static_cast<std::size_t>(it - branch_angles_.begin()) - 1;
  return branch_sides_[idx];
}

bool BoundaryMap::near_branch_endpoint(BoundaryPoint x) const {
  for (const double a : branch_angles_)
    if (circ_dist(x.angle, a) < tol::near_endpoint_warn) return true;
  return false;
}

BoundaryMap::Step BoundaryMap::step(BoundaryPoint x) const {
  const int i = branch_of(x);
  return {apply(poly_.T(i), x), i, near_branch_endpoint(x)};
}

GeodesicPair BoundaryMap::step_pair(const GeodesicPair& p) const {
  const int i = branch_of(p.w);
  const DiskMoebius& t = poly_.T(i);
  return {apply(t, p.u), apply(t, p.w)};
}

std::optional<int> BoundaryMap::exit_side(const GeodesicPair& p) const {
  if (circ_dist(p.u, p.w) <= tol::endpoint_distinct) return std::nullopt;

  // geodesic from u to w, inlined for the hot path
  const Complex a = p.u.unit();
  bool diameter = false;
  Complex center{}, axis{};
  if (circ_dist(BoundaryPoint(p.u.angle + kPi), p.w) <= tol::antipodal) {
    diameter = true;
    axis = a;
  } else {
    const Complex b = p.w.unit();
    const double det = a.real() * b.imag() - a.imag() * b.real();
    center = Complex(b.imag() - a.imag(), a.real() - b.real()) / det;
  }
  const double graze_scale =
      tol::vertex_grazing * (diameter ? 1.0 : std::max(1.0, std::abs(center)));

  // signed side values of all vertices
  double side[kMaxSides];
  bool grazing = false;
  for (int k = 0; k < n_; ++k) {
    const Complex v = verts_[k];
    side[k] = diameter
                  ? axis.real() * v.imag() - axis.imag() * v.real()
                  : center.real() * v.real() + center.imag() * v.imag() - vert_rhs_[k];
    if (std::abs(side[k]) < graze_scale) grazing = true;
  }

  int crossed[2];
  int count = 0;
  for (int k = 0; k < n_; ++k) {
    const double prod = side[k] * side[(k + 1) % n_];
    if (prod < 0.0) {
      if (count < 2) crossed[count] = k + 1;
      ++count;
    }
  }

  if (count == 0) {
    if (grazing) throw AmbiguousExit("geodesic grazes a polygon vertex");
    return std::nullopt;
  }
  if (grazing || count != 2)
    throw AmbiguousExit("geodesic passes a polygon vertex or is tangent to a side");

  // the exit side is the crossed side that w lies beyond
  int exit = 0;
  for (int c = 0; c < 2; ++c) {
    const int e = crossed[c];
    const double d = ccw_delta(p.w.angle, beyond_lo_[e - 1]);
    if (d > 0.0 && d < beyond_span_[e - 1]) {
      if (exit != 0) throw AmbiguousExit("both crossed sides claim the forward endpoint");
      exit = e;
    }
  }
  if (exit == 0) throw AmbiguousExit("no crossed side matches the forward endpoint");
  return exit;
}

bool BoundaryMap::in_geometric_domain(const GeodesicPair& p) const {
  return exit_side(p).has_value();
}

GeodesicPair BoundaryMap::geometric_step(const GeodesicPair& p) const {
  const auto e = exit_side(p);
  if (!e) throw NotInDomain("geodesic misses the polygon");
  const DiskMoebius& t = poly_.T(*e);
  return {apply(t, p.u), apply(t, p.w)};
}

GeodesicPair BoundaryMap::to_rectilinear(const GeodesicPair& p) const {
  if (!in_geometric_domain(p)) throw NotInDomain("geodesic misses the polygon");
  if (in_rectilinear_domain(p)) return p;  // overlap of the two domains
  // bulge over the branch arc of w
  const int i = branch_of(p.w);
  const DiskMoebius corr = compose(poly_.T(poly_.wrap(poly_.sigma(i) - 1)), poly_.T(i));
  return {apply(corr, p.u), apply(corr, p.w)};
}

bool BoundaryMap::in_rectilinear_domain(const GeodesicPair& p) const {
  // Finite rectangular structure: over the partition arc [P_i, Q_i) the
  // backward fiber is the closed arc [Q_{i+2}, P_{i-1}]; over [Q_i, P_{i+1})
  // it is [Q_{i+2}, P_i].
  const int i = branch_of(p.w);  // w in [P_i, P_{i+1})
  const bool first_half = in_arc_half_open(p.w.angle, poly_.P(i).angle, poly_.Q(i).angle);
  const double lo = poly_.Q(i + 2).angle;
  const double hi = first_half ? poly_.P(i - 1).angle : poly_.P(i).angle;
  return ccw_delta(p.u.angle, lo) <= ccw_span(lo, hi);
}

double BoundaryMap::orbit_log_derivative_sum(BoundaryPoint x0, long nsteps,
                                             OrbitStats* stats) const {
  double sum = 0.0, comp = 0.0;
  BoundaryPoint x = x0;
  for (long k = 0; k < nsteps; ++k) {
    const int i = branch_of(x);
    if (stats && near_branch_endpoint(x)) ++stats->near_endpoint_hits;
    const DiskMoebius& t = poly_.T(i);
    const Complex z = x.unit();
    const Complex den = t.c * z + t.d;
    const double term = log_abs_det_[i - 1] - std::log(std::norm(den));
    // compensated accumulation
    const double y = term - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    x = BoundaryPoint(std::arg((t.a * z + t.b) / den));
  }
  return sum;
}

}  // namespace bsmap
