#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsmap/markov.hpp"
#include "bsmap/maskit.hpp"

namespace bsmap {

/// Measure-theoretic entropy of the boundary map with respect to its smooth
/// invariant measure: pi^2 (4g-4) / Perimeter, equivalently
/// pi * Area / Perimeter.
double entropy_formula(const PolygonMetrics& m, int genus);
double entropy_formula(const MarkedPolygon& poly);

/// Maximum of the entropy over all surfaces of genus g, attained on the
/// regular polygon: pi^2 (4g-4) / ((8g-4) acosh(1 + 2 cos(pi/(4g-2)))).
double h_max(int genus);

struct MeanWithError {
  double value = 0.0;
  double std_error = 0.0;
};

/// Stratified Monte Carlo estimate of the mass of the geometric domain under
/// d nu = |du||dw|/|u-w|^2 (which equals the polygon perimeter). Strata form
/// a fixed 64x64 angular grid; each stratum owns an RNG stream derived from
/// (seed, stratum index), so the result is independent of the thread count.
/// Ambiguous exits count as boundary with weight zero.
MeanWithError nu_mass_quadrature(const MarkedPolygon& poly, long samples,
                                 std::uint64_t seed, int threads = 1);

/// Mass of the strip of geodesics leaving through one side, computed in the
/// (x, theta) coordinates along the side where d nu = (1/2) sin(theta)
/// d theta d x: a deterministic midpoint rule on a grid x grid mesh,
/// converging to the hyperbolic side length at rate grid^-2.
double strip_mass(const MarkedPolygon& poly, int side, int grid);

/// Same strip mass computed directly in (u, w) coordinates: for each forward
/// endpoint w beyond the side, the u-fiber is the arc between the second
/// endpoints of the geodesics from w through the two side vertices, and its
/// nu-mass has a closed form. Independent route used as the oracle pair of
/// strip_mass.
double strip_mass_nu(const MarkedPolygon& poly, int side, int grid);

struct BirkhoffEstimate {
  double estimate = 0.0;  // median over seeds of the orbit averages
  double spread = 0.0;    // max - min over seeds
  long nsteps = 0;
};

/// Orbit average of log |f'| along nsteps of the boundary map, median over
/// nseeds random starting points.
BirkhoffEstimate birkhoff_entropy(const BoundaryMap& bm, long nsteps, int nseeds,
                                  std::uint64_t seed);

/// Finds genus-2 Fenchel-Nielsen parameters whose polygon realizes the
/// target entropy, by bisection on beta upward from the regular value (all
/// other parameters regular, twists zero). The bracket is expanded until the
/// entropy drops below the target; beta is capped at 1e3 and the failure
/// reported as BracketFailure beyond that. Targets above the genus-2 maximum
/// throw TargetOutOfRange.
FenchelNielsen6 solve_target_entropy(double target_h, double tolerance);

struct SweepRow {
  double parameter_value = 0.0;
  double perimeter = 0.0;
  double entropy = 0.0;
  double h_top = 0.0;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepRow> rows;
  std::vector<double> skipped_values;  // parameter values outside the chart
  bool matrix_constant = true;         // transition matrix identical on all rows
  std::string matrix;                  // text form of the shared matrix
};

/// Varies one Fenchel-Nielsen coordinate (name in {alpha, beta, gamma, sigma,
/// tau, rho}) with the others at their regular values, recording perimeter,
/// entropy and topological entropy per value. Out-of-chart values are
/// skipped and reported.
SweepResult sweep_parameter(const std::string& name, const std::vector<double>& values);

struct EntropyReport {
  int genus = 2;
  double formula_value = 0.0;
  double h_of_g = 0.0;
  double perimeter = 0.0;
  double h_top = 0.0;
  std::optional<MeanWithError> nu_mass;           // requires samples > 0
  std::optional<MeanWithError> quadrature_value;  // entropy via the nu mass
  std::optional<BirkhoffEstimate> birkhoff;       // requires nsteps > 0
  long samples = 0;
  long nsteps = 0;
  std::uint64_t seed = 0;
};

EntropyReport make_report(const MarkedPolygon& poly, long samples, long nsteps,
                          std::uint64_t seed, int threads = 1);

}  // namespace bsmap
