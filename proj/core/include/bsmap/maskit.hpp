#pragma once

#include <array>

#include "bsmap/polygon.hpp"

namespace bsmap {

/// Maskit's six Fenchel-Nielsen coordinates for genus 2: three length-type
/// parameters (positive) and three twist-type parameters. Twist fields carry
/// a _t suffix to avoid clashing with the side pairing sigma.
struct FenchelNielsen6 {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double sigma_t = 0.0;
  double tau_t = 0.0;
  double rho_t = 0.0;
};

/// Coordinates of the surface whose fundamental 12-gon is regular:
/// alpha = arccosh(1+sqrt(3))/2, beta = gamma = 2 alpha, twists zero.
FenchelNielsen6 regular_fn_parameters();

/// mu = arccosh(coth(beta) cosh(sigma) cosh(tau) + sinh(sigma) sinh(tau)).
/// The argument never drops below 1 for valid parameters; evaluation is
/// arranged so the excess over 1 keeps full relative precision even for
/// large beta.
double aux_mu(const FenchelNielsen6& p);

/// delta = arccoth((cosh(gamma) cosh(mu) - coth(alpha) sinh(gamma) sinh(mu)
///                  - sinh(sigma) sinh(rho)) / (cosh(sigma) cosh(rho))).
/// Throws OutOfDomain when the argument lands in [-1, 1], which means the
/// parameters left the chart.
double aux_delta(const FenchelNielsen6& p, double mu);

/// Generators of the genus-2 group in disk coordinates plus the twelve axis
/// transformations S_i and side pairings T_i. The group satisfies
/// A B D A^{-1} C^{-1} D^{-1} C B^{-1} = Id up to scalar.
struct Genus2Group {
  FenchelNielsen6 params;
  double mu = 0.0;
  double delta = 0.0;
  DiskMoebius A, B, C, D;
  std::array<DiskMoebius, 12> S;  // S_1..S_12, axis of S_i carries side i
  std::array<DiskMoebius, 12> T;  // T_1..T_12
  // fixed-point angles of the S_i, computed alongside the matrices
  std::array<double, 12> repelling_angle{};
  std::array<double, 12> attracting_angle{};
  double relation_residual = 0.0;
  double relation_tolerance = 0.0;

  const DiskMoebius& axis_map(int i) const { return S[(i - 1) % 12]; }
  const DiskMoebius& pairing(int i) const { return T[(i - 1) % 12]; }
};

Genus2Group build_group(const FenchelNielsen6& p);

/// P_i is the repelling and Q_{i+1} the attracting fixed point of S_i; the
/// polygon is assembled from those side geodesics with the table pairings.
MarkedPolygon build_polygon(const Genus2Group& group);

inline MarkedPolygon maskit_polygon(const FenchelNielsen6& p) {
  return build_polygon(build_group(p));
}

}  // namespace bsmap
