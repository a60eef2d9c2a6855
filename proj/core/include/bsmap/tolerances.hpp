#pragma once

// All numeric tolerances live here so precision experiments have a single
// knob. Values are absolute unless the name says otherwise.
namespace bsmap::tol {

inline constexpr double det_min            = 1e-12;  // minimal |det| after det-1 normalization
inline constexpr double pole               = 1e-14;  // |cz+d| at or below this is a pole
inline constexpr double boundary           = 1e-9;   // circle-preservation slack
inline constexpr double angle_eq           = 1e-12;  // boundary points equal below this circular distance
inline constexpr double endpoint_distinct  = 1e-12;  // geodesic endpoints must be farther apart
inline constexpr double geodesic_rep       = 1e-10;  // cached Euclidean representation consistency
inline constexpr double antipodal          = 1e-10;  // endpoints antipodal below this -> diameter
inline constexpr double disk_interior      = 1e-12;  // |z| < 1 - disk_interior
inline constexpr double trace_margin       = 1e-10;  // |tr| > 2 + trace_margin -> hyperbolic
inline constexpr double fixed_point        = 1e-9;   // apply(m, fp) residual
inline constexpr double polygon_check      = 1e-8;   // side/angle/endpoint-mapping invariants
inline constexpr double vertex_on_side     = 1e-8;
inline constexpr double area_gauss_bonnet  = 1e-7;
inline constexpr double relation_residual  = 1e-8;   // group defining relation, scalar-identity distance
inline constexpr double vertex_grazing     = 1e-10;  // exit queries near a vertex are ambiguous
inline constexpr double markov_match       = 1e-6;   // image endpoint -> partition point matching
inline constexpr double power_iter_rel     = 1e-12;
inline constexpr double near_endpoint_warn = 1e-13;  // orbit point this close to a branch endpoint is logged
inline constexpr double isoareal_slack     = 1e-6;

}  // namespace bsmap::tol
