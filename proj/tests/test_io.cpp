#include <doctest.h>

#include <cmath>

#include "bsmap/io.hpp"
#include "test_util.hpp"

using namespace bsmap;

TEST_CASE("fmt17 round-trips doubles exactly") {
  auto rng = testutil::fixed_rng();
  std::uniform_real_distribution<double> unif(-10.0, 10.0);
  for (int k = 0; k < 1000; ++k) {
    const double x = std::exp(unif(rng)) * (unif(rng) < 0 ? -1 : 1);
    CHECK(std::stod(io::fmt17(x)) == x);
  }
  CHECK(io::fmt17(0.5) == "0.5");
}

TEST_CASE("polygon document round trip") {
  const MarkedPolygon poly = regular_polygon(2);
  const std::string doc = io::polygon_json(poly);
  const MarkedPolygon back = io::parse_polygon_json(doc);
  for (int i = 1; i <= poly.n; ++i) {
    CHECK(circ_dist(back.P(i), poly.P(i)) == 0.0);
    CHECK(circ_dist(back.Q(i), poly.Q(i)) == 0.0);
    CHECK(back.T(i).a == poly.T(i).a);
    CHECK(std::abs(back.V(i).z - poly.V(i).z) < 1e-12);
  }
  // emitted form is stable under a parse/emit cycle
  CHECK(io::polygon_json(back) == doc);
}

TEST_CASE("parameter document round trip") {
  FenchelNielsen6 p = regular_fn_parameters();
  p.sigma_t = -0.25;
  p.tau_t = 0.125;
  const FenchelNielsen6 back = io::parse_params_json(io::params_json(p));
  CHECK(back.alpha == p.alpha);
  CHECK(back.beta == p.beta);
  CHECK(back.gamma == p.gamma);
  CHECK(back.sigma_t == p.sigma_t);
  CHECK(back.tau_t == p.tau_t);
  CHECK(back.rho_t == p.rho_t);
}

TEST_CASE("sweep csv format") {
  SweepResult result;
  result.parameter = "beta";
  result.rows.push_back({1.5, 20.0, 1.9739208802178716, 2.25});
  const std::string csv = io::sweep_csv(result);
  CHECK(csv.rfind("param,value,perimeter,entropy,h_top\n", 0) == 0);
  CHECK(csv.find("beta,1.5,20,1.9739208802178716,2.25\n") != std::string::npos);
}

TEST_CASE("attractor csv format") {
  const std::vector<GeodesicPair> pairs{{BoundaryPoint(0.25), BoundaryPoint(3.5)}};
  const std::string csv = io::attractor_csv(pairs);
  CHECK(csv == "u_angle,w_angle\n0.25,3.5\n");
}

TEST_CASE("check lines format") {
  const std::vector<Check> checks{{"some-check", 1.5e-9, 0.0, 1e-8, true},
                                  {"other-check", 2.0, 0.0, 1e-8, false}};
  const std::string lines = io::check_lines(checks);
  CHECK(lines.find("PASS some-check 1.5e-09 0 1e-08\n") != std::string::npos);
  CHECK(lines.find("FAIL other-check 2 0 1e-08\n") != std::string::npos);
}

TEST_CASE("report document carries the polygon and the estimates") {
  const MarkedPolygon poly = regular_polygon(2);
  const EntropyReport rep = make_report(poly, 20000, 0, 7);
  const std::string doc = io::report_json(rep, poly);
  CHECK(doc.find("\"formula_value\"") != std::string::npos);
  CHECK(doc.find("\"nu_mass\"") != std::string::npos);
  CHECK(doc.find("\"birkhoff\": null") != std::string::npos);
  CHECK(doc.find("\"polygon\"") != std::string::npos);
  CHECK(doc.find("\"seed\": 7") != std::string::npos);
}
