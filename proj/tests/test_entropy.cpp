#include <doctest.h>

#include <cmath>

#include "bsmap/entropy.hpp"
#include "test_util.hpp"

using namespace bsmap;

TEST_CASE("entropy formula at the regular genus-2 surface") {
  const double closed = kPi * kPi / (3.0 * std::acosh(1.0 + std::sqrt(3.0)));
  CHECK(std::abs(entropy_formula(regular_polygon(2)) - closed) < 1e-12);
  CHECK(std::abs(closed - 1.9784) < 1e-4);
  CHECK(entropy_formula(regular_polygon(2)) == doctest::Approx(h_max(2)).epsilon(1e-12));
}

TEST_CASE("the two closed forms of the entropy agree") {
  for (const FenchelNielsen6& p : testutil::sample_polygons(10)) {
    const MarkedPolygon poly = maskit_polygon(p);
    const PolygonMetrics m = metrics(poly);
    CHECK(std::abs(entropy_formula(m, 2) - kPi * m.area / m.perimeter) < 1e-9);
  }
}

TEST_CASE("stretched surfaces sit strictly below the maximum") {
  FenchelNielsen6 p = regular_fn_parameters();
  p.beta *= 1.5;
  CHECK(entropy_formula(maskit_polygon(p)) < h_max(2));
}

TEST_CASE("maximal entropy values and their limit") {
  CHECK(std::abs(h_max(2) - 1.9784) < 1e-4);

  // genus-3 value against an extended-precision evaluation of the closed form
  const long double h3 = static_cast<long double>(kPi) * kPi * 8.0L /
                         (20.0L * acoshl(1.0L + 2.0L * cosl(static_cast<long double>(kPi) / 10.0L)));
  CHECK(std::abs(h_max(3) - static_cast<double>(h3)) < 1e-12);
  CHECK(std::abs(h_max(3) - 2.28531) < 1e-4);

  const double limit = kPi * kPi / (2.0 * std::acosh(3.0));
  CHECK(limit < 2.8);
  for (int g = 2; g < 50; ++g) CHECK(h_max(g) < h_max(g + 1));
  CHECK(h_max(50) < limit);
}

TEST_CASE("entropy bounded by the maximum across the chart") {
  for (const FenchelNielsen6& p : testutil::sample_polygons(25))
    CHECK(entropy_formula(maskit_polygon(p)) <= h_max(2) + 1e-9);
}

TEST_CASE("nu mass of the geometric domain estimates the perimeter") {
  const MarkedPolygon poly = regular_polygon(2);
  const double perimeter = metrics(poly).perimeter;
  const MeanWithError mass = nu_mass_quadrature(poly, 400000, testutil::kSeed);
  CHECK(std::abs(mass.value - perimeter) < 3.0 * mass.std_error);
  CHECK(mass.std_error < 0.01 * perimeter);
}

TEST_CASE("quadrature error shrinks like one over sqrt samples") {
  const MarkedPolygon poly = regular_polygon(2);
  const MeanWithError a = nu_mass_quadrature(poly, 200000, testutil::kSeed);
  const MeanWithError b = nu_mass_quadrature(poly, 400000, testutil::kSeed);
  const double ratio = b.std_error / a.std_error;
  CHECK(ratio > 0.707 * 0.8);
  CHECK(ratio < 0.707 * 1.2);
}

TEST_CASE("quadrature is deterministic and thread-count independent") {
  const MarkedPolygon poly = regular_polygon(2);
  const MeanWithError a = nu_mass_quadrature(poly, 100000, 42, 1);
  const MeanWithError b = nu_mass_quadrature(poly, 100000, 42, 1);
  const MeanWithError c = nu_mass_quadrature(poly, 100000, 42, 4);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  CHECK(a.std_error == c.std_error);
}

TEST_CASE("quadrature sample floor") {
  CHECK_THROWS_AS(nu_mass_quadrature(regular_polygon(2), 100, 1), OutOfDomain);
}

TEST_CASE("strip masses reproduce the side lengths") {
  const MarkedPolygon poly = regular_polygon(2);
  const PolygonMetrics m = metrics(poly);
  const double side = std::acosh(1.0 + std::sqrt(3.0));
  double total_coords = 0.0, total_nu = 0.0;
  for (int i = 1; i <= poly.n; ++i) {
    const double coords = strip_mass(poly, i, 300);
    const double nu = strip_mass_nu(poly, i, 300);
    CHECK(std::abs(coords - m.side_lengths[i - 1]) < 1e-3);
    CHECK(std::abs(nu - m.side_lengths[i - 1]) < 1e-3);
    CHECK(std::abs(coords - side) < 1e-3);
    total_coords += coords;
    total_nu += nu;
  }
  CHECK(std::abs(total_coords - m.perimeter) < 1e-2);
  CHECK(std::abs(total_nu - m.perimeter) < 1e-2);
}

TEST_CASE("strip masses on a non-regular polygon") {
  FenchelNielsen6 p = regular_fn_parameters();
  p.beta *= 1.3;
  const MarkedPolygon poly = maskit_polygon(p);
  const PolygonMetrics m = metrics(poly);
  for (int i = 1; i <= poly.n; ++i)
    CHECK(std::abs(strip_mass_nu(poly, i, 400) - m.side_lengths[i - 1]) < 1e-3);
}

TEST_CASE("strip mass grid floor") {
  CHECK_THROWS_AS(strip_mass(regular_polygon(2), 1, 10), OutOfDomain);
}

TEST_CASE("orbit averages converge to the entropy") {
  const MarkedPolygon poly = regular_polygon(2);
  const BoundaryMap bm(poly);
  const double formula = entropy_formula(poly);
  const BirkhoffEstimate est = birkhoff_entropy(bm, 200000, 3, testutil::kSeed);
  CHECK(std::abs(est.estimate - formula) / formula < 0.02);
  CHECK(est.spread < 0.1);
}

TEST_CASE("orbit averages track the formula off the regular surface") {
  FenchelNielsen6 p = regular_fn_parameters();
  p.beta *= 1.5;
  const MarkedPolygon poly = maskit_polygon(p);
  const BoundaryMap bm(poly);
  const double formula = entropy_formula(poly);
  const BirkhoffEstimate est = birkhoff_entropy(bm, 200000, 3, testutil::kSeed);
  CHECK(std::abs(est.estimate - formula) / formula < 0.02);
}

TEST_CASE("solver hits interior targets") {
  for (const double target : {1.9, 1.5, 1.0, 0.5}) {
    const FenchelNielsen6 p = solve_target_entropy(target, 1e-8);
    CHECK(std::abs(entropy_formula(maskit_polygon(p)) - target) <= 1e-8);
  }
}

TEST_CASE("solver returns the regular surface at the maximum") {
  const FenchelNielsen6 p = solve_target_entropy(h_max(2), 1e-8);
  const FenchelNielsen6 reg = regular_fn_parameters();
  CHECK(p.beta == reg.beta);
  CHECK(p.alpha == reg.alpha);
}

TEST_CASE("solver rejects unreachable targets") {
  CHECK_THROWS_AS(solve_target_entropy(3.0, 1e-8), TargetOutOfRange);
  CHECK_THROWS_AS(solve_target_entropy(0.0, 1e-8), TargetOutOfRange);
  CHECK_THROWS_AS(solve_target_entropy(1.0, 1e-12), OutOfDomain);
}

TEST_CASE("sweep over one length coordinate") {
  std::vector<double> values;
  for (int k = 0; k <= 40; ++k) values.push_back(1.2 + 1.4 * k / 40.0);
  const SweepResult result = sweep_parameter("beta", values);
  CHECK(result.rows.size() + result.skipped_values.size() == values.size());
  CHECK(result.rows.size() >= 35);
  CHECK(result.matrix_constant);

  const double beta_reg = regular_fn_parameters().beta;
  double best_value = 0.0, best_entropy = 0.0, h_top_min = 1e9, h_top_max = 0.0;
  for (const SweepRow& row : result.rows) {
    CHECK(std::abs(row.entropy * row.perimeter - 4.0 * kPi * kPi) < 1e-9);
    if (row.entropy > best_entropy) {
      best_entropy = row.entropy;
      best_value = row.parameter_value;
    }
    h_top_min = std::min(h_top_min, row.h_top);
    h_top_max = std::max(h_top_max, row.h_top);
  }
  const double step = values[1] - values[0];
  CHECK(std::abs(best_value - beta_reg) <= step);
  CHECK(h_top_max - h_top_min < 1e-12);
}

TEST_CASE("sweep skips out-of-chart values") {
  const SweepResult result = sweep_parameter("beta", {0.5, 0.8, regular_fn_parameters().beta});
  CHECK(result.skipped_values.size() == 2);
  CHECK(result.rows.size() == 1);
}

TEST_CASE("sweep rejects unknown parameter names") {
  CHECK_THROWS_AS(sweep_parameter("epsilon", {1.0}), OutOfDomain);
}

TEST_CASE("report assembles every requested estimate") {
  const MarkedPolygon poly = regular_polygon(2);
  const EntropyReport rep = make_report(poly, 50000, 50000, testutil::kSeed);
  CHECK(rep.formula_value == doctest::Approx(h_max(2)).epsilon(1e-12));
  CHECK(rep.formula_value <= rep.h_of_g + 1e-9);
  CHECK(rep.formula_value < rep.h_top);
  REQUIRE(rep.nu_mass.has_value());
  REQUIRE(rep.quadrature_value.has_value());
  REQUIRE(rep.birkhoff.has_value());
  CHECK(std::abs(rep.nu_mass->value - rep.perimeter) < 4.0 * rep.nu_mass->std_error);

  const EntropyReport bare = make_report(poly, 0, 0, testutil::kSeed);
  CHECK(!bare.nu_mass.has_value());
  CHECK(!bare.birkhoff.has_value());
}
