#include <doctest.h>

#include <cmath>

#include "bsmap/maskit.hpp"
#include "bsmap/moebius.hpp"
#include "test_util.hpp"

using namespace bsmap;

TEST_CASE("apply: identity fixes points") {
  const Complex z(0.3, 0.1);
  CHECK(std::abs(apply(DiskMoebius::identity(), z) - z) == 0.0);
}

TEST_CASE("apply: rotation by pi/2 sends 1 to i") {
  const DiskMoebius r = DiskMoebius::rotation(kPi / 2);
  CHECK(std::abs(apply(r, Complex(1.0, 0.0)) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("apply: the C generator at the regular surface") {
  // C sends 0 to i tanh(gamma); its fixed points are +-i
  const Genus2Group g = build_group(regular_fn_parameters());
  const double gamma = std::acosh(1.0 + std::sqrt(3.0));
  const Complex expected(0.0, std::tanh(gamma));
  CHECK(std::abs(apply(g.C, Complex(0.0, 0.0)) - expected) < 1e-12);

  const FixedPoints fp = fixed_points(g.C);
  for (const BoundaryPoint b : {fp.attracting, fp.repelling}) {
    CHECK(std::abs(std::abs(b.unit().imag())) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(circ_dist(apply(g.C, b), b) < 1e-9);
  }
}

TEST_CASE("apply: pole raises") {
  const DiskMoebius m{1.0, 0.0, 1.0, -1.0};  // pole at z = 1
  CHECK_THROWS_AS(apply(m, Complex(1.0, 0.0)), PoleAtInput);
}

TEST_CASE("compose with identity and double inverse") {
  auto rng = testutil::fixed_rng();
  const DiskMoebius m = testutil::random_isometry(rng);
  const DiskMoebius mi = compose(m, DiskMoebius::identity());
  CHECK(m.a == mi.a);
  CHECK(m.d == mi.d);

  // inverse(inverse(m)) = det(m) * m, a scalar multiple
  const DiskMoebius mii = inverse(inverse(m));
  CHECK(scalar_identity_residual(compose(inverse(mii), m)) < 1e-12);

  CHECK(scalar_identity_residual(compose(m, inverse(m))) < 1e-12);
}

TEST_CASE("compose is the functional composition") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 50; ++k) {
    const DiskMoebius m1 = testutil::random_isometry(rng);
    const DiskMoebius m2 = testutil::random_isometry(rng);
    const Complex z = testutil::random_disk_point(rng).z;
    CHECK(std::abs(apply(compose(m1, m2), z) - apply(m1, apply(m2, z))) < 1e-10);
  }
}

TEST_CASE("fixed points of a dilation conjugated into the disk") {
  // half-plane dilation z -> e^{2s} z has repelling 0 and attracting infinity;
  // the conjugation K = (i 1; 1 i)/2, K^{-1} ~ (-i 1; 1 -i) carries them to
  // -i and i
  const double s = 0.4;
  const DiskMoebius dil{std::exp(s), 0.0, 0.0, std::exp(-s)};
  const DiskMoebius k{Complex(0, 0.5), Complex(0.5, 0), Complex(0.5, 0), Complex(0, 0.5)};
  const DiskMoebius kinv{Complex(0, -1), Complex(1, 0), Complex(1, 0), Complex(0, -1)};
  const FixedPoints fp = fixed_points(compose(k, compose(dil, kinv)));
  CHECK(circ_dist(fp.attracting, BoundaryPoint::from_complex(Complex(0, 1))) < 1e-9);
  CHECK(circ_dist(fp.repelling, BoundaryPoint::from_complex(Complex(0, -1))) < 1e-9);
}

TEST_CASE("identity and rotations are not hyperbolic") {
  CHECK_THROWS_AS(fixed_points(DiskMoebius::identity()), NotHyperbolic);
  CHECK_THROWS_AS(fixed_points(DiskMoebius::rotation(1.0)), NotHyperbolic);
}

TEST_CASE("derivative modulus basics") {
  auto rng = testutil::fixed_rng();
  CHECK(derivative_modulus(DiskMoebius::identity(), Complex(0.2, 0.4)) == 1.0);
  const DiskMoebius r = DiskMoebius::rotation(1.3);
  for (int k = 0; k < 10; ++k)
    CHECK(derivative_modulus(r, testutil::random_boundary(rng).unit()) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("derivative at the repelling fixed point is the multiplier") {
  const double ell = 0.9;
  const double h = std::cosh(0.5 * ell), s = std::sinh(0.5 * ell);
  const DiskMoebius boost{h, s, s, h};  // fixes +-1, repelling at -1
  CHECK(derivative_modulus(boost, Complex(-1.0, 0.0)) ==
        doctest::Approx(std::exp(ell)).epsilon(1e-12));

  // finite differences of the induced circle map near the fixed point
  const double step = 1e-6;
  const double a0 = std::arg(apply(boost, std::polar(1.0, kPi)));
  const double a1 = std::arg(apply(boost, std::polar(1.0, kPi + step)));
  const double fd = BoundaryPoint::reduce(a1 - a0) / step;
  CHECK(std::abs(fd - std::exp(ell)) < 1e-4);
}

TEST_CASE("property: boundary preservation of built isometries") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 20; ++k) {
    const DiskMoebius m = testutil::random_isometry(rng);
    for (int j = 0; j < 100; ++j) {
      const Complex z = testutil::random_boundary(rng).unit();
      CHECK(std::abs(std::abs(apply(m, z)) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("property: derivative chain rule") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 200; ++k) {
    const DiskMoebius m1 = testutil::random_isometry(rng);
    const DiskMoebius m2 = testutil::random_isometry(rng);
    const Complex z = testutil::random_boundary(rng).unit();
    const double lhs = derivative_modulus(compose(m1, m2), z);
    const double rhs = derivative_modulus(m1, apply(m2, z)) * derivative_modulus(m2, z);
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, rhs));
  }
}

TEST_CASE("property: fixed points are fixed") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 100; ++k) {
    const DiskMoebius m = testutil::random_hyperbolic(rng);
    const FixedPoints fp = fixed_points(m);
    CHECK(circ_dist(apply(m, fp.attracting), fp.attracting) < 1e-9);
    CHECK(circ_dist(apply(m, fp.repelling), fp.repelling) < 1e-9);
    CHECK(derivative_modulus(m.normalized(), fp.attracting.unit()) < 1.0);
    CHECK(derivative_modulus(m.normalized(), fp.repelling.unit()) > 1.0);
  }
}

TEST_CASE("hyp_distance closed forms") {
  const DiskPoint o(Complex(0, 0));
  CHECK(hyp_distance(o, o) == 0.0);
  CHECK(hyp_distance(o, DiskPoint(Complex(std::tanh(0.5), 0))) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hyp_distance against metric quadrature") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 10; ++k) {
    const DiskPoint p = testutil::random_disk_point(rng);
    const DiskPoint q = testutil::random_disk_point(rng);
    if (std::abs(p.z - q.z) < 1e-3) continue;
    const double closed = hyp_distance(p, q);
    const double quad = testutil::hyp_length_quadrature(p.z, q.z, 10000);
    CHECK(std::abs(closed - quad) < 1e-6);
  }
}

TEST_CASE("property: hyperbolic distance is a Moebius invariant") {
  auto rng = testutil::fixed_rng();
  for (int k = 0; k < 1000; ++k) {
    const DiskMoebius m = testutil::random_isometry(rng);
    const DiskPoint p = testutil::random_disk_point(rng);
    const DiskPoint q = testutil::random_disk_point(rng);
    CHECK(std::abs(hyp_distance(p, q) - hyp_distance(apply(m, p), apply(m, q))) < 1e-9);
  }
}

TEST_CASE("disk point invariant") {
  CHECK_THROWS_AS(DiskPoint(Complex(1.0, 0.0)), Error);
  CHECK_THROWS_AS(DiskPoint(Complex(0.9999999999999999, 0.0)), Error);
}
