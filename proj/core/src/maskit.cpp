#include "bsmap/maskit.hpp"

#include <cmath>

#include "quad_util.hpp"

namespace bsmap {

FenchelNielsen6 regular_fn_parameters() {
  FenchelNielsen6 p;
  p.alpha = 0.5 * std::acosh(1.0 + std::sqrt(3.0));
  p.beta = 2.0 * p.alpha;
  p.gamma = 2.0 * p.alpha;
  return p;
}

namespace {

using quad::QMatrix;
using Real = quad::Real;

void require_lengths(const FenchelNielsen6& p) {
  if (!(p.alpha > 0.0 && p.beta > 0.0 && p.gamma > 0.0))
    throw OutOfDomain("length parameters must be positive");
}

// coth(beta) cosh(sigma) cosh(tau) + sinh(sigma) sinh(tau) - 1
//   = (coth(beta) - 1) cosh(sigma) cosh(tau) + 2 sinh^2((sigma+tau)/2),
// both terms nonnegative, so the arccosh argument stays >= 1 and the excess
// keeps full relative precision even when coth(beta) rounds to 1.
Real mu_arg_excess(const FenchelNielsen6& p) {
  const Real coth_excess = 2 / expm1q(2 * Real(p.beta));
  const Real half_sum = sinhq((Real(p.sigma_t) + Real(p.tau_t)) / 2);
  const Real y = coth_excess * coshq(Real(p.sigma_t)) * coshq(Real(p.tau_t)) +
                 2 * half_sum * half_sum;
  if (y < 0) throw OutOfDomain("arccosh argument below 1");
  return y;
}

struct QGroup {
  QMatrix A, B, C, D;
  QMatrix S[12], T[12];
  Real mu = 0, delta = 0;
};

QGroup build_qgroup(const FenchelNielsen6& p) {
  const Real alpha = p.alpha, gamma = p.gamma;
  const Real sig = p.sigma_t, tau = p.tau_t, rho = p.rho_t;

  const Real y = mu_arg_excess(p);
  const Real cosh_mu = 1 + y;
  const Real sinh_mu = sqrtq(y * (2 + y));

  QGroup g;
  g.mu = log1pq(y + sinh_mu);

  const Real coth_alpha = coshq(alpha) / sinhq(alpha);
  const Real delta_arg =
      (coshq(gamma) * cosh_mu - coth_alpha * sinhq(gamma) * sinh_mu -
       sinhq(sig) * sinhq(rho)) /
      (coshq(sig) * coshq(rho));
  if (!(fabsq(delta_arg) > 1)) throw OutOfDomain("arccoth argument inside [-1, 1]");
  g.delta = atanhq(1 / delta_arg);

  {
    const Real k = sinhq(alpha) / sinh_mu;
    const Real ca = coshq(alpha);
    g.A = {{ca, k}, {0, -k * cosh_mu}, {0, k * cosh_mu}, {ca, -k}};
  }
  {
    const Real k = sinhq(Real(p.beta)) / coshq(tau);
    const Real cb = coshq(Real(p.beta));
    const Real ks = k * sinhq(sig), kc = k * coshq(sig), kt = k * sinhq(tau);
    g.B = {{cb, ks}, {kc, kt}, {kc, -kt}, {cb, -ks}};
  }
  {
    const Real ch = coshq(gamma), sh = sinhq(gamma);
    g.C = {{ch, 0}, {0, sh}, {0, -sh}, {ch, 0}};
  }
  {
    const Real k = sinhq(g.delta) / coshq(rho);
    const Real cd = coshq(g.delta);
    const Real kg = k * sinhq(gamma + sig), kc = k * coshq(gamma + sig), kr = k * sinhq(rho);
    g.D = {{cd, -kg}, {-kc, -kr}, {-kc, kr}, {cd, kg}};
  }

  const QMatrix Ai = quad::inverse(g.A), Bi = quad::inverse(g.B);
  const QMatrix Ci = quad::inverse(g.C), Di = quad::inverse(g.D);
  const auto mul2 = [](const QMatrix& x, const QMatrix& y) { return quad::compose(x, y); };
  const auto mul3 = [&](const QMatrix& x, const QMatrix& y, const QMatrix& z) {
    return quad::compose(quad::compose(x, y), z);
  };
  const auto mul4 = [&](const QMatrix& x, const QMatrix& y, const QMatrix& z,
                        const QMatrix& w) {
    return quad::compose(quad::compose(quad::compose(x, y), z), w);
  };

  g.S[0] = mul3(Ci, Di, g.C);
  g.S[1] = mul2(g.A, g.C);
  g.S[2] = mul4(g.A, g.B, g.D, Ai);
  g.S[3] = Ai;
  g.S[4] = mul2(Di, Bi);
  g.S[5] = mul2(g.C, g.A);
  g.S[6] = g.D;
  g.S[7] = mul4(g.D, Ai, Ci, Di);
  g.S[8] = mul2(Bi, Di);
  g.S[9] = mul3(Bi, g.A, g.B);
  g.S[10] = mul4(Ci, g.D, g.C, g.B);
  g.S[11] = mul4(Ci, Bi, Ai, g.B);

  g.T[0] = g.C;
  g.T[1] = mul3(Ci, g.D, g.C);
  g.T[2] = Ai;
  g.T[3] = Bi;
  g.T[4] = g.A;
  g.T[5] = g.D;
  g.T[6] = Ci;
  g.T[7] = Di;
  g.T[8] = mul3(Bi, g.A, g.B);
  g.T[9] = g.B;
  g.T[10] = mul3(Bi, Ai, g.B);
  g.T[11] = mul3(Ci, Di, g.C);

  return g;
}

}  // namespace

double aux_mu(const FenchelNielsen6& p) {
  require_lengths(p);
  const Real y = mu_arg_excess(p);
  return static_cast<double>(log1pq(y + sqrtq(y * (2 + y))));
}

double aux_delta(const FenchelNielsen6& p, double mu) {
  require_lengths(p);
  const double coth_alpha = std::cosh(p.alpha) / std::sinh(p.alpha);
  const double num = std::cosh(p.gamma) * std::cosh(mu) -
                     coth_alpha * std::sinh(p.gamma) * std::sinh(mu) -
                     std::sinh(p.sigma_t) * std::sinh(p.rho_t);
  const double arg = num / (std::cosh(p.sigma_t) * std::cosh(p.rho_t));
  if (!(std::abs(arg) > 1.0)) throw OutOfDomain("arccoth argument inside [-1, 1]");
  return std::atanh(1.0 / arg);
}

Genus2Group build_group(const FenchelNielsen6& p) {
  require_lengths(p);
  Genus2Group g;
  g.params = p;

  const QGroup qg = build_qgroup(p);
  g.mu = static_cast<double>(qg.mu);
  g.delta = static_cast<double>(qg.delta);

  g.A = quad::to_double(qg.A);
  g.B = quad::to_double(qg.B);
  g.C = quad::to_double(qg.C);
  g.D = quad::to_double(qg.D);
  for (int k = 0; k < 12; ++k) {
    g.S[k] = quad::to_double(qg.S[k]);
    g.T[k] = quad::to_double(qg.T[k]);
    const quad::FixedAngles fp = quad::fixed_angles(qg.S[k]);
    g.repelling_angle[k] = fp.repelling;
    g.attracting_angle[k] = fp.attracting;
  }

  {
    QMatrix relation = qg.A;
    const QMatrix rest[] = {qg.B,
                            qg.D,
                            quad::inverse(qg.A),
                            quad::inverse(qg.C),
                            quad::inverse(qg.D),
                            qg.C,
                            quad::inverse(qg.B)};
    for (const QMatrix& m : rest) relation = quad::compose(relation, m);
    g.relation_residual = quad::scalar_residual(relation);
    g.relation_tolerance = tol::relation_residual;
    if (g.relation_residual > g.relation_tolerance)
      throw CheckFailure("group check failed: relation-residual");
  }

  for (int idx = 1; idx <= 12; ++idx) {
    const int s = sigma_pairing(idx, 2);
    if (quad::scalar_residual(quad::compose(qg.T[s - 1], qg.T[idx - 1])) >
        tol::relation_residual)
      throw CheckFailure("group check failed: pairing-involution");
  }
  return g;
}

MarkedPolygon build_polygon(const Genus2Group& group) {
  std::vector<BoundaryPoint> P(12), Q(12);
  for (int idx = 1; idx <= 12; ++idx) {
    P[idx - 1] = BoundaryPoint(group.repelling_angle[idx - 1]);
    Q[idx % 12] = BoundaryPoint(group.attracting_angle[idx - 1]);  // Q_{i+1}
  }
  std::vector<DiskMoebius> T(group.T.begin(), group.T.end());
  return from_side_geodesics(2, std::move(P), std::move(Q), std::move(T));
}

}  // namespace bsmap
