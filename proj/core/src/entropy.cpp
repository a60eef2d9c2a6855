#include "bsmap/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace bsmap {

double entropy_formula(const PolygonMetrics& m, int genus) {
  return kPi * kPi * (4.0 * genus - 4.0) / m.perimeter;
}

double entropy_formula(const MarkedPolygon& poly) {
  return entropy_formula(metrics(poly), poly.genus);
}

double h_max(int genus) {
  if (genus < 2) throw OutOfDomain("genus must be >= 2");
  return kPi * kPi * (4.0 * genus - 4.0) /
         ((8.0 * genus - 4.0) * regular_side_length(genus));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct StratumResult {
  double mean = 0.0;      // stratum mean of the integrand
  double variance = 0.0;  // sample variance of that mean
};

void kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace

MeanWithError nu_mass_quadrature(const MarkedPolygon& poly, long samples,
                                 std::uint64_t seed, int threads) {
  if (samples < 10000) throw OutOfDomain("at least 1e4 samples required");
  if (threads < 1) threads = 1;

  const BoundaryMap bm(poly);
  constexpr int kGrid = 64;
  constexpr long kStrata = kGrid * kGrid;
  const double h = kTwoPi / kGrid;
  const long base = samples / kStrata;
  const long extra = samples % kStrata;

  std::vector<StratumResult> results(kStrata);
  const auto run_range = [&](long lo, long hi) {
    for (long s = lo; s < hi; ++s) {
      const long ns = base + (s < extra ? 1 : 0);
      if (ns == 0) continue;
      std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (s + 1))));
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      const double u0 = (s % kGrid) * h;
      const double w0 = (s / kGrid) * h;
      double sum = 0.0, sumsq = 0.0;
      for (long k = 0; k < ns; ++k) {
        const GeodesicPair p{BoundaryPoint(u0 + h * unif(rng)),
                             BoundaryPoint(w0 + h * unif(rng))};
        double f = 0.0;
        if (circ_dist(p.u, p.w) > tol::endpoint_distinct) {
          try {
            if (bm.exit_side(p)) {
              const double half = 0.5 * (p.u.angle - p.w.angle);
              const double s2 = std::sin(half);
              f = 1.0 / (4.0 * s2 * s2);
            }
          } catch (const AmbiguousExit&) {
            f = 0.0;  // boundary set, measure zero
          }
        }
        sum += f;
        sumsq += f * f;
      }
      const double mean = sum / ns;
      const double var = (ns > 1) ? (sumsq - sum * mean) / (ns - 1) : 0.0;
      results[s] = {mean, std::max(0.0, var) / ns};
    }
  };

  if (threads == 1) {
    run_range(0, kStrata);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (kStrata + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long lo = t * chunk;
      const long hi = std::min<long>(kStrata, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // deterministic merge in stratum order
  const double cell = h * h;
  double mass = 0.0, mass_comp = 0.0, var = 0.0, var_comp = 0.0;
  for (const StratumResult& r : results) {
    kahan_add(mass, mass_comp, cell * r.mean);
    kahan_add(var, var_comp, cell * cell * r.variance);
  }
  return {mass, std::sqrt(var)};
}

double strip_mass(const MarkedPolygon& poly, int side, int grid) {
  if (grid < 100) throw OutOfDomain("grid must be at least 100");
  const int i = poly.wrap(side);
  const double length = hyp_distance(poly.V(i), poly.V(i + 1));
  const double hx = length / grid;
  const double ht = kPi / grid;
  double sum = 0.0, comp = 0.0;
  for (int jx = 0; jx < grid; ++jx) {
    double inner = 0.0;
    for (int jt = 0; jt < grid; ++jt) {
      const double theta = (jt + 0.5) * ht;
      inner += 0.5 * std::sin(theta);
    }
    kahan_add(sum, comp, inner * ht * hx);
  }
  return sum;
}

double strip_mass_nu(const MarkedPolygon& poly, int side, int grid) {
  if (grid < 100) throw OutOfDomain("grid must be at least 100");
  const int i = poly.wrap(side);
  const Complex v0 = poly.V(i).z;
  const Complex v1 = poly.V(i + 1).z;
  const double lo = poly.P(i).angle;
  const double span = ccw_span(poly.P(i).angle, poly.Q(i + 1).angle);
  const double h = span / grid;

  double sum = 0.0, comp = 0.0;
  for (int k = 0; k < grid; ++k) {
    const BoundaryPoint w(lo + (k + 0.5) * h);
    // u-fiber: the arc between the second endpoints of the geodesics from w
    // through the two side vertices, on the far side from w
    const double a = ccw_delta(other_endpoint(w, v0).angle, w.angle);
    const double b = ccw_delta(other_endpoint(w, v1).angle, w.angle);
    const double t0 = std::min(a, b);
    const double t1 = std::max(a, b);
    // closed-form arc mass of dtheta / (4 sin^2((theta - w)/2))
    const double inner = 0.5 * (1.0 / std::tan(0.5 * t0) - 1.0 / std::tan(0.5 * t1));
    kahan_add(sum, comp, inner * h);
  }
  return sum;
}

BirkhoffEstimate birkhoff_entropy(const BoundaryMap& bm, long nsteps, int nseeds,
                                  std::uint64_t seed) {
  if (nsteps < 1) throw OutOfDomain("nsteps must be positive");
  if (nseeds < 1) throw OutOfDomain("nseeds must be positive");
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  std::vector<double> averages;
  averages.reserve(nseeds);
  for (int k = 0; k < nseeds; ++k) {
    const BoundaryPoint x0(unif(rng));
    averages.push_back(bm.orbit_log_derivative_sum(x0, nsteps) / nsteps);
  }
  std::sort(averages.begin(), averages.end());
  BirkhoffEstimate est;
  est.nsteps = nsteps;
  est.spread = averages.back() - averages.front();
  const std::size_t m = averages.size() / 2;
  est.estimate = (averages.size() % 2 == 1) ? averages[m]
                                            : 0.5 * (averages[m - 1] + averages[m]);
  return est;
}

FenchelNielsen6 solve_target_entropy(double target_h, double tolerance) {
  if (tolerance < 1e-10) throw OutOfDomain("tolerance must be at least 1e-10");
  const double hmax = h_max(2);
  if (!(target_h > 0.0) || target_h > hmax + 1e-9)
    throw TargetOutOfRange("target entropy outside (0, H(2)]");

  // Scale all three length coordinates together away from the regular
  // values. Growing lengths grows the perimeter without bound, and spreading
  // the growth over all sides keeps every matrix product well conditioned
  // over the whole solvable entropy range (a single coordinate would need
  // roughly twice the hyperbolic scale for the same perimeter).
  const FenchelNielsen6 reg = regular_fn_parameters();
  const auto params_at = [&reg](double t) {
    FenchelNielsen6 q = reg;
    q.alpha *= t;
    q.beta *= t;
    q.gamma *= t;
    return q;
  };
  const auto entropy_at = [&params_at](double t) {
    return entropy_formula(maskit_polygon(params_at(t)));
  };

  const double ent_reg = entropy_at(1.0);
  if (target_h >= ent_reg) return reg;  // maximum is attained at the regular surface

  // Expand the bracket until the entropy drops below the target. Very
  // stretched polygons stop validating at some scale; when a step runs into
  // that wall the step is halved, so the bracket creeps up to the usable
  // range and anything beyond it is reported, not fabricated.
  constexpr double kScaleCap = 1e3;
  double lo = 1.0, hi = 1.0;
  double step = 0.5;
  double ent_hi = ent_reg;
  while (ent_hi > target_h) {
    const double next = hi + step;
    if (next * reg.beta > kScaleCap)
      throw BracketFailure("entropy did not drop below the target before beta = 1e3");
    try {
      const double e = entropy_at(next);
      lo = hi;
      hi = next;
      ent_hi = e;
    } catch (const Error&) {
      step *= 0.5;
      if (step < 1e-3)
        throw BracketFailure(
            "polygon numerics degrade before the target entropy is reached");
    }
  }

  // entropy decreases along the bracket; bisect
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    double ent_mid = 0.0;
    try {
      ent_mid = entropy_at(mid);
    } catch (const Error&) {
      hi = mid;  // degraded zone sits on the large-scale side
      continue;
    }
    if (std::abs(ent_mid - target_h) <= tolerance) return params_at(mid);
    if (ent_mid > target_h)
      lo = mid;
    else
      hi = mid;
  }
  throw NoConvergence("bisection stalled before reaching the entropy tolerance");
}

namespace {

double& field_by_name(FenchelNielsen6& p, const std::string& name) {
  if (name == "alpha") return p.alpha;
  if (name == "beta") return p.beta;
  if (name == "gamma") return p.gamma;
  if (name == "sigma") return p.sigma_t;
  if (name == "tau") return p.tau_t;
  if (name == "rho") return p.rho_t;
  throw OutOfDomain("unknown parameter name: " + name);
}

}  // namespace

SweepResult sweep_parameter(const std::string& name, const std::vector<double>& values) {
  SweepResult result;
  result.parameter = name;
  for (const double value : values) {
    FenchelNielsen6 p = regular_fn_parameters();
    field_by_name(p, name) = value;
    try {
      const MarkedPolygon poly = maskit_polygon(p);
      const PolygonMetrics m = metrics(poly);
      const MarkovData md = build_markov(BoundaryMap(poly));
      SweepRow row;
      row.parameter_value = value;
      row.perimeter = m.perimeter;
      row.entropy = entropy_formula(m, poly.genus);
      row.h_top = topological_entropy(md);
      const std::string text = matrix_text(md);
      if (result.matrix.empty())
        result.matrix = text;
      else if (text != result.matrix)
        result.matrix_constant = false;
      result.rows.push_back(row);
    } catch (const Error&) {
      result.skipped_values.push_back(value);
    }
  }
  return result;
}

EntropyReport make_report(const MarkedPolygon& poly, long samples, long nsteps,
                          std::uint64_t seed, int threads) {
  EntropyReport rep;
  rep.genus = poly.genus;
  const PolygonMetrics m = metrics(poly);
  rep.perimeter = m.perimeter;
  rep.formula_value = entropy_formula(m, poly.genus);
  rep.h_of_g = h_max(poly.genus);
  const BoundaryMap bm(poly);
  rep.h_top = topological_entropy(build_markov(bm));
  rep.samples = samples;
  rep.nsteps = nsteps;
  rep.seed = seed;
  if (samples > 0) {
    const MeanWithError mass = nu_mass_quadrature(poly, samples, seed, threads);
    rep.nu_mass = mass;
    const double value = kPi * kPi * (4.0 * poly.genus - 4.0) / mass.value;
    rep.quadrature_value = MeanWithError{value, value * mass.std_error / mass.value};
  }
  if (nsteps > 0) rep.birkhoff = birkhoff_entropy(bm, nsteps, 5, seed);
  return rep;
}

}  // namespace bsmap
