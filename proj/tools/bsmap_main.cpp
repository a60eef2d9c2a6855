// bsmap command line: constructs fundamental polygons, runs the entropy
// computations and their verification suite, and emits plot-ready data.
// stdout carries data, stderr carries logs; exit codes: 0 success,
// 2 usage/domain error, 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsmap/entropy.hpp"
#include "bsmap/io.hpp"

namespace {

using namespace bsmap;

constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct Options {
  int genus = 2;
  FenchelNielsen6 params = regular_fn_parameters();
  bool maskit_given = false;
  long samples = 0;
  long nsteps = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string param;
  double from = 0.0, to = 0.0;
  long steps = 0;
  double target = 0.0;
  double tolerance = 1e-8;
  std::string out;
  std::string format = "json";
  int threads = 1;
  bool corrupt = false;
};

void emit(const Options& opt, const std::string& data) {
  if (opt.out.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + opt.out);
  file << data;
}

MarkedPolygon build_from_options(const Options& opt) {
  if (opt.maskit_given) {
    if (opt.genus != 2) throw OutOfDomain("maskit parameters require genus 2");
    return maskit_polygon(opt.params);
  }
  if (opt.genus < 2) throw OutOfDomain("genus must be >= 2");
  return regular_polygon(opt.genus);
}

int run_report(const Options& opt, bool maskit) {
  Options local = opt;
  local.maskit_given = maskit;
  const MarkedPolygon poly = build_from_options(local);
  const EntropyReport rep = make_report(poly, opt.samples, opt.nsteps, opt.seed, opt.threads);
  if (opt.samples > 0 || opt.nsteps > 0)
    std::cerr << "seed = " << opt.seed << "\n";
  emit(opt, io::report_json(rep, poly));
  return 0;
}

std::vector<Check> verification_checks(const Options& opt) {
  Options local = opt;
  MarkedPolygon poly = build_from_options(local);
  if (opt.corrupt) {
    // test hook: perturb one pairing so the endpoint-mapping check trips
    poly.pairings[0].a += Complex(1e-3, 0.0);
  }

  std::vector<Check> checks = validate(poly);

  if (opt.maskit_given && !opt.corrupt) {
    const Genus2Group group = build_group(opt.params);
    DiskMoebius relation = DiskMoebius::identity();
    for (const DiskMoebius& m :
         {group.A, group.B, group.D, inverse(group.A), inverse(group.C),
          inverse(group.D), group.C, inverse(group.B)})
      relation = compose(relation, m);
    const double res = scalar_identity_residual(relation);
    checks.push_back({"relation-residual", res, 0.0, tol::relation_residual,
                      res <= tol::relation_residual});
  }

  const PolygonMetrics m = metrics(poly);
  const double formula = entropy_formula(m, poly.genus);
  {
    const double alt = kPi * m.area / m.perimeter;
    const double dev = std::abs(formula - alt);
    checks.push_back({"entropy-two-forms", dev, 0.0, 1e-9, dev <= 1e-9});
  }
  {
    const double bound = h_max(poly.genus) + 1e-9;
    checks.push_back({"entropy-below-max", formula, h_max(poly.genus), 1e-9,
                      formula <= bound});
  }
  {
    const IsoarealCheck iso = isoareal_check(poly);
    checks.push_back({"isoareal-slack", iso.slack, 0.0, tol::isoareal_slack,
                      iso.slack >= -tol::isoareal_slack});
  }

  try {
    const BoundaryMap bm(poly);
    const MarkovData md = build_markov(bm);
    bool rows_ok = true;
    for (const auto& row : md.matrix) {
      int ones = 0;
      for (const auto e : row) ones += e;
      if (ones < 2) rows_ok = false;
    }
    checks.push_back({"markov-row-sums", rows_ok ? 2.0 : 0.0, 2.0, 0.0, rows_ok});
    const double eig_res = analytic_eigenpair_residual(md);
    checks.push_back({"eigenpair-residual", eig_res, 0.0, 1e-9, eig_res <= 1e-9});
    const double htop = topological_entropy(md);
    const double bound = std::log(analytic_eigenvalue(poly.genus));
    checks.push_back({"htop-lower-bound", htop, bound, 1e-9, htop >= bound - 1e-9});
    checks.push_back({"entropy-below-htop", formula, htop, 0.0, formula < htop});

    if (opt.samples > 0) {
      const MeanWithError mass = nu_mass_quadrature(poly, opt.samples, opt.seed, opt.threads);
      const double dev = std::abs(mass.value - m.perimeter);
      checks.push_back({"nu-mass-vs-perimeter", mass.value, m.perimeter,
                        3.0 * mass.std_error, dev <= 3.0 * mass.std_error});
    }
    if (opt.nsteps > 0) {
      const BirkhoffEstimate bk = birkhoff_entropy(bm, opt.nsteps, 5, opt.seed);
      const double rel = std::abs(bk.estimate - formula) / formula;
      checks.push_back({"birkhoff-vs-formula", bk.estimate, formula, 0.02, rel <= 0.02});
    }
  } catch (const MarkovViolation& e) {
    checks.push_back({"markov-structure", 1.0, 0.0, 0.0, false});
    std::cerr << "markov structure failed: " << e.what() << "\n";
  }

  return checks;
}

int run_verify(const Options& opt) {
  if (opt.samples > 0 || opt.nsteps > 0) std::cerr << "seed = " << opt.seed << "\n";
  const std::vector<Check> checks = verification_checks(opt);
  emit(opt, io::check_lines(checks));
  for (const Check& c : checks) {
    if (!c.pass) {
      std::cerr << "verification failed: " << c.name << "\n";
      return 3;
    }
  }
  return 0;
}

int run_sweep(const Options& opt) {
  if (opt.param.empty() || opt.steps < 2) throw OutOfDomain("sweep needs --param and --steps >= 2");
  std::vector<double> values;
  values.reserve(opt.steps);
  for (long k = 0; k < opt.steps; ++k)
    values.push_back(opt.from + (opt.to - opt.from) * k / (opt.steps - 1));
  const SweepResult result = sweep_parameter(opt.param, values);
  for (const double v : result.skipped_values)
    std::cerr << "skipped " << opt.param << " = " << io::fmt17(v)
              << " (outside the parameter chart)\n";
  if (!result.matrix_constant)
    std::cerr << "warning: transition matrix changed along the sweep\n";
  emit(opt, io::sweep_csv(result));
  return 0;
}

int run_solve(const Options& opt) {
  const FenchelNielsen6 p = solve_target_entropy(opt.target, opt.tolerance);
  emit(opt, io::params_json(p));
  return 0;
}

int run_htop(const Options& opt) {
  Options local = opt;
  const MarkedPolygon poly = build_from_options(local);
  const MarkovData md = build_markov(BoundaryMap(poly));
  if (opt.format == "matrix-txt") {
    emit(opt, matrix_text(md));
    return 0;
  }
  const double lambda = perron_eigenvalue(md.matrix);
  std::string out = "{\n  \"genus\": " + std::to_string(poly.genus) +
                    ",\n  \"lambda\": " + io::fmt17(lambda) +
                    ",\n  \"h_top\": " + io::fmt17(std::log(lambda)) +
                    ",\n  \"h_top_lower_bound\": " +
                    io::fmt17(std::log(analytic_eigenvalue(poly.genus))) + "\n}\n";
  emit(opt, out);
  return 0;
}

int run_dump_attractor(const Options& opt, long iters, long points) {
  Options local = opt;
  const MarkedPolygon poly = build_from_options(local);
  const BoundaryMap bm(poly);
  std::cerr << "seed = " << opt.seed << "\n";
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.0, kTwoPi);
  std::vector<GeodesicPair> pairs;
  pairs.reserve(points);
  while (static_cast<long>(pairs.size()) < points) {
    GeodesicPair p{BoundaryPoint(unif(rng)), BoundaryPoint(unif(rng))};
    if (circ_dist(p.u, p.w) <= 1e-9) continue;
    for (long k = 0; k < iters; ++k) p = bm.step_pair(p);
    pairs.push_back(p);
  }
  emit(opt, io::attractor_csv(pairs));
  return 0;
}

int run_strip_check(const Options& opt) {
  Options local = opt;
  const MarkedPolygon poly = build_from_options(local);
  const PolygonMetrics m = metrics(poly);
  constexpr int kGrid = 1000;
  std::string out = "side,length,mass_coords,mass_nu\n";
  double sum_coords = 0.0, sum_nu = 0.0;
  for (int i = 1; i <= poly.n; ++i) {
    const double coords = strip_mass(poly, i, kGrid);
    const double nu = strip_mass_nu(poly, i, kGrid);
    sum_coords += coords;
    sum_nu += nu;
    out += std::to_string(i) + "," + io::fmt17(m.side_lengths[i - 1]) + "," +
           io::fmt17(coords) + "," + io::fmt17(nu) + "\n";
  }
  out += "sum," + io::fmt17(m.perimeter) + "," + io::fmt17(sum_coords) + "," +
         io::fmt17(sum_nu) + "\n";
  emit(opt, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental polygons, boundary maps and their entropy"};
  app.require_subcommand(1);

  Options opt;

  const auto add_maskit_flags = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", opt.params.alpha);
    cmd->add_option("--beta", opt.params.beta);
    cmd->add_option("--gamma", opt.params.gamma);
    cmd->add_option("--sigma", opt.params.sigma_t);
    cmd->add_option("--tau", opt.params.tau_t);
    cmd->add_option("--rho", opt.params.rho_t);
  };
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out);
    cmd->add_option("--format", opt.format);
    cmd->add_option("--seed", opt.seed);
    cmd->add_option("--threads", opt.threads);
  };

  CLI::App* regular = app.add_subcommand("regular", "regular polygon report");
  regular->add_option("--genus", opt.genus)->required();
  regular->add_option("--samples", opt.samples);
  regular->add_option("--nsteps", opt.nsteps);
  add_common(regular);

  CLI::App* maskit = app.add_subcommand("maskit", "polygon from Fenchel-Nielsen parameters");
  maskit->add_option("--genus", opt.genus);
  add_maskit_flags(maskit);
  maskit->add_option("--samples", opt.samples);
  maskit->add_option("--nsteps", opt.nsteps);
  add_common(maskit);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--genus", opt.genus);
  add_maskit_flags(verify);
  verify->add_option("--samples", opt.samples);
  verify->add_option("--nsteps", opt.nsteps);
#ifdef BSMAP_TEST_HOOKS
  verify->add_flag("--corrupt", opt.corrupt, "test hook: corrupt one pairing matrix");
#endif
  add_common(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "one-parameter entropy sweep");
  sweep->add_option("--param", opt.param)->required();
  sweep->add_option("--from", opt.from)->required();
  sweep->add_option("--to", opt.to)->required();
  sweep->add_option("--steps", opt.steps)->required();
  add_common(sweep);

  CLI::App* solve = app.add_subcommand("solve", "parameters realizing a target entropy");
  solve->add_option("--target", opt.target)->required();
  solve->add_option("--tol", opt.tolerance);
  add_common(solve);

  CLI::App* htop = app.add_subcommand("htop", "topological entropy / transition matrix");
  htop->add_option("--genus", opt.genus);
  add_maskit_flags(htop);
  add_common(htop);

  long iters = 50, points = 5000;
  CLI::App* dump = app.add_subcommand("dump-attractor", "sample the natural-extension attractor");
  dump->add_option("--genus", opt.genus);
  add_maskit_flags(dump);
  dump->add_option("--iters", iters);
  dump->add_option("--points", points);
  add_common(dump);

  CLI::App* strip = app.add_subcommand("strip-check", "per-side strip masses");
  strip->add_option("--genus", opt.genus);
  add_maskit_flags(strip);
  add_common(strip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto maskit_given = [&](CLI::App* cmd) {
    for (const char* name : {"--alpha", "--beta", "--gamma", "--sigma", "--tau", "--rho"})
      if (cmd->count(name) > 0) return true;
    return false;
  };

  try {
    if (regular->parsed()) return run_report(opt, false);
    if (maskit->parsed()) {
      opt.maskit_given = true;
      return run_report(opt, true);
    }
    if (verify->parsed()) {
      opt.maskit_given = maskit_given(verify);
      if (verify->count("--samples") == 0) opt.samples = 200000;
      if (verify->count("--nsteps") == 0) opt.nsteps = 200000;
      return run_verify(opt);
    }
    if (sweep->parsed()) return run_sweep(opt);
    if (solve->parsed()) return run_solve(opt);
    if (htop->parsed()) {
      opt.maskit_given = maskit_given(htop);
      return run_htop(opt);
    }
    if (dump->parsed()) {
      opt.maskit_given = maskit_given(dump);
      return run_dump_attractor(opt, iters, points);
    }
    if (strip->parsed()) {
      opt.maskit_given = maskit_given(strip);
      return run_strip_check(opt);
    }
  } catch (const OutOfDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TargetOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
