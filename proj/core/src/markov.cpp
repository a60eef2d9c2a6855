#include "bsmap/markov.hpp"

#include <cmath>
#include <queue>

namespace bsmap {

namespace {

int match_cut(const std::vector<BoundaryPoint>& cuts, BoundaryPoint x) {
  int best = -1;
  double best_dist = tol::markov_match;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const double d = circ_dist(cuts[k], x);
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(k);
    }
  }
  if (best < 0)
    throw MarkovViolation("branch image endpoint does not land on a partition point");
  return best;
}

bool strongly_connected(const std::vector<std::vector<std::uint8_t>>& m) {
  const int n = static_cast<int>(m.size());
  const auto reachable = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u) {
        const bool edge = transpose ? m[u][v] : m[v][u];
        if (edge && !seen[u]) {
          seen[u] = 1;
          ++count;
          q.push(u);
        }
      }
    }
    return count == n;
  };
  return reachable(false) && reachable(true);
}

}  // namespace

MarkovData build_markov(const BoundaryMap& bm) {
  const MarkedPolygon& poly = bm.polygon();
  const int n = poly.n;
  MarkovData md;
  md.genus = poly.genus;
  md.size = 2 * n;
  md.cuts.reserve(md.size);
  for (int i = 1; i <= n; ++i) {
    md.cuts.push_back(poly.P(i));  // left end of I_{2i-1}
    md.cuts.push_back(poly.Q(i));  // left end of I_{2i}
  }

  md.matrix.assign(md.size, std::vector<std::uint8_t>(md.size, 0));
  for (int j = 0; j < md.size; ++j) {
    const int side = j / 2 + 1;  // both halves of [P_i, P_{i+1}) use T_i
    const DiskMoebius& t = poly.T(side);
    const int lo = match_cut(md.cuts, apply(t, md.cuts[j]));
    const int hi = match_cut(md.cuts, apply(t, md.cuts[(j + 1) % md.size]));
    if (lo == hi) throw MarkovViolation("branch image of a partition arc is degenerate");
    int covered = 0;
    for (int k = lo; k != hi; k = (k + 1) % md.size) {
      md.matrix[j][k] = 1;
      ++covered;
    }
    if (covered < 2) throw MarkovViolation("partition arc image covers fewer than two arcs");
  }

  if (!strongly_connected(md.matrix))
    throw MarkovViolation("transition matrix is not irreducible");
  return md;
}

double perron_eigenvalue(const std::vector<std::vector<std::uint8_t>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  std::vector<double> v(n, 1.0), w(n, 0.0);
  double prev = 0.0;
  constexpr int kMaxIter = 100000;
  for (int it = 0; it < kMaxIter; ++it) {
    // iterate with M + I so a periodic M cannot stall the iteration
    double norm = 0.0;
    for (int r = 0; r < n; ++r) {
      double acc = v[r];
      const auto& row = matrix[r];
      for (int c = 0; c < n; ++c)
        if (row[c]) acc += v[c];
      w[r] = acc;
      norm = std::max(norm, std::abs(acc));
    }
    double residual = 0.0;
    for (int r = 0; r < n; ++r) {
      residual = std::max(residual, std::abs(w[r] - norm * v[r]));
      v[r] = w[r] / norm;
    }
    if (it > 0 && std::abs(norm - prev) <= tol::power_iter_rel * norm &&
        residual <= tol::power_iter_rel * norm) {
      return norm - 1.0;
    }
    prev = norm;
  }
  throw NoConvergence("power iteration did not converge");
}

double topological_entropy(const MarkovData& md) {
  return std::log(perron_eigenvalue(md.matrix));
}

double analytic_eigenvalue(int genus) {
  const double t = 4.0 * genus - 3.0;
  return t + std::sqrt(t * t - 1.0);
}

double analytic_eigenpair_residual(const MarkovData& md) {
  const double lambda = analytic_eigenvalue(md.genus);
  std::vector<double> v(md.size);
  for (int k = 0; k < md.size; ++k) v[k] = (k % 2 == 0) ? 1.0 : lambda - 1.0;
  double worst = 0.0;
  for (int r = 0; r < md.size; ++r) {
    double acc = 0.0;
    for (int c = 0; c < md.size; ++c)
      if (md.matrix[r][c]) acc += v[c];
    worst = std::max(worst, std::abs(acc - lambda * v[r]));
  }
  return worst;
}

std::string matrix_text(const MarkovData& md) {
  std::string out;
  out.reserve(static_cast<std::size_t>(md.size) * (2 * md.size));
  for (int r = 0; r < md.size; ++r) {
    for (int c = 0; c < md.size; ++c) {
      if (c) out.push_back(' ');
      out.push_back(md.matrix[r][c] ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace bsmap
