#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsmap/boundary_map.hpp"

namespace bsmap {

/// The 16g-8 partition arcs I_{2i-1} = [P_i, Q_i), I_{2i} = [Q_i, P_{i+1})
/// together with the 0/1 transition matrix m_jk = 1 iff the branch image of
/// I_j covers I_k. Rows have at least two ones and the matrix is irreducible;
/// construction enforces both.
struct MarkovData {
  int genus = 2;
  int size = 24;  // 16*genus - 8
  std::vector<BoundaryPoint> cuts;  // left endpoints of I_1..I_{2n} in circular order
  std::vector<std::vector<std::uint8_t>> matrix;
};

/// Builds the partition and transition matrix numerically: each branch image
/// endpoint must land on a partition point within tol::markov_match, anything
/// else throws MarkovViolation (the polygon is numerically unusable).
MarkovData build_markov(const BoundaryMap& bm);

/// Dominant eigenvalue of a nonnegative irreducible matrix by power
/// iteration (relative tolerance tol::power_iter_rel; the iteration runs on
/// M + I so periodicity cannot stall it). Throws NoConvergence after 1e5
/// iterations.
double perron_eigenvalue(const std::vector<std::vector<std::uint8_t>>& matrix);

/// log of the spectral radius of the transition matrix.
double topological_entropy(const MarkovData& md);

/// 4g-3 + sqrt((4g-3)^2 - 1); an eigenvalue of the transition matrix with
/// eigenvector (1, lambda-1, 1, lambda-1, ...).
double analytic_eigenvalue(int genus);

/// Max-norm residual of M v - lambda v for the analytic eigenpair.
double analytic_eigenpair_residual(const MarkovData& md);

/// Plain-text dump: one row per line, space-separated 0/1 entries.
std::string matrix_text(const MarkovData& md);

}  // namespace bsmap
