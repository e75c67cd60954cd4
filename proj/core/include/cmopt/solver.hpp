#pragma once

#include <cstdint>
#include <vector>

#include "cmopt/chambers.hpp"
#include "cmopt/geometry.hpp"
#include "cmopt/matroid.hpp"
#include "cmopt/objective.hpp"

namespace cmopt {

// One chamber's contribution: the greedy basis under its witness functional.
struct Candidate {
  Vec chamber_witness;
  Basis basis;
  Vec point;  // weight_sum over basis
  double value = 0.0;
};

struct Solution {
  Candidate best;
  std::uint64_t candidates_examined = 0;
  std::uint64_t chambers = 0;
  // Complexity accounting: arithmetic-operation charge plus exact oracle
  // query counts (independence + evaluation calls).
  std::uint64_t operations = 0;
  std::uint64_t oracle_queries = 0;
};

struct SolveOptions {
  // Evaluate each distinct candidate point once instead of once per chamber;
  // worthwhile when the evaluation oracle is expensive.
  bool dedupe_points = false;
  // Parallel chamber map; results are identical to the single-threaded run.
  int threads = 1;
};

// Main algorithm: enumerate zonotope-vertex chambers (exact sweep at d = 2,
// incremental insertion otherwise), scalarize each witness into b(j) = a.w(j),
// run the greedy basis per chamber, and keep the candidate of maximum
// objective value (ties to the first-encountered chamber).
Solution solve(const Instance& inst, const MatroidOracle& m, const ConvexObjective& obj,
               const SolveOptions& opts = {});

// Ground-truth oracle: exact maximum of c(w(B)) over all bases, tie broken
// to the lexicographically smallest basis.
Solution brute_force_solve(const Instance& inst, const MatroidOracle& m,
                           const ConvexObjective& obj, const EnumLimits& limits = {});

struct CoverageReport {
  bool covered = false;
  Vec missing_vertex;                // set when covered is false
  std::vector<Vec> hull_vertices;    // vertices of conv{w(B)}
  std::uint64_t candidate_points = 0;
};

// Checks that every vertex of conv{w(B) : B basis} is realized as the
// candidate point of some chamber (within 1e-9). Requires d = 2.
CoverageReport vertex_coverage_check(const Instance& inst, const MatroidOracle& m,
                                     const EnumLimits& limits = {});

// Strictly-convex-position hull of a planar point set (monotone chain);
// exposed for tests and the coverage checker.
std::vector<Vec> planar_hull_vertices(std::vector<Vec> points);

}  // namespace cmopt
