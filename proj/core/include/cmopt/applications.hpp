#pragma once

#include <vector>

#include "cmopt/geometry.hpp"

namespace cmopt {

// Positive semidefinite quadratic assignment: maximize ||W x||^2 over
// binary x, W given by columns.
struct QAInstance {
  int d = 1;
  std::vector<Vec> columns;  // columns[j] in R^d
};

struct QAResult {
  std::vector<int> x;        // 0/1 indicator, length n
  std::vector<int> support;  // sorted indices with x_j = 1
  double value = 0.0;
};

// Sweeps the support size r = 0..n, solving each restricted problem over the
// uniform matroid of rank r with the squared-norm objective, and returns the
// best support (lexicographically smallest among value ties).
QAResult solve_quadratic_assignment(const QAInstance& qa);

// Balanced two-cluster partition of an even point set.
struct ClusterInstance {
  std::vector<Vec> points;
};

struct ClusterResult {
  std::vector<int> cluster1;  // sorted element indices
  std::vector<int> cluster2;
  double variance_sum = 0.0;
};

// Reduces to the uniform matroid of rank n/2 with the two-cluster objective
// ||x||^2 + ||w(N) - x||^2; the algebraic identity linking that objective to
// the sum of cluster variances is asserted at runtime (NumericError if it
// fails). Odd n is refused.
ClusterResult solve_balanced_clustering(const ClusterInstance& ci);

// Sum of the two cluster variances of an explicit balanced partition.
double variance_sum(const std::vector<int>& cluster1, const std::vector<int>& cluster2,
                    const std::vector<Vec>& points);

}  // namespace cmopt
