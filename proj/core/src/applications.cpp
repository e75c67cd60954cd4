#include "cmopt/applications.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmopt/errors.hpp"
#include "cmopt/matroid.hpp"
#include "cmopt/objective.hpp"
#include "cmopt/solver.hpp"

namespace cmopt {

QAResult solve_quadratic_assignment(const QAInstance& qa) {
  const int n = static_cast<int>(qa.columns.size());
  if (qa.d < 1) throw std::invalid_argument("solve_quadratic_assignment: d must be positive");
  for (const Vec& c : qa.columns)
    if (c.size() != static_cast<std::size_t>(qa.d))
      throw std::invalid_argument("solve_quadratic_assignment: column dimension mismatch");

  Instance inst{n, qa.d, qa.columns};
  SqNorm obj(qa.d);

  QAResult best;
  bool have = false;
  for (int r = 0; r <= n; ++r) {
    UniformMatroid m(n, r);
    Solution s = solve(inst, m, obj);
    const double tol = 1e-9 * (1.0 + std::fabs(have ? best.value : 0.0));
    if (!have || s.best.value > best.value + tol) {
      best.support = s.best.basis;
      best.value = s.best.value;
      have = true;
    } else if (std::fabs(s.best.value - best.value) <= tol &&
               std::lexicographical_compare(s.best.basis.begin(), s.best.basis.end(),
                                            best.support.begin(), best.support.end())) {
      best.support = s.best.basis;
      best.value = std::max(best.value, s.best.value);
    }
  }
  best.x.assign(static_cast<std::size_t>(n), 0);
  for (int j : best.support) best.x[static_cast<std::size_t>(j)] = 1;
  return best;
}

double variance_sum(const std::vector<int>& cluster1, const std::vector<int>& cluster2,
                    const std::vector<Vec>& points) {
  const std::size_t n = points.size();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("variance_sum: point count must be even and positive");
  const std::size_t m = n / 2;
  if (cluster1.size() != m || cluster2.size() != m)
    throw std::invalid_argument("variance_sum: clusters must each have n/2 elements");
  std::vector<char> used(n, 0);
  for (const auto* c : {&cluster1, &cluster2}) {
    for (int j : *c) {
      if (j < 0 || j >= static_cast<int>(n))
        throw std::out_of_range("variance_sum: element index out of range");
      if (used[static_cast<std::size_t>(j)]++)
        throw std::invalid_argument("variance_sum: clusters overlap");
    }
  }

  const int d = static_cast<int>(points.front().size());
  auto cluster_variance = [&](const std::vector<int>& c) {
    Vec mean = zero_vec(d);
    for (int j : c) mean = add(mean, points[static_cast<std::size_t>(j)]);
    mean = scaled(mean, 1.0 / static_cast<double>(m));
    double s = 0.0;
    for (int j : c) {
      Vec r = sub(points[static_cast<std::size_t>(j)], mean);
      s += dot(r, r);
    }
    return s / static_cast<double>(m);
  };
  return cluster_variance(cluster1) + cluster_variance(cluster2);
}

ClusterResult solve_balanced_clustering(const ClusterInstance& ci) {
  const int n = static_cast<int>(ci.points.size());
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("solve_balanced_clustering: need an even number (>= 2) of points");
  const int d = static_cast<int>(ci.points.front().size());
  for (const Vec& p : ci.points)
    if (p.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("solve_balanced_clustering: inconsistent point dimensions");

  Instance inst{n, d, ci.points};
  Vec total = zero_vec(d);
  for (const Vec& p : ci.points) total = add(total, p);

  UniformMatroid m(n, n / 2);
  Balanced obj(total);
  Solution s = solve(inst, m, obj);

  ClusterResult res;
  res.cluster1 = s.best.basis;
  std::vector<char> in1(static_cast<std::size_t>(n), 0);
  for (int j : res.cluster1) in1[static_cast<std::size_t>(j)] = 1;
  for (int j = 0; j < n; ++j)
    if (!in1[static_cast<std::size_t>(j)]) res.cluster2.push_back(j);

  res.variance_sum = variance_sum(res.cluster1, res.cluster2, ci.points);

  // The reduction rests on an algebraic identity between the solved
  // objective and the variance sum; check it instead of trusting it.
  const double mm = static_cast<double>(n) / 2.0;
  double sq = 0.0;
  for (const Vec& p : ci.points) sq += dot(p, p);
  const Vec& w1 = s.best.point;
  Vec w2 = sub(total, w1);
  const double identity = sq / mm - (dot(w1, w1) + dot(w2, w2)) / (mm * mm);
  if (std::fabs(identity - res.variance_sum) > 1e-9 * (1.0 + std::fabs(res.variance_sum)))
    throw NumericError("solve_balanced_clustering: variance identity violated");
  return res;
}

}  // namespace cmopt
