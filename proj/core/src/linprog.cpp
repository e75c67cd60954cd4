#include "cmopt/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "cmopt/errors.hpp"

namespace cmopt {

namespace {

struct Row {
  std::vector<double> a;
  double b = 0.0;
};

double row_scale(const Row& r, const std::vector<double>& lo, const std::vector<double>& hi) {
  double s = 1.0 + std::fabs(r.b);
  for (std::size_t k = 0; k < r.a.size(); ++k)
    s += std::fabs(r.a[k]) * std::max(std::fabs(lo[k]), std::fabs(hi[k]));
  return s;
}

// Randomized incremental LP (Seidel): maximize c.x over box [lo,hi]
// intersected with rows a.x <= b. Dimension is tiny, constraint count small.
std::vector<double> seidel(std::vector<Row> cons, std::vector<double> c, std::vector<double> lo,
                           std::vector<double> hi, std::mt19937& rng) {
  const std::size_t D = c.size();
  if (D == 0) {
    for (const Row& r : cons)
      if (r.b < -1e-9) throw NumericError("lp: infeasible subproblem (numerical)");
    return {};
  }

  std::shuffle(cons.begin(), cons.end(), rng);

  std::vector<double> x(D);
  for (std::size_t k = 0; k < D; ++k)
    x[k] = c[k] > 0.0 ? hi[k] : (c[k] < 0.0 ? lo[k] : 0.5 * (lo[k] + hi[k]));

  for (std::size_t pos = 0; pos < cons.size(); ++pos) {
    const Row r = cons[pos];
    double lhs = 0.0;
    for (std::size_t k = 0; k < D; ++k) lhs += r.a[k] * x[k];
    const double tol = 1e-12 * row_scale(r, lo, hi);
    if (lhs <= r.b + tol) continue;

    // Optimum of the prefix lies on a.x = b; eliminate the variable with
    // the largest coefficient and recurse one dimension down.
    std::size_t j = 0;
    for (std::size_t k = 1; k < D; ++k)
      if (std::fabs(r.a[k]) > std::fabs(r.a[j])) j = k;
    if (std::fabs(r.a[j]) < 1e-13 * row_scale(r, lo, hi))
      throw NumericError("lp: degenerate tight constraint");
    const double aj = r.a[j];

    auto reduce_row = [&](const Row& q) {
      Row s;
      s.a.reserve(D - 1);
      const double f = q.a[j] / aj;
      for (std::size_t k = 0; k < D; ++k)
        if (k != j) s.a.push_back(q.a[k] - f * r.a[k]);
      s.b = q.b - f * r.b;
      return s;
    };

    std::vector<Row> sub;
    sub.reserve(pos + 2);
    for (std::size_t q = 0; q < pos; ++q) sub.push_back(reduce_row(cons[q]));
    // Box bounds of the eliminated variable become ordinary constraints:
    // lo_j <= (b - sum a_k x_k)/aj <= hi_j.
    {
      Row up, dn;
      up.a.reserve(D - 1);
      dn.a.reserve(D - 1);
      for (std::size_t k = 0; k < D; ++k) {
        if (k == j) continue;
        up.a.push_back(-r.a[k] / aj);
        dn.a.push_back(r.a[k] / aj);
      }
      up.b = hi[j] - r.b / aj;
      dn.b = r.b / aj - lo[j];
      sub.push_back(up);
      sub.push_back(dn);
    }

    std::vector<double> subc, sublo, subhi;
    subc.reserve(D - 1);
    for (std::size_t k = 0; k < D; ++k) {
      if (k == j) continue;
      subc.push_back(c[k] - c[j] * r.a[k] / aj);
      sublo.push_back(lo[k]);
      subhi.push_back(hi[k]);
    }

    std::vector<double> y = seidel(std::move(sub), std::move(subc), std::move(sublo),
                                   std::move(subhi), rng);

    double xj = r.b;
    std::size_t yk = 0;
    for (std::size_t k = 0; k < D; ++k) {
      if (k == j) continue;
      x[k] = y[yk];
      xj -= r.a[k] * y[yk];
      ++yk;
    }
    x[j] = std::clamp(xj / aj, lo[j], hi[j]);
  }
  return x;
}

}  // namespace

MarginResult max_margin(std::span<const SignedConstraint> constraints, int d) {
  if (d < 1) throw std::invalid_argument("max_margin: d must be positive");
  if (constraints.empty()) return MarginResult{1.0, unit_vec(d, 0)};

  double tbound = 1.0;
  for (const SignedConstraint& sc : constraints) {
    if (sc.normal.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("max_margin: constraint dimension mismatch");
    if (sc.sign != 1 && sc.sign != -1) throw std::invalid_argument("max_margin: bad sign");
    double s = 0.0;
    for (double v : sc.normal) s += std::fabs(v);
    if (s == 0.0) throw std::invalid_argument("max_margin: zero constraint normal");
    tbound = std::max(tbound, s);
  }
  tbound += 1.0;

  // Variables x = (a_1..a_d, t); maximize t subject to
  // t - sign*(a.h) <= 0 per constraint, |a_k| <= 1, |t| <= tbound.
  const std::size_t D = static_cast<std::size_t>(d) + 1;
  std::vector<Row> cons;
  cons.reserve(constraints.size());
  for (const SignedConstraint& sc : constraints) {
    Row r;
    r.a.resize(D, 0.0);
    for (int k = 0; k < d; ++k) r.a[static_cast<std::size_t>(k)] = -sc.sign * sc.normal[static_cast<std::size_t>(k)];
    r.a[D - 1] = 1.0;
    r.b = 0.0;
    cons.push_back(std::move(r));
  }
  std::vector<double> c(D, 0.0), lo(D, -1.0), hi(D, 1.0);
  c[D - 1] = 1.0;
  lo[D - 1] = -tbound;
  hi[D - 1] = tbound;

  std::mt19937 rng(0x9e3779b9u ^ static_cast<unsigned>(constraints.size() * 2654435761u));
  std::vector<double> x = seidel(std::move(cons), std::move(c), std::move(lo), std::move(hi), rng);

  MarginResult res;
  res.witness.assign(x.begin(), x.begin() + d);
  // Report the witness's own achieved margin rather than the LP value.
  double m = std::numeric_limits<double>::infinity();
  for (const SignedConstraint& sc : constraints)
    m = std::min(m, sc.sign * dot(res.witness, sc.normal));
  res.margin = m;
  return res;
}

}  // namespace cmopt
