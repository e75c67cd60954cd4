#include "cmopt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cmopt/errors.hpp"

namespace cmopt {

double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

Vec add(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(x);
  for (std::size_t k = 0; k < y.size(); ++k) r[k] += y[k];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(x);
  for (std::size_t k = 0; k < y.size(); ++k) r[k] -= y[k];
  return r;
}

Vec scaled(const Vec& x, double s) {
  Vec r(x);
  for (double& v : r) v *= s;
  return r;
}

double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

double inf_norm(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

Vec zero_vec(int d) { return Vec(static_cast<std::size_t>(d), 0.0); }

Vec unit_vec(int d, int k) {
  Vec e = zero_vec(d);
  e.at(static_cast<std::size_t>(k)) = 1.0;
  return e;
}

void Instance::validate() const {
  if (n < 0) throw std::invalid_argument("Instance: n must be nonnegative");
  if (d < 1) throw std::invalid_argument("Instance: d must be positive");
  if (weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("Instance: weights must have exactly n entries");
  for (const Vec& w : weights) {
    if (w.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("Instance: weight dimension mismatch");
    for (double v : w)
      if (!std::isfinite(v)) throw std::invalid_argument("Instance: weight entry not finite");
  }
}

namespace {

// Generators whose difference is this small are treated as degenerate.
constexpr double kZeroGenTol = 1e-12;

}  // namespace

Vec canonical_direction(const Vec& g) {
  const double scale = inf_norm(g);
  if (scale == 0.0) throw std::invalid_argument("canonical_direction: zero vector");
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (std::fabs(g[k]) > kZeroGenTol * scale) {
      Vec c = scaled(g, 1.0 / g[k]);
      for (std::size_t l = 0; l < k; ++l) c[l] = 0.0;  // wipe below-threshold leading noise
      c[k] = 1.0;
      return c;
    }
  }
  throw std::invalid_argument("canonical_direction: zero vector");
}

namespace {

bool close_dirs(const Vec& a, const Vec& b, double tol) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > tol * (1.0 + std::fabs(a[k]))) return false;
  return true;
}

}  // namespace

GeneratorSet build_generators(const Instance& inst) {
  inst.validate();
  GeneratorSet gs;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = i + 1; j < inst.n; ++j) {
      Vec g = sub(inst.weights[static_cast<std::size_t>(i)], inst.weights[static_cast<std::size_t>(j)]);
      if (inf_norm(g) <= kZeroGenTol) continue;  // degenerate segment, no wall
      gs.raw.push_back(RawGenerator{i, j, std::move(g)});
    }
  }

  // Canonical form per raw generator; sign is the sign of the first nonzero coordinate.
  std::vector<Vec> canon(gs.raw.size());
  std::vector<int> sigma(gs.raw.size(), +1);
  for (std::size_t r = 0; r < gs.raw.size(); ++r) {
    const Vec& g = gs.raw[r].g;
    canon[r] = canonical_direction(g);
    const double scale = inf_norm(g);
    for (double v : g) {
      if (std::fabs(v) > kZeroGenTol * scale) {
        sigma[r] = v > 0.0 ? +1 : -1;
        break;
      }
    }
  }

  // Merge parallel classes: sort canonical forms lexicographically, then
  // fold near-equal neighbours into one normal.
  std::vector<std::size_t> order(gs.raw.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(canon[a].begin(), canon[a].end(), canon[b].begin(),
                                        canon[b].end());
  });

  gs.direction_of.assign(gs.raw.size(), DirectionRef{});
  for (std::size_t r : order) {
    if (!gs.normals.empty() && close_dirs(gs.normals.back(), canon[r], kSignTol)) {
      gs.direction_of[r] = DirectionRef{static_cast<int>(gs.normals.size()) - 1, sigma[r]};
    } else {
      gs.normals.push_back(canon[r]);
      gs.direction_of[r] = DirectionRef{static_cast<int>(gs.normals.size()) - 1, sigma[r]};
    }
  }
  return gs;
}

Vec weight_sum(const Instance& inst, std::span<const int> subset) {
  Vec s = zero_vec(inst.d);
  for (int j : subset) {
    if (j < 0 || j >= inst.n) throw std::out_of_range("weight_sum: element index out of range");
    const Vec& w = inst.weights[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += w[k];
  }
  return s;
}

Vec zonotope_vertex(const GeneratorSet& gens, const Vec& witness) {
  Vec v;
  for (const RawGenerator& rg : gens.raw) {
    if (v.empty()) v = zero_vec(static_cast<int>(rg.g.size()));
    double p = dot(witness, rg.g);
    if (std::fabs(p) <= kSignTol)
      throw NumericError("zonotope_vertex: witness is not generic for some generator");
    double s = p > 0.0 ? 1.0 : -1.0;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += s * rg.g[k];
  }
  if (v.empty()) v = zero_vec(static_cast<int>(witness.size()));
  return v;
}

}  // namespace cmopt
