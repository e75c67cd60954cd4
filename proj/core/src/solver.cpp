#include "cmopt/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include "cmopt/errors.hpp"

namespace cmopt {

namespace {

std::uint64_t ceil_log2(std::uint64_t n) {
  std::uint64_t l = 0;
  while ((std::uint64_t{1} << l) < n) ++l;
  return std::max<std::uint64_t>(l, 1);
}

class CountingOracle : public MatroidOracle {
 public:
  CountingOracle(const MatroidOracle& base, std::uint64_t& counter)
      : base_(base), counter_(counter) {}
  int ground_size() const override { return base_.ground_size(); }
  bool is_independent(std::span<const int> subset) const override {
    ++counter_;
    return base_.is_independent(subset);
  }

 private:
  const MatroidOracle& base_;
  std::uint64_t& counter_;
};

Candidate chamber_candidate(const Instance& inst, const MatroidOracle& m, const Vec& witness,
                            std::uint64_t& queries, std::uint64_t& ops) {
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<double> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = dot(witness, inst.weights[j]);
  ops += n * static_cast<std::uint64_t>(inst.d);
  ops += n * ceil_log2(std::max<std::uint64_t>(n, 2));

  CountingOracle counted(m, queries);
  Candidate c;
  c.chamber_witness = witness;
  c.basis = greedy_max_basis(counted, b);
  c.point = weight_sum(inst, c.basis);
  ops += c.basis.size() * static_cast<std::uint64_t>(inst.d);
  return c;
}

std::vector<Vec> chamber_witnesses(const Instance& inst, const GeneratorSet& gens,
                                   std::uint64_t& ops) {
  std::vector<Vec> out;
  if (gens.normals.empty()) {
    // All weights coincide: every basis has the same w(B); any functional works.
    out.push_back(unit_vec(inst.d, 0));
    return out;
  }
  const auto mp = static_cast<std::uint64_t>(gens.normals.size());
  if (inst.d == 2) {
    auto chs = enumerate_chambers_2d(gens, /*with_signs=*/false);
    ops += 2 * mp * ceil_log2(std::max<std::uint64_t>(2 * mp, 2));
    out.reserve(chs.size());
    for (Chamber& c : chs) out.push_back(std::move(c.witness));
  } else {
    auto chs = enumerate_chambers_nd(gens);
    ops += static_cast<std::uint64_t>(chs.size()) * mp * static_cast<std::uint64_t>(inst.d);
    out.reserve(chs.size());
    for (Chamber& c : chs) out.push_back(std::move(c.witness));
  }
  return out;
}

}  // namespace

Solution solve(const Instance& inst, const MatroidOracle& m, const ConvexObjective& obj,
               const SolveOptions& opts) {
  inst.validate();
  if (m.ground_size() != inst.n)
    throw std::invalid_argument("solve: matroid ground size does not match instance");
  if (obj.dim() != inst.d)
    throw std::invalid_argument("solve: objective dimension does not match instance");
  if (opts.threads < 1) throw std::invalid_argument("solve: threads must be >= 1");

  Solution sol;
  GeneratorSet gens = build_generators(inst);
  const auto nraw = static_cast<std::uint64_t>(gens.raw.size());
  sol.operations += static_cast<std::uint64_t>(inst.n) * static_cast<std::uint64_t>(std::max(inst.n - 1, 0)) / 2 *
                    static_cast<std::uint64_t>(inst.d);
  sol.operations += nraw * ceil_log2(std::max<std::uint64_t>(nraw, 2));

  std::vector<Vec> witnesses = chamber_witnesses(inst, gens, sol.operations);
  sol.chambers = witnesses.size();

  // Phase 1: greedy basis per chamber (pure map, parallelizable).
  std::vector<Candidate> cands(witnesses.size());
  const int threads = std::min<int>(opts.threads, static_cast<int>(witnesses.size()) > 0
                                                      ? static_cast<int>(witnesses.size())
                                                      : 1);
  if (threads <= 1) {
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      cands[i] = chamber_candidate(inst, m, witnesses[i], sol.oracle_queries, sol.operations);
  } else {
    std::vector<std::uint64_t> queries(static_cast<std::size_t>(threads), 0);
    std::vector<std::uint64_t> ops(static_cast<std::size_t>(threads), 0);
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = static_cast<std::size_t>(t); i < witnesses.size();
               i += static_cast<std::size_t>(threads))
            cands[i] = chamber_candidate(inst, m, witnesses[i], queries[static_cast<std::size_t>(t)],
                                         ops[static_cast<std::size_t>(t)]);
        } catch (...) {
          errs[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (int t = 0; t < threads; ++t) {
      sol.oracle_queries += queries[static_cast<std::size_t>(t)];
      sol.operations += ops[static_cast<std::size_t>(t)];
    }
  }

  // Phase 2: evaluate in chamber order; first-encountered wins ties.
  std::set<Vec> seen;
  bool have_best = false;
  for (Candidate& c : cands) {
    if (opts.dedupe_points && !seen.insert(c.point).second) continue;
    c.value = obj.evaluate(c.point);
    ++sol.oracle_queries;
    ++sol.candidates_examined;
    if (!have_best || c.value > sol.best.value) {
      sol.best = c;
      have_best = true;
    }
  }
  if (!have_best) throw NumericError("solve: no candidate produced");
  return sol;
}

Solution brute_force_solve(const Instance& inst, const MatroidOracle& m,
                           const ConvexObjective& obj, const EnumLimits& limits) {
  inst.validate();
  if (m.ground_size() != inst.n)
    throw std::invalid_argument("brute_force_solve: matroid ground size does not match instance");
  if (obj.dim() != inst.d)
    throw std::invalid_argument("brute_force_solve: objective dimension does not match instance");

  Solution sol;
  CountingOracle counted(m, sol.oracle_queries);
  std::vector<Basis> bases = enumerate_bases(counted, limits);
  bool have_best = false;
  for (const Basis& b : bases) {
    Candidate c;
    c.basis = b;
    c.point = weight_sum(inst, b);
    c.value = obj.evaluate(c.point);
    ++sol.oracle_queries;
    ++sol.candidates_examined;
    sol.operations += (b.size() + 1) * static_cast<std::uint64_t>(inst.d);
    // Enumeration is lexicographic, so strict improvement keeps the
    // lexicographically smallest maximizer.
    if (!have_best || c.value > sol.best.value) {
      sol.best = std::move(c);
      have_best = true;
    }
  }
  if (!have_best) throw NumericError("brute_force_solve: matroid produced no basis");
  return sol;
}

std::vector<Vec> planar_hull_vertices(std::vector<Vec> points) {
  for (const Vec& p : points)
    if (p.size() != 2) throw std::invalid_argument("planar_hull_vertices: points must be 2-D");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  double scale = 1.0;
  for (const Vec& p : points) scale = std::max({scale, std::fabs(p[0]), std::fabs(p[1])});
  const double tol = 1e-12 * scale * scale;

  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Vec> hull;
  // lower chain then upper chain; collinear points dropped
  for (const Vec& p : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= tol)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= tol)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // first point repeated
  return hull;
}

CoverageReport vertex_coverage_check(const Instance& inst, const MatroidOracle& m,
                                     const EnumLimits& limits) {
  inst.validate();
  if (inst.d != 2) throw std::invalid_argument("vertex_coverage_check: requires d = 2");
  if (m.ground_size() != inst.n)
    throw std::invalid_argument("vertex_coverage_check: matroid ground size mismatch");

  std::vector<Basis> bases = enumerate_bases(m, limits);
  std::vector<Vec> points;
  points.reserve(bases.size());
  for (const Basis& b : bases) points.push_back(weight_sum(inst, b));

  CoverageReport rep;
  rep.hull_vertices = planar_hull_vertices(points);

  GeneratorSet gens = build_generators(inst);
  std::uint64_t ops = 0;
  std::vector<Vec> witnesses = chamber_witnesses(inst, gens, ops);
  std::vector<Vec> candidates;
  candidates.reserve(witnesses.size());
  std::uint64_t queries = 0;
  for (const Vec& a : witnesses)
    candidates.push_back(chamber_candidate(inst, m, a, queries, ops).point);
  rep.candidate_points = candidates.size();

  rep.covered = true;
  for (const Vec& u : rep.hull_vertices) {
    bool hit = false;
    for (const Vec& v : candidates) {
      const double dx = u[0] - v[0], dy = u[1] - v[1];
      if (std::sqrt(dx * dx + dy * dy) <= 1e-9) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      rep.covered = false;
      rep.missing_vertex = u;
      break;
    }
  }
  return rep;
}

}  // namespace cmopt
