#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "cmopt/applications.hpp"
#include "cmopt/matroid.hpp"
#include "cmopt/objective.hpp"
#include "cmopt/solver.hpp"
#include "test_util.hpp"

using namespace cmopt;

namespace {

Instance square_instance() {
  // the four axis-aligned unit weights; the optimum basis is {0,1} at (1,1)
  return Instance{4, 2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
}

bool close_vec(const Vec& a, const Vec& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("free matroid: the basis is the whole ground set") {
  std::mt19937 rng(101);
  Instance inst = testutil::random_instance(rng, 5, 2);
  UniformMatroid m(5, 5);
  SqNorm obj(2);
  Solution s = solve(inst, m, obj);
  CHECK(s.best.basis == Basis{0, 1, 2, 3, 4});
  CHECK(close_vec(s.best.point, weight_sum(inst, s.best.basis)));
  CHECK(s.best.value == doctest::Approx(obj.evaluate(s.best.point)).epsilon(1e-12));
}

TEST_CASE("d = 1 with a linear objective reduces to one greedy run per sign") {
  Instance inst{4, 1, {{3}, {-1}, {2}, {5}}};
  UniformMatroid m(4, 2);
  MaxLin obj(std::vector<Vec>{{1}});
  Solution s = solve(inst, m, obj);
  CHECK(s.best.basis == Basis{0, 3});
  CHECK(s.best.value == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("square instance under the squared norm") {
  Instance inst = square_instance();
  UniformMatroid m(4, 2);
  SqNorm obj(2);
  Solution s = solve(inst, m, obj);
  CHECK(s.best.basis == Basis{0, 1});
  CHECK(close_vec(s.best.point, Vec{1, 1}));
  CHECK(s.best.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.chambers == 8);
  CHECK(s.candidates_examined == 8);
  CHECK(s.oracle_queries > 0);
  CHECK(s.operations > 0);
}

TEST_CASE("brute force examples") {
  Instance inst = square_instance();
  UniformMatroid m(4, 2);
  SqNorm obj(2);
  Solution s = brute_force_solve(inst, m, obj);
  CHECK(s.best.basis == Basis{0, 1});
  CHECK(s.best.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.candidates_examined == 6);

  // triangle graph, two parallel-weight edges: best spanning tree doubles up
  Instance ti{3, 2, {{1, 0}, {1, 0}, {0, 0}}};
  GraphicMatroid g(3, {{0, 1}, {1, 2}, {0, 2}});
  Solution ts = brute_force_solve(ti, g, obj);
  CHECK(ts.best.basis == Basis{0, 1});
  CHECK(ts.best.value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("solver matches brute force on random instances across all classes") {
  std::mt19937 rng(103);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + it % 7;
    const int d = 2 + it % 2;
    Instance inst = testutil::random_instance(rng, n, d);
    auto m = testutil::random_matroid(rng, n, it);
    auto obj = testutil::random_objective(rng, inst, it / 4);
    Solution fast = solve(inst, *m, *obj);
    Solution exact = brute_force_solve(inst, *m, *obj);
    CHECK(fast.best.value ==
          doctest::Approx(exact.best.value).epsilon(1e-9).scale(1.0 + std::fabs(exact.best.value)));
  }
}

TEST_CASE("point dedup and threads do not change the answer") {
  std::mt19937 rng(107);
  for (int it = 0; it < 30; ++it) {
    const int n = 3 + it % 5;
    const int d = 2 + it % 2;
    Instance inst = testutil::random_instance(rng, n, d);
    auto m = testutil::random_matroid(rng, n, it);
    auto obj = testutil::random_objective(rng, inst, it);
    Solution base = solve(inst, *m, *obj);

    SolveOptions dd;
    dd.dedupe_points = true;
    Solution dedup = solve(inst, *m, *obj, dd);
    CHECK(dedup.best.basis == base.best.basis);
    CHECK(dedup.best.value == base.best.value);
    CHECK(dedup.candidates_examined <= base.candidates_examined);

    SolveOptions par;
    par.threads = 4;
    Solution threaded = solve(inst, *m, *obj, par);
    CHECK(threaded.best.basis == base.best.basis);
    CHECK(threaded.best.chamber_witness == base.best.chamber_witness);
    CHECK(threaded.best.value == base.best.value);
    CHECK(threaded.chambers == base.chambers);
    CHECK(threaded.oracle_queries == base.oracle_queries);
  }
}

TEST_CASE("every hull vertex of the basis-point cloud is hit by some chamber") {
  std::mt19937 rng(109);
  for (int it = 0; it < 40; ++it) {
    const int n = 3 + it % 6;
    Instance inst = testutil::random_instance(rng, n, 2);
    auto m = testutil::random_matroid(rng, n, it);
    CoverageReport rep = vertex_coverage_check(inst, *m);
    CHECK(rep.covered);
    if (!rep.covered) {
      CAPTURE(it);
      CAPTURE(rep.missing_vertex[0]);
      CAPTURE(rep.missing_vertex[1]);
    }
  }
}

TEST_CASE("planar hull of a known point set") {
  std::vector<Vec> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {1, 0}};
  auto hull = planar_hull_vertices(pts);
  REQUIRE(hull.size() == 4);
  std::set<std::pair<double, double>> got;
  for (const Vec& v : hull) got.insert({v[0], v[1]});
  CHECK(got == std::set<std::pair<double, double>>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("solution value never exceeds the maximum over examined candidates' own evaluation") {
  std::mt19937 rng(113);
  for (int it = 0; it < 30; ++it) {
    const int n = 3 + it % 5;
    Instance inst = testutil::random_instance(rng, n, 2);
    UniformMatroid m(n, n / 2);
    auto obj = testutil::random_objective(rng, inst, it);
    Solution s = solve(inst, m, *obj);
    CHECK(s.best.value == doctest::Approx(obj->evaluate(s.best.point)).epsilon(1e-12));
    CHECK(close_vec(s.best.point, weight_sum(inst, s.best.basis)));
    CHECK(m.is_independent(s.best.basis));
  }
}

TEST_CASE("identical weights collapse to a single chamber") {
  Instance inst{3, 2, {{2, 1}, {2, 1}, {2, 1}}};
  UniformMatroid m(3, 2);
  SqNorm obj(2);
  Solution s = solve(inst, m, obj);
  CHECK(s.chambers == 1);
  CHECK(s.best.value == doctest::Approx(obj.evaluate(Vec{4, 2})).epsilon(1e-12));
}
