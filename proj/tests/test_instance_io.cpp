#include <doctest.h>

#include <cmath>
#include <string>
#include <variant>

#include "cmopt/errors.hpp"
#include "cmopt/instance_io.hpp"
#include "cmopt/solver.hpp"

using namespace cmopt;

TEST_CASE("minimal one-dimensional file parses and solves") {
  const std::string text =
      "# two scalar weights, pick both\n"
      "dim 1\n"
      "n 2\n"
      "3\n"
      "1\n"
      "matroid uniform 2\n"
      "objective sqnorm\n";
  InstanceFile f = parse_instance(text);
  CHECK(f.instance.n == 2);
  CHECK(f.instance.d == 1);
  CHECK(f.instance.weights[0] == Vec{3});
  auto m = f.make_matroid();
  auto obj = f.make_objective();
  Solution s = solve(f.instance, *m, *obj);
  CHECK(s.best.value == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("all matroid and objective kinds parse") {
  const std::string graphic =
      "dim 2\nn 3\n1 0\n0 1\n1 1\n"
      "matroid graphic 3\n0 1\n1 2\n0 2\n"
      "objective pnorm inf\n";
  InstanceFile g = parse_instance(graphic);
  CHECK(std::holds_alternative<GraphicSpec>(g.matroid));
  CHECK(std::isinf(std::get<PNormSpec>(g.objective).p));

  const std::string partition =
      "dim 2\nn 3\n1 0\n0 1\n1 1\n"
      "matroid partition\n1 1 2\n1 1\n"
      "objective balanced\n";
  InstanceFile p = parse_instance(partition);
  const auto& ps = std::get<PartitionSpec>(p.matroid);
  CHECK(ps.block_of == std::vector<int>{0, 0, 1});  // stored 0-based
  CHECK(ps.capacities == std::vector<int>{1, 1});

  const std::string linear =
      "dim 2\nn 3\n1 0\n0 1\n1 1\n"
      "matroid linear 2\n1 2 0\n0 0 1\n"
      "objective maxlin 2\n1 0\n0 -1\n";
  InstanceFile l = parse_instance(linear);
  CHECK(std::get<LinearSpec>(l.matroid).rows.size() == 2);
  CHECK(std::get<MaxLinSpec>(l.objective).rows.size() == 2);
}

TEST_CASE("rank exceeding n is a parse error with the offending line number") {
  const std::string text = "dim 1\nn 2\n3\n1\nmatroid uniform 5\nobjective sqnorm\n";
  try {
    parse_instance(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("other malformed inputs report accurate line numbers") {
  try {
    parse_instance("dim 2\nn 1\n1 2 3\nmatroid uniform 1\nobjective sqnorm\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);  // weight row has the wrong arity
  }
  try {
    parse_instance("dim 1\nn 1\n1\nmatroid uniform 1\nobjective pnorm 0.5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_instance("n 1\ndim 1\n1\nmatroid uniform 1\nobjective sqnorm\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance("dim 1\nn 1\n1\nmatroid uniform 1\n"), ParseError);
  CHECK_THROWS_AS(
      parse_instance("dim 1\nn 1\n1\nmatroid uniform 1\nobjective sqnorm\nextra\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  const std::string text =
      "dim 2\nn 3\n1.5 -0.25\n0 1\n1 1\n"
      "matroid graphic 3\n0 1\n1 2\n0 2\n"
      "objective maxlin 1\n2 -3\n";
  InstanceFile f = parse_instance(text);
  InstanceFile f2 = parse_instance(serialize_instance(f));
  CHECK(f2.instance.weights == f.instance.weights);
  CHECK(std::get<GraphicSpec>(f2.matroid).edges == std::get<GraphicSpec>(f.matroid).edges);
  CHECK(std::get<MaxLinSpec>(f2.objective).rows == std::get<MaxLinSpec>(f.objective).rows);

  const std::string part =
      "dim 1\nn 2\n0.1\n0.2\nmatroid partition\n1 2\n1 1\nobjective pnorm 3\n";
  InstanceFile pf = parse_instance(part);
  InstanceFile pf2 = parse_instance(serialize_instance(pf));
  CHECK(std::get<PartitionSpec>(pf2.matroid).block_of ==
        std::get<PartitionSpec>(pf.matroid).block_of);
  CHECK(std::get<PNormSpec>(pf2.objective).p == 3.0);
}

TEST_CASE("points and matrix files") {
  auto pts = parse_points_file("dim 2\nn 3\n0 0\n1 0\n# comment\n0 1\n");
  REQUIRE(pts.size() == 3);
  CHECK(pts[2] == Vec{0, 1});
  CHECK_THROWS_AS(parse_points_file("dim 2\nn 3\n0 0\n1 0\n"), ParseError);

  QAInstance qa = parse_matrix_file("dim 2\nn 3\n1 2 3\n4 5 6\n");
  CHECK(qa.d == 2);
  REQUIRE(qa.columns.size() == 3);
  CHECK(qa.columns[0] == Vec{1, 4});
  CHECK(qa.columns[2] == Vec{3, 6});
}
