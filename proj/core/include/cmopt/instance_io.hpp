#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cmopt/applications.hpp"
#include "cmopt/geometry.hpp"
#include "cmopt/matroid.hpp"
#include "cmopt/objective.hpp"

namespace cmopt {

struct UniformSpec {
  int r = 0;
};
struct GraphicSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
struct PartitionSpec {
  std::vector<int> block_of;  // 0-based block per element
  std::vector<int> capacities;
};
struct LinearSpec {
  std::vector<Vec> rows;
};
using MatroidSpec = std::variant<UniformSpec, GraphicSpec, PartitionSpec, LinearSpec>;

struct SqNormSpec {};
struct PNormSpec {
  double p = 2.0;  // may be infinity
};
struct BalancedSpec {};
struct MaxLinSpec {
  std::vector<Vec> rows;
};
using ObjectiveSpec = std::variant<SqNormSpec, PNormSpec, BalancedSpec, MaxLinSpec>;

// A fully parsed instance file: problem data plus matroid/objective choice.
struct InstanceFile {
  Instance instance;
  MatroidSpec matroid;
  ObjectiveSpec objective;

  std::unique_ptr<MatroidOracle> make_matroid() const;
  std::unique_ptr<ConvexObjective> make_objective() const;
};

// Line-oriented text format; '#' starts a comment; throws ParseError with a
// 1-based line number on any malformed input.
InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& file);

// `dim d` / `n k` header followed by k rows of d numbers (one point per row).
std::vector<Vec> parse_points_file(const std::string& text);

// `dim d` / `n k` header followed by d rows of k numbers (the matrix W).
QAInstance parse_matrix_file(const std::string& text);

}  // namespace cmopt
