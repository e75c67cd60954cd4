#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cmopt/geometry.hpp"

namespace cmopt {

// Independence oracle over ground set {0..n-1}. Subsets passed to
// is_independent hold distinct indices in any order.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const int> subset) const = 0;
};

// Sorted element indices of a maximal independent set.
using Basis = std::vector<int>;

// Independent sets are the subsets of size at most r.
class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(int n, int r);
  int ground_size() const override { return n_; }
  int rank_bound() const { return r_; }
  bool is_independent(std::span<const int> subset) const override;

 private:
  int n_, r_;
};

// Ground set = edges of a graph on vertices {0..V-1}; independence = acyclic.
class GraphicMatroid : public MatroidOracle {
 public:
  GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges);
  int ground_size() const override { return static_cast<int>(edges_.size()); }
  int vertex_count() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool is_independent(std::span<const int> subset) const override;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Per-block cardinality caps.
class PartitionMatroid : public MatroidOracle {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> capacities);
  int ground_size() const override { return static_cast<int>(block_of_.size()); }
  const std::vector<int>& block_of() const { return block_of_; }
  const std::vector<int>& capacities() const { return capacities_; }
  bool is_independent(std::span<const int> subset) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> capacities_;
};

// Element j = column j of a real matrix; independence = linear independence,
// tested by elimination with pivot tolerance 1e-9.
class LinearMatroid : public MatroidOracle {
 public:
  explicit LinearMatroid(std::vector<Vec> rows);  // rows[i][j] = entry (i, j)
  int ground_size() const override { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  bool is_independent(std::span<const int> subset) const override;

 private:
  std::vector<Vec> rows_;
  int n_;
};

// Size of every basis: greedy closure of the empty set.
int rank(const MatroidOracle& m);

// Sort by decreasing b-value (ties to the lower index), scan once keeping
// each element that preserves independence. Attains the maximum basis
// b-weight; among maximizers returns the first under the tie-broken order.
Basis greedy_max_basis(const MatroidOracle& m, std::span<const double> b);

struct EnumLimits {
  int max_n = 20;
  std::uint64_t max_count = 1'000'000;  // cap on C(n, rank)
};

// All bases in lexicographic order. Throws LimitError when the limits are
// exceeded (refusal, not silence).
std::vector<Basis> enumerate_bases(const MatroidOracle& m, const EnumLimits& limits = {});

}  // namespace cmopt
