#include "cmopt/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cmopt/errors.hpp"

namespace cmopt {

namespace {

void check_indices(std::span<const int> subset, int n) {
  for (int j : subset)
    if (j < 0 || j >= n) throw std::out_of_range("matroid: element index out of range");
}

}  // namespace

UniformMatroid::UniformMatroid(int n, int r) : n_(n), r_(r) {
  if (n < 0 || r < 0 || r > n) throw std::invalid_argument("UniformMatroid: need 0 <= r <= n");
}

bool UniformMatroid::is_independent(std::span<const int> subset) const {
  check_indices(subset, n_);
  return static_cast<int>(subset.size()) <= r_;
}

GraphicMatroid::GraphicMatroid(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertices_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("GraphicMatroid: negative vertex count");
  for (const auto& [u, v] : edges_)
    if (u < 0 || u >= vertices_ || v < 0 || v >= vertices_)
      throw std::invalid_argument("GraphicMatroid: edge endpoint out of range");
}

bool GraphicMatroid::is_independent(std::span<const int> subset) const {
  check_indices(subset, ground_size());
  // Union-find; a cycle shows up as a union of two already-joined vertices.
  std::vector<int> parent(static_cast<std::size_t>(vertices_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e : subset) {
    const auto& [u, v] = edges_[static_cast<std::size_t>(e)];
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;  // self-loops always close a cycle
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

PartitionMatroid::PartitionMatroid(std::vector<int> block_of, std::vector<int> capacities)
    : block_of_(std::move(block_of)), capacities_(std::move(capacities)) {
  for (int c : capacities_)
    if (c < 0) throw std::invalid_argument("PartitionMatroid: negative capacity");
  for (int b : block_of_)
    if (b < 0 || b >= static_cast<int>(capacities_.size()))
      throw std::invalid_argument("PartitionMatroid: block id out of range");
}

bool PartitionMatroid::is_independent(std::span<const int> subset) const {
  check_indices(subset, ground_size());
  std::vector<int> count(capacities_.size(), 0);
  for (int j : subset) {
    const auto b = static_cast<std::size_t>(block_of_[static_cast<std::size_t>(j)]);
    if (++count[b] > capacities_[b]) return false;
  }
  return true;
}

LinearMatroid::LinearMatroid(std::vector<Vec> rows) : rows_(std::move(rows)) {
  n_ = rows_.empty() ? 0 : static_cast<int>(rows_.front().size());
  for (const Vec& r : rows_) {
    if (r.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("LinearMatroid: ragged matrix");
    for (double v : r)
      if (!std::isfinite(v)) throw std::invalid_argument("LinearMatroid: entry not finite");
  }
}

bool LinearMatroid::is_independent(std::span<const int> subset) const {
  check_indices(subset, n_);
  const std::size_t rows = rows_.size();
  const std::size_t cols = subset.size();
  if (cols > rows) return false;
  // Columns of the subset, eliminated with partial pivoting.
  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = rows_[i][static_cast<std::size_t>(subset[c])];

  constexpr double kPivotTol = 1e-9;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = row;
    for (std::size_t i = row; i < rows; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[piv][c])) piv = i;
    if (row >= rows || std::fabs(a[piv][c]) <= kPivotTol) return false;
    std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      const double f = a[i][c] / a[row][c];
      for (std::size_t cc = c; cc < cols; ++cc) a[i][cc] -= f * a[row][cc];
    }
    ++row;
  }
  return true;
}

int rank(const MatroidOracle& m) {
  std::vector<int> cur;
  const int n = m.ground_size();
  for (int j = 0; j < n; ++j) {
    cur.push_back(j);
    if (!m.is_independent(cur)) cur.pop_back();
  }
  return static_cast<int>(cur.size());
}

Basis greedy_max_basis(const MatroidOracle& m, std::span<const double> b) {
  const int n = m.ground_size();
  if (b.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("greedy_max_basis: b must have length n");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const double bx = b[static_cast<std::size_t>(x)], by = b[static_cast<std::size_t>(y)];
    if (bx != by) return bx > by;
    return x < y;
  });
  Basis cur;
  for (int j : order) {
    cur.push_back(j);
    if (!m.is_independent(cur)) cur.pop_back();
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

namespace {

std::uint64_t binom_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - i + 1);
    if (c > kMax / num) return kMax;
    c = c * num / static_cast<std::uint64_t>(i);
  }
  return c;
}

void enumerate_rec(const MatroidOracle& m, int next, int r, std::vector<int>& cur,
                   std::vector<Basis>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  const int n = m.ground_size();
  const int need = r - static_cast<int>(cur.size());
  for (int j = next; j <= n - need; ++j) {
    cur.push_back(j);
    if (m.is_independent(cur)) enumerate_rec(m, j + 1, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Basis> enumerate_bases(const MatroidOracle& m, const EnumLimits& limits) {
  const int n = m.ground_size();
  if (n > limits.max_n)
    throw LimitError("enumerate_bases: ground set larger than the configured limit");
  const int r = rank(m);
  if (binom_saturating(n, r) > limits.max_count)
    throw LimitError("enumerate_bases: C(n, rank) exceeds the configured limit");
  std::vector<Basis> out;
  std::vector<int> cur;
  enumerate_rec(m, 0, r, cur, out);
  return out;
}

}  // namespace cmopt
