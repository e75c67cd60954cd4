#pragma once

#include <vector>

#include "cmopt/geometry.hpp"

namespace cmopt {

// Evaluation oracle for a convex functional c : R^d -> R. Convexity is the
// caller's promise; it is not verified here.
class ConvexObjective {
 public:
  virtual ~ConvexObjective() = default;
  virtual int dim() const = 0;
  virtual double evaluate(const Vec& x) const = 0;
};

// x -> ||x||^2
class SqNorm : public ConvexObjective {
 public:
  explicit SqNorm(int d);
  int dim() const override { return d_; }
  double evaluate(const Vec& x) const override;

 private:
  int d_;
};

// x -> ||x||_p, p >= 1; p = infinity gives the max norm.
class PNorm : public ConvexObjective {
 public:
  PNorm(int d, double p);
  int dim() const override { return d_; }
  double p() const { return p_; }
  double evaluate(const Vec& x) const override;

 private:
  int d_;
  double p_;
};

// x -> max over rows of row . x
class MaxLin : public ConvexObjective {
 public:
  explicit MaxLin(std::vector<Vec> rows);
  int dim() const override { return d_; }
  const std::vector<Vec>& rows() const { return rows_; }
  double evaluate(const Vec& x) const override;

 private:
  std::vector<Vec> rows_;
  int d_;
};

// x -> ||x||^2 + ||t - x||^2, the two-cluster objective with fixed total t.
class Balanced : public ConvexObjective {
 public:
  explicit Balanced(Vec total);
  int dim() const override { return static_cast<int>(total_.size()); }
  const Vec& total() const { return total_; }
  double evaluate(const Vec& x) const override;

 private:
  Vec total_;
};

}  // namespace cmopt
