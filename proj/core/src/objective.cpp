#include "cmopt/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cmopt {

namespace {

void check_dim(const Vec& x, int d, const char* who) {
  if (x.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument(std::string(who) + ": argument dimension mismatch");
}

}  // namespace

SqNorm::SqNorm(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("SqNorm: d must be positive");
}

double SqNorm::evaluate(const Vec& x) const {
  check_dim(x, d_, "SqNorm");
  return dot(x, x);
}

PNorm::PNorm(int d, double p) : d_(d), p_(p) {
  if (d < 1) throw std::invalid_argument("PNorm: d must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("PNorm: p must be >= 1");
}

double PNorm::evaluate(const Vec& x) const {
  check_dim(x, d_, "PNorm");
  if (std::isinf(p_)) return inf_norm(x);
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p_);
  return std::pow(s, 1.0 / p_);
}

MaxLin::MaxLin(std::vector<Vec> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("MaxLin: need at least one row");
  d_ = static_cast<int>(rows_.front().size());
  for (const Vec& r : rows_)
    if (r.size() != static_cast<std::size_t>(d_))
      throw std::invalid_argument("MaxLin: ragged rows");
}

double MaxLin::evaluate(const Vec& x) const {
  check_dim(x, d_, "MaxLin");
  double best = dot(rows_.front(), x);
  for (std::size_t i = 1; i < rows_.size(); ++i) best = std::max(best, dot(rows_[i], x));
  return best;
}

Balanced::Balanced(Vec total) : total_(std::move(total)) {
  if (total_.empty()) throw std::invalid_argument("Balanced: empty total vector");
}

double Balanced::evaluate(const Vec& x) const {
  check_dim(x, dim(), "Balanced");
  double s = dot(x, x);
  Vec rest = sub(total_, x);
  return s + dot(rest, rest);
}

}  // namespace cmopt
