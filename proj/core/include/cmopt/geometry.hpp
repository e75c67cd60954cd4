#pragma once

#include <span>
#include <vector>

namespace cmopt {

using Vec = std::vector<double>;

// Absolute tolerance for strict sign decisions on dot products.
inline constexpr double kSignTol = 1e-9;

double dot(const Vec& x, const Vec& y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scaled(const Vec& x, double s);
double norm2(const Vec& x);
double inf_norm(const Vec& x);
Vec zero_vec(int d);
Vec unit_vec(int d, int k);

// Ground set {0..n-1} with one weight vector in R^d per element.
struct Instance {
  int n = 0;
  int d = 1;
  std::vector<Vec> weights;

  void validate() const;  // throws std::invalid_argument
};

// Difference w(i) - w(j) for one pair i < j.
struct RawGenerator {
  int i = 0;
  int j = 0;
  Vec g;
};

// Which canonical normal a raw generator is a positive multiple of.
struct DirectionRef {
  int normal = -1;
  int sign = +1;  // raw g = (positive scalar) * sign * normals[normal]
};

// Segment directions of the zonotope plus one canonical normal per
// parallel class of hyperplane directions.
struct GeneratorSet {
  std::vector<RawGenerator> raw;
  std::vector<Vec> normals;
  std::vector<DirectionRef> direction_of;  // indexed like raw
};

// Scale so the first nonzero coordinate is exactly +1.
Vec canonical_direction(const Vec& g);

GeneratorSet build_generators(const Instance& inst);

// Sum of weights over a subset of {0..n-1}; empty subset gives the zero vector.
Vec weight_sum(const Instance& inst, std::span<const int> subset);

// Vertex of the zonotope whose normal cone contains `witness`.
// Throws NumericError if witness is within kSignTol of some generator's wall.
Vec zonotope_vertex(const GeneratorSet& gens, const Vec& witness);

}  // namespace cmopt
