#pragma once

#include <cstdint>
#include <vector>

#include "cmopt/geometry.hpp"

namespace cmopt {

// One maximal open cell of the central arrangement {a : a.h = 0, h in normals},
// i.e. the normal cone of one zonotope vertex. The witness is strictly
// interior: signs[k] * (witness . normals[k]) > kSignTol for every k.
struct Chamber {
  std::vector<std::int8_t> signs;
  Vec witness;
};

// Exact angular-sweep enumeration for d = 2. Returns exactly 2 * |normals|
// chambers; throws std::invalid_argument when d != 2 or normals is empty.
// Sign vectors are computed only when with_signs is set (they cost
// |normals| dot products per chamber).
std::vector<Chamber> enumerate_chambers_2d(const GeneratorSet& gens, bool with_signs = true);

// Incremental cell enumeration for any d >= 1: normals are inserted one at a
// time; chambers cut by the new hyperplane are split, with strict interior
// witnesses certified by max_margin. The resulting set of sign vectors is
// insertion-order independent.
std::vector<Chamber> enumerate_chambers_nd(const GeneratorSet& gens);

// Exact maximum number of chambers of a central arrangement of m_prime
// distinct hyperplanes in R^d: 2 * sum_{k=0}^{d-1} C(m_prime - 1, k), and 1
// when m_prime = 0. Saturates at UINT64_MAX.
std::uint64_t chamber_count_bound(int m_prime, int d);

}  // namespace cmopt
