#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dpz/lattice.hpp"

namespace dpz {

// Ref_v(w) = w - (2 Q(v, w) / Q(v, v)) v; requires Q(v, v) in {+-1, +-2}.
IntMatrix reflection(const Lattice& lattice, const Vector& v);

// Vectors whose reflections generate the stabilizer of the nef cone in Z^{1,n}:
// n = 2: H+E1+E2, E1-E2, E2; n >= 3: H+E1+E2+E3, Ei-E(i+1), En.
std::vector<Vector> wall_generators(int n);

// n = 2: H-E1-E2, E1-E2. n >= 3: H-E1-E2-E3, E1-E2, ..., E(n-1)-En.
std::vector<Vector> weyl_generator_vectors(int n);
std::vector<IntMatrix> weyl_generators(int n);

// Vectors of norm -2 orthogonal to K in Z^{1,n}, 0 <= n <= 8. Sorted lexicographically.
std::vector<Vector> roots(int n);
// One of +-r for each root r: the one whose first nonzero coordinate is positive.
std::vector<Vector> positive_roots(int n);
bool is_root(int n, const Vector& v);

// Order of W_n. Uses the stabilizer chain of the root system for n >= 3.
Int weyl_order(int n);

// All products of the generators (breadth first). Throws Unsupported past `limit` elements.
std::vector<IntMatrix> enumerate_group(const std::vector<IntMatrix>& generators, std::size_t dim,
                                       std::size_t limit = 1'000'000);

// Product of `length` generators drawn uniformly.
IntMatrix random_weyl_element(int n, std::mt19937_64& rng, int length = 24);

// Orbit of a vector under the group generated by reflections in `mirrors`
// (each of norm -2). Breadth first from `v`.
std::vector<Vector> reflection_orbit(const Lattice& lattice, const Vector& v, const std::vector<Vector>& mirrors);

}  // namespace dpz
