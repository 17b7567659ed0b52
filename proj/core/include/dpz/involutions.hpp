#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dpz/certificate.hpp"
#include "dpz/lattice.hpp"
#include "dpz/short_vectors.hpp"

namespace dpz {

// t = rank L+ - r, c = rank L- - r, r = rank over F2 of (1 + g).
struct ZGInvariant {
  int t = 0;
  int c = 0;
  int r = 0;
  auto operator<=>(const ZGInvariant&) const = default;
};

ZGInvariant zg_invariant(const Isometry& g);

// Number of -1 eigenvalues (rank of L-).
int carter_exponent(const Isometry& g);

// Conjugation invariants used to separate classes of involutions. The four flags record
// whether a witness of the corresponding kind exists at height <= the bound; heights are
// W_n-invariant, so the tuple is a class function.
struct InvolutionInvariants {
  int m = 0;
  ZGInvariant zg;
  bool plus_even = false;
  bool minus_even = false;
  Int det_plus = 0;  // |det| of the Gram matrix of L+
  Int det_minus = 0;
  bool fixes_norm_plus1 = false;
  bool fixes_norm_minus1 = false;
  bool fixes_hyperbolic_pair = false;
  bool swaps_minus1_pair = false;
  auto operator<=>(const InvolutionInvariants&) const = default;
};

InvolutionInvariants involution_invariants(const Isometry& g, Int height_bound = kDefaultHeightBound);

struct InvolutionClass {
  int n = 0;
  std::size_t index = 0;           // position in the catalogue
  IntMatrix representative;        // in the H, E1..En basis
  std::vector<Vector> root_set;    // orthogonal roots whose reflections multiply to the representative
  int carter_exponent = 0;
  ZGInvariant zg;
  InvolutionInvariants invariants;
  std::size_t class_size = 0;      // size of the conjugacy class when it was enumerated, else 0
  bool conjugacy_verified = false; // merges checked by explicit conjugation
  std::optional<ReducibilityResult> verdict;
  std::string realized_by;         // named model with the same invariants, if any
};

// Conjugacy classes of involutions in W_n, sorted by (m, zg, invariants).
std::vector<InvolutionClass> classify_involutions(int n);

// Maximal sets of pairwise orthogonal roots up to the action of W_n (n >= 3). Each set is
// sorted and consists of roots whose first nonzero coordinate is positive.
std::vector<std::vector<Vector>> maximal_orthogonal_root_sets(int n);

// Orbit of g under conjugation by W_n (breadth first). Throws Unsupported past `limit`.
std::vector<IntMatrix> conjugacy_orbit(const IntMatrix& g, int n, std::size_t limit = 2'000'000);

// Conjugacy test in W_n by explicit orbit search; n <= 7.
bool are_conjugate(const IntMatrix& g, const IntMatrix& h, int n);

}  // namespace dpz
