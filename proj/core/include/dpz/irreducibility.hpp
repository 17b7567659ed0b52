#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dpz/certificate.hpp"
#include "dpz/involutions.hpp"
#include "dpz/lattice.hpp"
#include "dpz/short_vectors.hpp"

namespace dpz {

// Decides whether an involution of a unimodular lattice of rank <= 9 splits off an
// invariant unimodular summand.
//
// Criteria are tried in the order of `kAllCriteria`; within a criterion witnesses are
// searched by increasing height and the canonical (lowest, then lexicographically least)
// witness of the first criterion that has one is returned.
// The verdict is Irreducible only when the fixed-(-1), negated-(-1) and swapped-pair
// criteria are all obstructed; these three together are equivalent to reducibility in
// rank <= 9. Otherwise the verdict is Unknown.
ReducibilityResult check_reducible(const Isometry& g, Int height_bound = kDefaultHeightBound);

// Re-checks every witness predicate or obstruction predicate from scratch.
bool verify_certificate(const Isometry& g, const ReducibilityResult& result);

// -g.
Isometry negation_twist(const Isometry& g);

// classify_involutions(n) with verdicts and realizing model names filled in. Throws
// std::logic_error if any catalogue verdict is Unknown.
std::vector<InvolutionClass> involution_catalog(int n);
std::vector<InvolutionClass> irreducible_involution_classes(int n);

// One extracted invariant block: one or two orthonormal vectors of norm -1, or the
// orthogonal complement of a fixed norm +1 vector / hyperbolic pair when only those
// witnesses are available.
struct DecompositionStep {
  std::vector<Vector> block;  // ambient coordinates
  IntMatrix action;           // g restricted to the block, in the block basis
  CertificateKind from = CertificateKind::None;
};

enum class LeafType { DelPezzo, Quadric, Rank1, Unknown };

struct DecompositionLeaf {
  LeafType type = LeafType::Unknown;
  int index = 0;              // n for a del Pezzo leaf of rank n + 1
  std::vector<Vector> basis;  // ambient coordinates
  IntMatrix gram;
  IntMatrix action;           // g restricted to the leaf, in the leaf basis
  ReducibilityResult check;   // leaf re-check
};

struct DecompositionTree {
  std::vector<DecompositionStep> splits;  // outermost first; each node has one child
  DecompositionLeaf leaf;
};

DecompositionTree decompose(const Isometry& g, Int height_bound = kDefaultHeightBound);

std::string_view to_string(LeafType t);

}  // namespace dpz
