#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dpz/lattice.hpp"

namespace dpz {

// Default bound on the height |Q(x, P)| used for searches in indefinite lattices,
// P being the ambient polarization (-K for del Pezzo lattices).
inline constexpr Int kDefaultHeightBound = 10;

// Finds vectors of a prescribed norm in a sublattice.
//
// Definite sublattices are enumerated completely (Fincke-Pohst with exact rational
// arithmetic). Indefinite sublattices of a Lorentzian ambient are enumerated layer by
// layer: the layer j = Q(x, P) is an affine translate of a negative definite lattice,
// so each layer is finite and enumerated completely.
class NormSearch {
 public:
  explicit NormSearch(const Sublattice& sub);
  ~NormSearch();
  NormSearch(NormSearch&&) noexcept;
  NormSearch& operator=(NormSearch&&) noexcept;

  const Sublattice& sublattice() const;
  bool definite() const;
  // +1 positive definite, -1 negative definite, 0 otherwise.
  int definite_sign() const;

  // Every vector of norm `target` (definite sublattices only). Sorted lexicographically.
  std::vector<Vector> all_of_norm(Int target) const;
  // Vectors x with Q(x, x) = target and Q(x, P) = layer. Sorted lexicographically.
  std::vector<Vector> layer(Int target, Int layer) const;
  // Layers are multiples of this positive integer.
  Int layer_step() const;
  Int height(const Vector& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ShortVectorResult {
  std::vector<Vector> vectors;  // ambient coordinates, sorted by height then lexicographically
  bool truncated = false;       // true when the search was limited by the height bound
};

// All vectors of norm `target` in `sub` (complete when `sub` is definite), otherwise all
// such vectors of height at most `height_bound`.
ShortVectorResult short_vectors(const Sublattice& sub, Int target, Int height_bound = kDefaultHeightBound);

}  // namespace dpz
