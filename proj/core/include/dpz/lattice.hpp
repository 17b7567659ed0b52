#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpz/int_matrix.hpp"

namespace dpz {

enum class LatticeFamily { DelPezzo, Quadric, BlownUpQuadric, Custom };

// Free Z-module with a symmetric bilinear form, given by its Gram matrix in a fixed basis.
// `polarization` is a vector of positive norm used to slice indefinite searches into
// finite layers; it is empty when the form is not Lorentzian.
struct Lattice {
  IntMatrix gram;
  std::vector<std::string> labels;
  Vector polarization;
  LatticeFamily family = LatticeFamily::Custom;
  int index = 0;  // n for del Pezzo / blown-up quadric lattices

  std::size_t rank() const { return gram.rows(); }
  bool operator==(const Lattice& other) const { return gram == other.gram && labels == other.labels; }
};

// Z^{1,n}: basis H, E1..En with Q = diag(1,-1,...,-1).
Lattice del_pezzo(int n);
// Z{S1,S2} with Q = [[0,1],[1,0]].
Lattice quadric();
// Quadric lattice plus n-1 exceptional classes: basis S1,S2,e1..e_{n-1}; rank n+1.
Lattice blown_up_quadric(int n);
// Arbitrary nondegenerate symmetric Gram matrix. A polarization is computed when the form
// has signature (1, r-1) and no explicit one is supplied.
Lattice lattice_from_gram(const IntMatrix& gram, std::vector<std::string> labels = {},
                          Vector polarization = {});

// Canonical class: -3H+sum Ei, -2S1-2S2+sum ei. Empty for custom lattices.
Vector canonical_class(const Lattice& lattice);

Int inner(const Lattice& lattice, const Vector& v, const Vector& w);
Int norm(const Lattice& lattice, const Vector& v);
Vector basis_vector(const Lattice& lattice, std::size_t i);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  bool operator==(const Signature&) const = default;
};

Signature signature(const IntMatrix& gram);
// Every vector has even norm (diagonal of the Gram matrix is even).
bool is_even(const IntMatrix& gram);
// Every inner product is even.
bool is_doubly_even_gram(const IntMatrix& gram);

// Some integral vector of positive norm, if the form has one.
std::optional<Vector> positive_vector(const IntMatrix& gram);

// Saturated sublattice of an ambient lattice; basis rows are ambient coordinates.
struct Sublattice {
  Lattice ambient;
  std::vector<Vector> basis;

  std::size_t rank() const { return basis.size(); }
  IntMatrix gram() const;
  IntMatrix basis_matrix() const;  // rows = basis vectors
  bool contains(const Vector& v) const;
  // Coordinates of an element of the sublattice in its own basis.
  Vector coordinates(const Vector& v) const;
  Vector from_coordinates(const Vector& c) const;
};

Sublattice span(const Lattice& ambient, const std::vector<Vector>& generators);
Sublattice whole(const Lattice& ambient);
// {x in ambient : Q(x, s) = 0 for all s in sub}
Sublattice orthogonal_complement(const Sublattice& sub);
// Orthogonal complement of `sub` inside `inside`.
Sublattice orthogonal_complement(const Sublattice& sub, const Sublattice& inside);

// Lattice structure on a sublattice in its own basis. The polarization is the projection
// of the ambient one (scaled to be primitive) when that projection has positive norm.
Lattice as_lattice(const Sublattice& sub);

bool is_isometry(const Lattice& lattice, const IntMatrix& m);
bool is_involution(const IntMatrix& m);

// Integer matrix acting on column coordinate vectors and preserving the form.
struct Isometry {
  Lattice lattice;
  IntMatrix matrix;

  Vector apply(const Vector& v) const { return matrix * v; }
};

// Validates squareness, dimension and preservation of the form.
Isometry make_isometry(const Lattice& lattice, const IntMatrix& m);

// L+ = ker(g - 1), L- = ker(g + 1).
std::pair<Sublattice, Sublattice> fixed_and_antifixed(const Isometry& g);

// Matrix of g restricted to an invariant sublattice, in the sublattice basis.
IntMatrix restrict_to(const Isometry& g, const Sublattice& sub);

// Change of basis: rows of `basis` are the new basis vectors in old coordinates.
IntMatrix conjugate_to_basis(const IntMatrix& g, const IntMatrix& basis_rows);

std::string format_vector(const Lattice& lattice, const Vector& v);

}  // namespace dpz
