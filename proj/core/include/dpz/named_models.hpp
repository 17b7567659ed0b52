#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpz/lattice.hpp"

namespace dpz {

enum class ModelName { DeJonquieres, Geiser, Bertini };
enum class BasisKind { HE, Quadric };

struct NamedInvolution {
  ModelName name;
  int n = 0;
  int degree = 0;  // algebraic degree annotation for de Jonquieres models, else 0
  Isometry involution;
  BasisKind basis = BasisKind::HE;

  std::string label() const;  // DeJonquieres(d), Geiser, Bertini
};

// prod_{k=1}^{(n-1)/2} Ref_{H-E1-E(2k)-E(2k+1)} o Ref_{E(2k)-E(2k+1)}; n odd, 5 <= n <= 7.
NamedInvolution de_jonquieres(int n);

// The isometry with g(C) = C, g(v_k) = C - v_k, completed on a vector c with Q(C, c) = 1.
// Requires Q(C,C) = 0, Q(C,v_k) = 0, Q(v_k,v_l) = -delta and rank = #v + 2.
Isometry de_jonquieres_model(const Lattice& lattice, const Vector& C, const std::vector<Vector>& v);

// -1 on K^perp and +1 on K, from the projection formula; n = 7 and n = 8.
NamedInvolution geiser();
NamedInvolution bertini();

// Seven (eight) pairwise orthogonal roots whose reflections multiply to the Geiser (Bertini) model.
std::vector<Vector> geiser_root_set();
std::vector<Vector> bertini_root_set();

// Product of reflections in pairwise orthogonal vectors of norm -2 in Z^{1,n}.
Isometry involution_from_roots(int n, const std::vector<Vector>& roots);

// Model lookup by CLI name: dejonquieres (needs n), geiser, bertini.
NamedInvolution named_model(std::string_view name, std::optional<int> n = std::nullopt);

// Unimodular map between labelled bases; columns are images of source basis vectors in
// target coordinates, so matrix^T * gram_target * matrix = gram_source.
struct BasisChange {
  Lattice source;
  Lattice target;
  IntMatrix matrix;
};

// S1 -> H-E1, S2 -> H-E2, e1 -> H-E1-E2, e_j -> E(j+1); 2 <= n <= 8.
BasisChange quadric_basis_change(int n);

// g expressed in the target basis: T g T^{-1}.
Isometry transport(const Isometry& g, const BasisChange& change);

// p - m for the form restricted to L+.
Int quotient_signature(const Isometry& g);
// 2 * quotient_signature - signature of the ambient form.
Int defect_sum(const Isometry& g);

}  // namespace dpz
