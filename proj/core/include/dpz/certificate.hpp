#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dpz/int_matrix.hpp"

namespace dpz {

enum class Verdict { Reducible, Irreducible, Unknown };

enum class CertificateKind {
  None,
  // witnesses
  FixedNormPlus1,
  FixedHyperbolicPair,
  SwappedOrFixedMinus1Pair,
  FixedNormMinus1,
  AntiFixedNormMinus1,
  // obstructions
  EvenFixedLatticeObstruction,
  Mod2Obstruction,
  AntiFixedObstruction,
  DefiniteSearchObstruction,
};

// Reducibility criteria, tried in this order.
enum class Criterion {
  FixedNormPlus1,       // fixed c, Q(c,c) = 1; ambient rank 2..8
  FixedHyperbolicPair,  // fixed or swapped isotropic pair with Q(c1,c2) = 1; ambient rank 3..9
  FixedNormMinus1,      // fixed c, Q(c,c) = -1
  AntiFixedNormMinus1,  // g(c) = -c, Q(c,c) = -1
  SwappedMinus1Pair,    // g(c1) = c2, Q(ci,cj) = -delta_ij
};

inline constexpr Criterion kAllCriteria[] = {Criterion::FixedNormPlus1, Criterion::FixedHyperbolicPair,
                                             Criterion::FixedNormMinus1, Criterion::AntiFixedNormMinus1,
                                             Criterion::SwappedMinus1Pair};

// Mechanical checks backing an obstruction; re-run by verify_certificate.
enum class ObstructionCheck {
  PlusEven,                // L+ is even
  MinusEven,               // L- is even
  PlusGramEven,            // every inner product in L+ is even
  PlusDefiniteNoNorm,      // L+ definite with no vector of norm `norm`
  MinusDefiniteNoNorm,     // L- definite with no vector of norm `norm`
  PlusDefiniteAnisotropic, // L+ definite, so no nonzero isotropic vector
  PairMinusDefinite,       // norm `norm` vectors of L- are not congruent mod 2L to any vector of L+
  PairPlusDefinite,        // norm `other_norm` vectors of L+ are not congruent mod 2L to any vector of L-
  PairComplete,            // both sides definite, complete pair search empty
};

struct Obstruction {
  Criterion criterion;
  CertificateKind kind;
  ObstructionCheck check;
  Int norm = 0;        // norm on L- for pair checks, else the searched norm
  Int other_norm = 0;  // norm on L+ for pair checks
  std::string predicate;
};

struct ReducibilityCertificate {
  CertificateKind kind = CertificateKind::None;
  std::vector<Vector> witnesses;  // ambient coordinates
  std::string predicate;
  Int height = 0;                 // max |Q(c, P)| over the witnesses
  Int height_bound = 0;
  std::vector<Obstruction> obstructions;
  std::vector<Criterion> undecided;  // searched to the bound without witness or obstruction
};

struct ReducibilityResult {
  Verdict verdict = Verdict::Unknown;
  ReducibilityCertificate certificate;
};

std::string_view to_string(Verdict v);
std::string_view to_string(CertificateKind k);
std::string_view to_string(Criterion c);
std::string_view to_string(ObstructionCheck c);
Verdict verdict_from_string(std::string_view s);
CertificateKind certificate_kind_from_string(std::string_view s);
Criterion criterion_from_string(std::string_view s);
ObstructionCheck obstruction_check_from_string(std::string_view s);

}  // namespace dpz
