#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dpz/certificate.hpp"
#include "dpz/lattice.hpp"

namespace dpz {

// Elementary searches behind the reducibility criteria. The hyperbolic-pair criterion is
// the union of FixedHyperbolic and SwappedHyperbolic.
enum class Probe {
  FixedPlus1,         // c in L+, Q(c,c) = 1
  FixedMinus1,        // c in L+, Q(c,c) = -1
  AntiFixedMinus1,    // c in L-, Q(c,c) = -1
  FixedHyperbolic,    // c1, c2 in L+ isotropic, Q(c1,c2) = 1
  SwappedHyperbolic,  // c1 = (a+b)/2, c2 = (b-a)/2 with a in L- of norm -2, b in L+ of norm 2
  SwappedMinus1Pair,  // c1 = (a+b)/2, c2 = (b-a)/2 with a in L-, b in L+, both of norm -2
};

Criterion criterion_of(Probe p);
std::vector<Probe> probes_of(Criterion c);

struct Witness {
  Probe probe;
  CertificateKind kind;
  std::vector<Vector> vectors;  // ambient coordinates
  std::string predicate;
  Int height = 0;
};

// Fixed and anti-fixed lattices of an involution together with cached vector searches.
// Heights are |Q(x, P)| for the ambient polarization P.
class InvolutionAnalysis {
 public:
  explicit InvolutionAnalysis(const Isometry& g);
  ~InvolutionAnalysis();
  InvolutionAnalysis(InvolutionAnalysis&&) noexcept;
  InvolutionAnalysis& operator=(InvolutionAnalysis&&) noexcept;

  const Isometry& involution() const;
  const Sublattice& plus() const;
  const Sublattice& minus() const;
  Int height(const Vector& x) const;

  // A proof that the probe has no witness at any height, if one of the cheap checks applies.
  std::optional<Obstruction> obstruction(Probe p);
  // Re-runs the mechanical check behind an obstruction.
  bool holds(const Obstruction& o);

  // Every witness of exactly this height, sign normalized and sorted; the first is canonical.
  std::vector<Witness> all_at_height(Probe p, Int h);
  // Canonical witness of exactly this height, if any.
  std::optional<Witness> find_at_height(Probe p, Int h);
  // Lowest-height witness up to `cap`; nullopt when obstructed or nothing found.
  std::optional<Witness> find_up_to(Probe p, Int cap);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Checks a witness against its predicate: membership, g-action and intersection numbers.
bool witness_valid(const Isometry& g, CertificateKind kind, const std::vector<Vector>& vectors);

}  // namespace dpz
