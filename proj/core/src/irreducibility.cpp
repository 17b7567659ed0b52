#include "dpz/irreducibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dpz/errors.hpp"
#include "dpz/named_models.hpp"
#include "dpz/normal_form.hpp"
#include "dpz/witness_search.hpp"

namespace dpz {

namespace {

constexpr Criterion kExactCriteria[] = {Criterion::FixedNormMinus1, Criterion::AntiFixedNormMinus1,
                                        Criterion::SwappedMinus1Pair};

bool applicable(Criterion c, std::size_t rank) {
  switch (c) {
    case Criterion::FixedNormPlus1:
      return rank >= 2 && rank <= 8;
    case Criterion::FixedHyperbolicPair:
      return rank >= 3 && rank <= 9;
    default:
      return true;
  }
}

void validate(const Isometry& g) {
  const Lattice& l = g.lattice;
  if (!g.matrix.is_square() || g.matrix.rows() != l.rank())
    throw InputError("matrix size does not match lattice rank " + std::to_string(l.rank()));
  if (!is_isometry(l, g.matrix)) throw InputError("matrix does not preserve the intersection form");
  if (!is_involution(g.matrix)) throw InputError("matrix is not an involution");
  Int d = determinant(l.gram);
  if (d != 1 && d != -1) throw InputError("reducibility needs a unimodular lattice");
}

// Obstruction checks that are valid proofs for a probe.
bool admissible(Probe p, const Obstruction& o) {
  using C = ObstructionCheck;
  auto pair_ok = [&](Int na, Int nb) {
    switch (o.check) {
      case C::MinusDefiniteNoNorm:
        return o.norm == na;
      case C::PlusDefiniteNoNorm:
        return o.norm == nb;
      case C::PairMinusDefinite:
      case C::PairPlusDefinite:
      case C::PairComplete:
        return o.norm == na && o.other_norm == nb;
      default:
        return false;
    }
  };
  switch (p) {
    case Probe::FixedPlus1:
      return o.check == C::PlusEven || (o.check == C::PlusDefiniteNoNorm && o.norm == 1);
    case Probe::FixedMinus1:
      return o.check == C::PlusEven || (o.check == C::PlusDefiniteNoNorm && o.norm == -1);
    case Probe::AntiFixedMinus1:
      return o.check == C::MinusEven || (o.check == C::MinusDefiniteNoNorm && o.norm == -1);
    case Probe::FixedHyperbolic:
      return o.check == C::PlusDefiniteAnisotropic || o.check == C::PlusGramEven;
    case Probe::SwappedHyperbolic:
      return pair_ok(-2, 2);
    case Probe::SwappedMinus1Pair:
      return pair_ok(-2, -2);
  }
  return false;
}

Probe probe_for_kind(CertificateKind k) {
  switch (k) {
    case CertificateKind::FixedNormPlus1:
      return Probe::FixedPlus1;
    case CertificateKind::FixedNormMinus1:
      return Probe::FixedMinus1;
    case CertificateKind::AntiFixedNormMinus1:
      return Probe::AntiFixedMinus1;
    case CertificateKind::FixedHyperbolicPair:
      return Probe::FixedHyperbolic;
    case CertificateKind::SwappedOrFixedMinus1Pair:
      return Probe::SwappedMinus1Pair;
    default:
      throw InputError("not a witness kind");
  }
}

}  // namespace

ReducibilityResult check_reducible(const Isometry& g, Int height_bound) {
  validate(g);
  std::size_t rank = g.lattice.rank();
  InvolutionAnalysis an(g);
  ReducibilityResult result;
  result.certificate.height_bound = height_bound;

  std::map<Criterion, bool> obstructed;
  std::map<Probe, bool> probe_obstructed;
  std::vector<Obstruction> obstructions;
  for (Criterion c : kAllCriteria) {
    if (!applicable(c, rank)) continue;
    bool all = true;
    for (Probe p : probes_of(c)) {
      auto o = an.obstruction(p);
      probe_obstructed[p] = o.has_value();
      if (o) {
        obstructions.push_back(*o);
      } else {
        all = false;
      }
    }
    obstructed[c] = all;
  }

  bool exact_obstructed = rank <= 9;
  for (Criterion c : kExactCriteria) exact_obstructed = exact_obstructed && obstructed[c];
  if (exact_obstructed) {
    result.verdict = Verdict::Irreducible;
    auto first = std::find_if(obstructions.begin(), obstructions.end(),
                              [](const Obstruction& o) { return o.criterion == Criterion::FixedNormMinus1; });
    result.certificate.kind = first->kind;
    result.certificate.predicate = first->predicate;
    result.certificate.obstructions = std::move(obstructions);
    return result;
  }

  for (Criterion c : kAllCriteria) {
    if (!applicable(c, rank) || obstructed[c]) continue;
    for (Probe p : probes_of(c)) {
      if (probe_obstructed[p]) continue;
      if (auto w = an.find_up_to(p, height_bound)) {
        result.verdict = Verdict::Reducible;
        result.certificate.kind = w->kind;
        result.certificate.witnesses = w->vectors;
        result.certificate.predicate = w->predicate;
        result.certificate.height = w->height;
        return result;
      }
    }
  }

  result.verdict = Verdict::Unknown;
  result.certificate.obstructions = std::move(obstructions);
  for (Criterion c : kAllCriteria)
    if (applicable(c, rank) && !obstructed[c]) result.certificate.undecided.push_back(c);
  return result;
}

bool verify_certificate(const Isometry& g, const ReducibilityResult& result) {
  validate(g);
  std::size_t rank = g.lattice.rank();
  const auto& cert = result.certificate;
  switch (result.verdict) {
    case Verdict::Reducible: {
      if (!witness_valid(g, cert.kind, cert.witnesses)) return false;
      return applicable(criterion_of(probe_for_kind(cert.kind)), rank);
    }
    case Verdict::Irreducible: {
      if (rank > 9) return false;
      InvolutionAnalysis an(g);
      for (const auto& o : cert.obstructions) {
        bool ok = false;
        for (Probe p : probes_of(o.criterion)) ok = ok || admissible(p, o);
        if (!ok || !an.holds(o)) return false;
      }
      for (Criterion c : kExactCriteria) {
        for (Probe p : probes_of(c)) {
          bool covered = std::any_of(cert.obstructions.begin(), cert.obstructions.end(),
                                     [&](const Obstruction& o) { return o.criterion == c && admissible(p, o); });
          if (!covered) return false;
        }
      }
      return true;
    }
    case Verdict::Unknown:
      return cert.witnesses.empty();
  }
  return false;
}

Isometry negation_twist(const Isometry& g) { return Isometry{g.lattice, -g.matrix}; }

std::vector<InvolutionClass> involution_catalog(int n) {
  std::vector<InvolutionClass> classes = classify_involutions(n);
  Lattice l = del_pezzo(n);
  std::vector<std::pair<InvolutionInvariants, std::string>> models;
  std::vector<NamedInvolution> named;
  if (n == 5 || n == 7) named.push_back(de_jonquieres(n));
  if (n == 7) named.push_back(geiser());
  if (n == 8) named.push_back(bertini());
  for (const auto& m : named) models.emplace_back(involution_invariants(m.involution), m.label());

  for (auto& c : classes) {
    Isometry g{l, c.representative};
    c.verdict = check_reducible(g);
    if (c.verdict->verdict == Verdict::Unknown)
      throw std::logic_error("catalogue involution with undecided verdict at n = " + std::to_string(n));
    for (const auto& [inv, label] : models)
      if (inv == c.invariants) c.realized_by = label;
  }
  return classes;
}

std::vector<InvolutionClass> irreducible_involution_classes(int n) {
  std::vector<InvolutionClass> out;
  for (auto& c : involution_catalog(n))
    if (c.verdict->verdict == Verdict::Irreducible) out.push_back(std::move(c));
  return out;
}

std::string_view to_string(LeafType t) {
  switch (t) {
    case LeafType::DelPezzo:
      return "DelPezzo";
    case LeafType::Quadric:
      return "Quadric";
    case LeafType::Rank1:
      return "Rank1";
    case LeafType::Unknown:
      return "Unknown";
  }
  return "?";
}

namespace {

// Orthonormal basis of a negative definite unimodular lattice of rank <= 7, one vector per
// +-pair of norm -1 vectors, sign normalized and sorted.
std::vector<Vector> orthonormal_basis(const Sublattice& sub) {
  NormSearch search(sub);
  std::vector<Vector> basis;
  for (const auto& x : search.all_of_norm(-1)) {
    auto it = std::find_if(x.begin(), x.end(), [](Int v) { return v != 0; });
    if (*it > 0) basis.push_back(x);
  }
  if (basis.size() != sub.rank()) throw std::logic_error("complement is not diagonal unimodular");
  return basis;
}

}  // namespace

namespace {

bool first_nonzero_negative(const Vector& x) {
  auto it = std::find_if(x.begin(), x.end(), [](Int v) { return v != 0; });
  return it != x.end() && *it < 0;
}

}  // namespace

DecompositionTree decompose(const Isometry& g, Int height_bound) {
  validate(g);
  DecompositionTree tree;
  Lattice current = g.lattice;
  IntMatrix action = g.matrix;
  // rows: basis of the current lattice in ambient coordinates
  std::vector<Vector> frame = whole(g.lattice).basis;

  auto to_ambient = [&](const Vector& local) {
    Vector x(g.lattice.rank(), 0);
    for (std::size_t i = 0; i < local.size(); ++i)
      if (local[i] != 0) x = add(x, scale(local[i], frame[i]));
    return x;
  };
  // replaces the current lattice by the saturated complement of `block` (local coordinates)
  auto split = [&](const std::vector<Vector>& block, const IntMatrix& block_action, CertificateKind from,
                   const Sublattice& keep) {
    DecompositionStep step;
    for (const auto& b : block) step.block.push_back(to_ambient(b));
    step.action = block_action;
    step.from = from;
    tree.splits.push_back(std::move(step));
    Isometry local{current, action};
    IntMatrix next_action = restrict_to(local, keep);
    std::vector<Vector> next_frame;
    for (const auto& b : keep.basis) next_frame.push_back(to_ambient(b));
    current = as_lattice(keep);
    action = next_action;
    frame = std::move(next_frame);
  };

  while (true) {
    Isometry local{current, action};
    std::size_t rank = current.rank();
    std::optional<Witness> found;
    if (rank > 1) {
      InvolutionAnalysis an(local);
      const Probe order[] = {Probe::FixedMinus1, Probe::AntiFixedMinus1, Probe::SwappedMinus1Pair};
      bool live[3];
      for (int i = 0; i < 3; ++i) live[i] = !an.obstruction(order[i]).has_value();
      // lowest height first; ties broken by ambient coordinates so the choice does not
      // depend on the basis picked for the complement
      std::vector<Vector> best;
      for (Int h = 0; h <= height_bound && !found; ++h)
        for (int i = 0; i < 3; ++i) {
          if (!live[i]) continue;
          for (auto& w : an.all_at_height(order[i], h)) {
            std::vector<Vector> key;
            for (const auto& v : w.vectors) key.push_back(to_ambient(v));
            if (h == 0 && first_nonzero_negative(key[0])) {
              for (auto& k : key) k = negate(k);
              for (auto& v : w.vectors) v = negate(v);
            }
            if (!found || key < best) {
              best = std::move(key);
              found = std::move(w);
            }
          }
        }
    }
    if (found) {
      Sublattice block = span(current, found->vectors);
      Sublattice keep = orthogonal_complement(block);
      IntMatrix block_action;
      if (found->vectors.size() == 1) {
        block_action = IntMatrix{{found->kind == CertificateKind::FixedNormMinus1 ? 1 : -1}};
      } else {
        block_action = IntMatrix{{0, 1}, {1, 0}};
      }
      split(found->vectors, block_action, found->kind, keep);
      continue;
    }

    ReducibilityResult res = check_reducible(local, height_bound);
    if (res.verdict == Verdict::Reducible &&
        (res.certificate.kind == CertificateKind::FixedNormPlus1 || res.certificate.kind == CertificateKind::FixedHyperbolicPair)) {
      // split off the definite complement of the positive piece
      Sublattice piece = span(current, res.certificate.witnesses);
      Sublattice comp = orthogonal_complement(piece);
      std::vector<Vector> ob = orthonormal_basis(comp);
      Sublattice ob_sub{current, ob};
      IntMatrix block_action = restrict_to(local, ob_sub);
      split(ob, block_action, res.certificate.kind, piece);
      continue;
    }

    DecompositionLeaf leaf;
    leaf.basis = frame;
    leaf.gram = current.gram;
    leaf.action = action;
    leaf.check = res;
    if (res.verdict != Verdict::Irreducible) {
      leaf.type = LeafType::Unknown;
    } else if (rank == 1) {
      leaf.type = LeafType::Rank1;
    } else if (rank == 2 && is_even(current.gram)) {
      leaf.type = LeafType::Quadric;
    } else {
      leaf.type = LeafType::DelPezzo;
    }
    leaf.index = static_cast<int>(rank) - 1;
    tree.leaf = std::move(leaf);
    return tree;
  }
}

}  // namespace dpz
