#include "dpz/witness_search.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dpz/errors.hpp"
#include "dpz/normal_form.hpp"
#include "dpz/short_vectors.hpp"

namespace dpz {

namespace {

enum class SideId { Plus, Minus };

struct Side {
  Sublattice sub;
  NormSearch search;
  Mod2Span span;
  std::map<Int, std::vector<Vector>> all_cache;
  std::map<std::pair<Int, Int>, std::vector<Vector>> layer_cache;

  explicit Side(const Sublattice& s) : sub(s), search(s), span(s.basis) {}
};

// sign normalization: positive height, or first nonzero coordinate positive at height 0
Vector normalized(const Vector& x, Int signed_height) {
  if (signed_height < 0) return negate(x);
  if (signed_height > 0) return x;
  auto it = std::find_if(x.begin(), x.end(), [](Int v) { return v != 0; });
  return (it != x.end() && *it < 0) ? negate(x) : x;
}

Vector half_sum(const Vector& a, const Vector& b) {
  Vector s = add(a, b);
  for (auto& x : s) x /= 2;
  return s;
}

std::string pair_predicate(Int na, Int nb) {
  return "no vector of norm " + std::to_string(na) + " in L- is congruent mod 2L to a vector of L+ of norm " +
         std::to_string(nb);
}

}  // namespace

Criterion criterion_of(Probe p) {
  switch (p) {
    case Probe::FixedPlus1:
      return Criterion::FixedNormPlus1;
    case Probe::FixedHyperbolic:
    case Probe::SwappedHyperbolic:
      return Criterion::FixedHyperbolicPair;
    case Probe::FixedMinus1:
      return Criterion::FixedNormMinus1;
    case Probe::AntiFixedMinus1:
      return Criterion::AntiFixedNormMinus1;
    case Probe::SwappedMinus1Pair:
      return Criterion::SwappedMinus1Pair;
  }
  return Criterion::FixedNormPlus1;
}

std::vector<Probe> probes_of(Criterion c) {
  switch (c) {
    case Criterion::FixedNormPlus1:
      return {Probe::FixedPlus1};
    case Criterion::FixedHyperbolicPair:
      return {Probe::FixedHyperbolic, Probe::SwappedHyperbolic};
    case Criterion::FixedNormMinus1:
      return {Probe::FixedMinus1};
    case Criterion::AntiFixedNormMinus1:
      return {Probe::AntiFixedMinus1};
    case Criterion::SwappedMinus1Pair:
      return {Probe::SwappedMinus1Pair};
  }
  return {};
}

struct InvolutionAnalysis::Impl {
  Isometry g;
  Side plus;
  Side minus;

  Impl(const Isometry& iso, std::pair<Sublattice, Sublattice> parts)
      : g(iso), plus(parts.first), minus(parts.second) {}

  Side& side(SideId s) { return s == SideId::Plus ? plus : minus; }

  Int signed_height(const Vector& x) const {
    const Vector& p = g.lattice.polarization;
    return p.empty() ? 0 : inner(g.lattice, x, p);
  }
  Int height(const Vector& x) const {
    Int h = signed_height(x);
    return h < 0 ? -h : h;
  }

  const std::vector<Vector>& all(SideId id, Int n) {
    Side& s = side(id);
    auto it = s.all_cache.find(n);
    if (it != s.all_cache.end()) return it->second;
    return s.all_cache.emplace(n, s.search.all_of_norm(n)).first->second;
  }

  const std::vector<Vector>& at_layer(SideId id, Int n, Int layer) {
    Side& s = side(id);
    auto key = std::make_pair(n, layer);
    auto it = s.layer_cache.find(key);
    if (it != s.layer_cache.end()) return it->second;
    std::vector<Vector> out;
    if (s.search.definite()) {
      for (const auto& x : all(id, n))
        if (signed_height(x) == layer) out.push_back(x);
    } else {
      out = s.search.layer(n, layer);
    }
    return s.layer_cache.emplace(key, std::move(out)).first->second;
  }

  // vectors of norm n with |height| = h
  std::vector<Vector> at_height(SideId id, Int n, Int h) {
    std::vector<Vector> out = at_layer(id, n, h);
    if (h != 0) {
      const auto& neg = at_layer(id, n, -h);
      out.insert(out.end(), neg.begin(), neg.end());
    }
    return out;
  }

  // vectors of norm n with |height| <= h
  std::vector<Vector> up_to_height(SideId id, Int n, Int h) {
    std::vector<Vector> out;
    for (Int j = 0; j <= h; ++j) {
      auto v = at_height(id, n, j);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }

  bool definite(SideId id) { return side(id).search.definite(); }

  bool pair_residues_disjoint(SideId def, Int n) {
    const Side& other = def == SideId::Plus ? minus : plus;
    for (const auto& x : all(def, n))
      if (other.span.contains(x)) return false;
    return true;
  }

  bool pair_complete_empty(Int na, Int nb) {
    std::unordered_map<std::uint64_t, int> residues;
    for (const auto& a : all(SideId::Minus, na)) residues[mod2_bits(a)]++;
    for (const auto& b : all(SideId::Plus, nb))
      if (residues.count(mod2_bits(b))) return false;
    return true;
  }

  bool holds(ObstructionCheck c, Int n, Int other) {
    switch (c) {
      case ObstructionCheck::PlusEven:
        return is_even(plus.sub.gram());
      case ObstructionCheck::MinusEven:
        return is_even(minus.sub.gram());
      case ObstructionCheck::PlusGramEven:
        return is_doubly_even_gram(plus.sub.gram());
      case ObstructionCheck::PlusDefiniteNoNorm:
        return definite(SideId::Plus) && all(SideId::Plus, n).empty();
      case ObstructionCheck::MinusDefiniteNoNorm:
        return definite(SideId::Minus) && all(SideId::Minus, n).empty();
      case ObstructionCheck::PlusDefiniteAnisotropic:
        return definite(SideId::Plus);
      case ObstructionCheck::PairMinusDefinite:
        return definite(SideId::Minus) && pair_residues_disjoint(SideId::Minus, n);
      case ObstructionCheck::PairPlusDefinite:
        return definite(SideId::Plus) && pair_residues_disjoint(SideId::Plus, other);
      case ObstructionCheck::PairComplete:
        return definite(SideId::Plus) && definite(SideId::Minus) && pair_complete_empty(n, other);
    }
    return false;
  }

  // Swapped pairs c1 = (a+b)/2, c2 = (b-a)/2 with a in L- of norm na and b in L+ of norm nb,
  // whose height is exactly h.
  std::vector<std::vector<Vector>> pairs_at_height(Int na, Int nb, Int h) {
    std::vector<Vector> as, bs;
    bool dm = definite(SideId::Minus), dp = definite(SideId::Plus);
    if (!dm && !dp) throw Unsupported("both eigenlattices are indefinite");
    // |Q(a,P)|, |Q(b,P)| <= |Q(c1,P)| + |Q(c2,P)| <= 2h
    as = dm ? all(SideId::Minus, na) : up_to_height(SideId::Minus, na, 2 * h);
    bs = dp ? all(SideId::Plus, nb) : up_to_height(SideId::Plus, nb, 2 * h);
    std::unordered_map<std::uint64_t, std::vector<const Vector*>> by_residue;
    for (const auto& a : as) by_residue[mod2_bits(a)].push_back(&a);
    std::vector<std::vector<Vector>> out;
    for (const auto& b : bs) {
      auto it = by_residue.find(mod2_bits(b));
      if (it == by_residue.end()) continue;
      for (const Vector* a : it->second) {
        Vector c1 = half_sum(*a, b);
        Vector c2 = half_sum(negate(*a), b);
        if (std::max(height(c1), height(c2)) != h) continue;
        out.push_back({c1, c2});
      }
    }
    return out;
  }
};

InvolutionAnalysis::InvolutionAnalysis(const Isometry& g) {
  if (!is_involution(g.matrix)) throw InputError("matrix is not an involution");
  impl_ = std::make_unique<Impl>(g, fixed_and_antifixed(g));
}

InvolutionAnalysis::~InvolutionAnalysis() = default;
InvolutionAnalysis::InvolutionAnalysis(InvolutionAnalysis&&) noexcept = default;
InvolutionAnalysis& InvolutionAnalysis::operator=(InvolutionAnalysis&&) noexcept = default;

const Isometry& InvolutionAnalysis::involution() const { return impl_->g; }
const Sublattice& InvolutionAnalysis::plus() const { return impl_->plus.sub; }
const Sublattice& InvolutionAnalysis::minus() const { return impl_->minus.sub; }
Int InvolutionAnalysis::height(const Vector& x) const { return impl_->height(x); }

bool InvolutionAnalysis::holds(const Obstruction& o) { return impl_->holds(o.check, o.norm, o.other_norm); }

std::optional<Obstruction> InvolutionAnalysis::obstruction(Probe p) {
  Criterion crit = criterion_of(p);
  auto make = [&](CertificateKind kind, ObstructionCheck check, Int n, Int other,
                  std::string predicate) -> std::optional<Obstruction> {
    Obstruction o{crit, kind, check, n, other, std::move(predicate)};
    if (impl_->holds(check, n, other)) return o;
    return std::nullopt;
  };
  auto single = [&](SideId side, Int n) -> std::optional<Obstruction> {
    bool odd = n % 2 != 0;
    if (side == SideId::Plus) {
      if (odd)
        if (auto o = make(CertificateKind::EvenFixedLatticeObstruction, ObstructionCheck::PlusEven, n, 0,
                          "L+ is even, so it has no vector of odd norm"))
          return o;
      return make(CertificateKind::DefiniteSearchObstruction, ObstructionCheck::PlusDefiniteNoNorm, n, 0,
                  "L+ is definite and has no vector of norm " + std::to_string(n));
    }
    if (odd)
      if (auto o = make(CertificateKind::AntiFixedObstruction, ObstructionCheck::MinusEven, n, 0,
                        "L- is even, so it has no vector of odd norm"))
        return o;
    return make(CertificateKind::DefiniteSearchObstruction, ObstructionCheck::MinusDefiniteNoNorm, n, 0,
                "L- is definite and has no vector of norm " + std::to_string(n));
  };
  auto pair = [&](Int na, Int nb) -> std::optional<Obstruction> {
    if (auto o = make(CertificateKind::DefiniteSearchObstruction, ObstructionCheck::MinusDefiniteNoNorm, na, 0,
                      "L- is definite and has no vector of norm " + std::to_string(na)))
      return o;
    if (auto o = make(CertificateKind::DefiniteSearchObstruction, ObstructionCheck::PlusDefiniteNoNorm, nb, 0,
                      "L+ is definite and has no vector of norm " + std::to_string(nb)))
      return o;
    if (auto o = make(CertificateKind::Mod2Obstruction, ObstructionCheck::PairMinusDefinite, na, nb,
                      "no vector of norm " + std::to_string(na) + " in L- is congruent mod 2L to a vector of L+"))
      return o;
    if (auto o = make(CertificateKind::Mod2Obstruction, ObstructionCheck::PairPlusDefinite, na, nb,
                      "no vector of norm " + std::to_string(nb) + " in L+ is congruent mod 2L to a vector of L-"))
      return o;
    return make(CertificateKind::DefiniteSearchObstruction, ObstructionCheck::PairComplete, na, nb,
                "L+ and L- are definite and " + pair_predicate(na, nb));
  };

  switch (p) {
    case Probe::FixedPlus1:
      return single(SideId::Plus, 1);
    case Probe::FixedMinus1:
      return single(SideId::Plus, -1);
    case Probe::AntiFixedMinus1:
      return single(SideId::Minus, -1);
    case Probe::FixedHyperbolic:
      if (auto o = make(CertificateKind::DefiniteSearchObstruction, ObstructionCheck::PlusDefiniteAnisotropic, 0, 0,
                        "L+ is definite, so it has no nonzero isotropic vector"))
        return o;
      return make(CertificateKind::Mod2Obstruction, ObstructionCheck::PlusGramEven, 0, 0,
                  "every inner product in L+ is even, so Q(c1,c2) = 1 is impossible");
    case Probe::SwappedHyperbolic:
      return pair(-2, 2);
    case Probe::SwappedMinus1Pair:
      return pair(-2, -2);
  }
  return std::nullopt;
}

std::vector<Witness> InvolutionAnalysis::all_at_height(Probe p, Int h) {
  Impl& s = *impl_;
  auto singles = [&](SideId side, Int n, CertificateKind kind, const char* pred) {
    std::vector<Vector> cands;
    for (const auto& x : s.at_height(side, n, h)) cands.push_back(normalized(x, s.signed_height(x)));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Witness> out;
    for (auto& c : cands) out.push_back(Witness{p, kind, {std::move(c)}, pred, h});
    return out;
  };
  auto pairs = [&](std::vector<std::vector<Vector>> cands, CertificateKind kind, const char* pred) {
    for (auto& c : cands) {
      Int hs = s.signed_height(c[0]) + s.signed_height(c[1]);
      if (hs < 0 || (hs == 0 && normalized(c[0], 0) != c[0])) {
        c[0] = negate(c[0]);
        c[1] = negate(c[1]);
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Witness> out;
    for (auto& c : cands) out.push_back(Witness{p, kind, std::move(c), pred, h});
    return out;
  };

  switch (p) {
    case Probe::FixedPlus1:
      return singles(SideId::Plus, 1, CertificateKind::FixedNormPlus1, "g(c1) = c1 and Q(c1,c1) = 1");
    case Probe::FixedMinus1:
      return singles(SideId::Plus, -1, CertificateKind::FixedNormMinus1, "g(c1) = c1 and Q(c1,c1) = -1");
    case Probe::AntiFixedMinus1:
      return singles(SideId::Minus, -1, CertificateKind::AntiFixedNormMinus1, "g(c1) = -c1 and Q(c1,c1) = -1");
    case Probe::FixedHyperbolic: {
      if (h <= 0 || s.definite(SideId::Plus)) return {};
      // isotropic vectors in a Lorentzian lattice with Q(c1,c2) = 1 lie in the same half cone
      std::vector<Vector> top = s.at_layer(SideId::Plus, 0, h);
      std::vector<Vector> below;
      for (Int j = 1; j <= h; ++j) {
        const auto& l = s.at_layer(SideId::Plus, 0, j);
        below.insert(below.end(), l.begin(), l.end());
      }
      std::vector<std::vector<Vector>> cands;
      for (const auto& c1 : top)
        for (const auto& c2 : below)
          if (inner(s.g.lattice, c1, c2) == 1) cands.push_back(c1 < c2 ? std::vector{c1, c2} : std::vector{c2, c1});
      return pairs(std::move(cands), CertificateKind::FixedHyperbolicPair,
                       "g(c1) = c1, g(c2) = c2, Q(c1,c1) = Q(c2,c2) = 0 and Q(c1,c2) = 1");
    }
    case Probe::SwappedHyperbolic:
      return pairs(s.pairs_at_height(-2, 2, h), CertificateKind::FixedHyperbolicPair,
                       "g(c1) = c2, Q(c1,c1) = Q(c2,c2) = 0 and Q(c1,c2) = 1");
    case Probe::SwappedMinus1Pair:
      return pairs(s.pairs_at_height(-2, -2, h), CertificateKind::SwappedOrFixedMinus1Pair,
                       "g(c1) = c2, Q(c1,c1) = Q(c2,c2) = -1 and Q(c1,c2) = 0");
  }
  return {};
}

std::optional<Witness> InvolutionAnalysis::find_at_height(Probe p, Int h) {
  auto all = all_at_height(p, h);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::optional<Witness> InvolutionAnalysis::find_up_to(Probe p, Int cap) {
  if (obstruction(p)) return std::nullopt;
  for (Int h = 0; h <= cap; ++h)
    if (auto w = find_at_height(p, h)) return w;
  return std::nullopt;
}

bool witness_valid(const Isometry& g, CertificateKind kind, const std::vector<Vector>& v) {
  const Lattice& l = g.lattice;
  for (const auto& x : v)
    if (x.size() != l.rank()) return false;
  auto q = [&](std::size_t i, std::size_t j) { return inner(l, v[i], v[j]); };
  switch (kind) {
    case CertificateKind::FixedNormPlus1:
      return v.size() == 1 && g.apply(v[0]) == v[0] && q(0, 0) == 1;
    case CertificateKind::FixedNormMinus1:
      return v.size() == 1 && g.apply(v[0]) == v[0] && q(0, 0) == -1;
    case CertificateKind::AntiFixedNormMinus1:
      return v.size() == 1 && g.apply(v[0]) == negate(v[0]) && q(0, 0) == -1;
    case CertificateKind::FixedHyperbolicPair: {
      if (v.size() != 2 || q(0, 0) != 0 || q(1, 1) != 0 || q(0, 1) != 1) return false;
      bool fixed = g.apply(v[0]) == v[0] && g.apply(v[1]) == v[1];
      bool swapped = g.apply(v[0]) == v[1];
      return fixed || swapped;
    }
    case CertificateKind::SwappedOrFixedMinus1Pair: {
      if (v.size() != 2 || q(0, 0) != -1 || q(1, 1) != -1 || q(0, 1) != 0) return false;
      bool fixed = g.apply(v[0]) == v[0] && g.apply(v[1]) == v[1];
      bool swapped = g.apply(v[0]) == v[1];
      return fixed || swapped;
    }
    default:
      return false;
  }
}

}  // namespace dpz
