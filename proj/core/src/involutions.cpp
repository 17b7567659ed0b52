#include "dpz/involutions.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "dpz/errors.hpp"
#include "dpz/normal_form.hpp"
#include "dpz/reflection_groups.hpp"
#include "dpz/witness_search.hpp"

namespace dpz {

namespace {

using RootMask = std::bitset<128>;

Vector sign_normalized(const Vector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; });
  return (it != v.end() && *it < 0) ? negate(v) : v;
}

std::vector<Vector> normalized_set(std::vector<Vector> set) {
  for (auto& v : set) v = sign_normalized(v);
  std::sort(set.begin(), set.end());
  return set;
}

// Bron-Kerbosch with pivoting over the orthogonality graph.
void bron_kerbosch(const std::vector<RootMask>& adj, RootMask r, RootMask p, RootMask x, std::vector<RootMask>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  RootMask px = p | x;
  std::size_t pivot = 0, best = 0;
  for (std::size_t u = 0; u < adj.size(); ++u)
    if (px[u] && (p & adj[u]).count() >= best) {
      best = (p & adj[u]).count();
      pivot = u;
    }
  RootMask cand = p & ~adj[pivot];
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!cand[v]) continue;
    RootMask rv = r;
    rv.set(v);
    bron_kerbosch(adj, rv, p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

IntMatrix product_of_reflections(const Lattice& l, const std::vector<Vector>& roots) {
  IntMatrix g = IntMatrix::identity(l.rank());
  for (const auto& r : roots) g = g * reflection(l, r);
  return g;
}

std::vector<InvolutionClass> classify_small(int n) {
  Lattice l = del_pezzo(n);
  auto gens = weyl_generators(n);
  auto group = enumerate_group(gens, l.rank());
  IntMatrix id = IntMatrix::identity(l.rank());
  std::unordered_set<IntMatrix, IntMatrixHash> assigned;
  std::vector<InvolutionClass> classes;
  for (const auto& g : group) {
    if (g == id || !is_involution(g) || assigned.count(g)) continue;
    auto orbit = conjugacy_orbit(g, n);
    assigned.insert(orbit.begin(), orbit.end());
    InvolutionClass c;
    c.n = n;
    c.representative = g;
    c.class_size = orbit.size();
    c.conjugacy_verified = true;
    classes.push_back(std::move(c));
  }
  return classes;
}

}  // namespace

ZGInvariant zg_invariant(const Isometry& g) {
  auto [plus, minus] = fixed_and_antifixed(g);
  int r = static_cast<int>(rank_mod2(g.matrix + IntMatrix::identity(g.lattice.rank())));
  return ZGInvariant{static_cast<int>(plus.rank()) - r, static_cast<int>(minus.rank()) - r, r};
}

int carter_exponent(const Isometry& g) {
  IntMatrix m = g.matrix + IntMatrix::identity(g.lattice.rank());
  return static_cast<int>(g.lattice.rank() - rank_over_q(m));
}

InvolutionInvariants involution_invariants(const Isometry& g, Int height_bound) {
  InvolutionAnalysis an(g);
  InvolutionInvariants inv;
  inv.m = static_cast<int>(an.minus().rank());
  inv.zg = zg_invariant(g);
  IntMatrix gp = an.plus().gram(), gm = an.minus().gram();
  inv.plus_even = is_even(gp);
  inv.minus_even = is_even(gm);
  inv.det_plus = std::abs(determinant(gp));
  inv.det_minus = std::abs(determinant(gm));
  inv.fixes_norm_plus1 = an.find_up_to(Probe::FixedPlus1, height_bound).has_value();
  inv.fixes_norm_minus1 = an.find_up_to(Probe::FixedMinus1, height_bound).has_value();
  inv.fixes_hyperbolic_pair = an.find_up_to(Probe::FixedHyperbolic, height_bound).has_value();
  inv.swaps_minus1_pair = an.find_up_to(Probe::SwappedMinus1Pair, height_bound).has_value();
  return inv;
}

std::vector<std::vector<Vector>> maximal_orthogonal_root_sets(int n) {
  if (n < 3 || n > 8) throw InputError("maximal orthogonal root sets need 3 <= n <= 8");
  Lattice l = del_pezzo(n);
  std::vector<Vector> pos = positive_roots(n);
  std::vector<RootMask> adj(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = 0; j < pos.size(); ++j)
      if (i != j && inner(l, pos[i], pos[j]) == 0) adj[i].set(j);
  RootMask all;
  for (std::size_t i = 0; i < pos.size(); ++i) all.set(i);
  std::vector<RootMask> cliques;
  bron_kerbosch(adj, RootMask{}, all, RootMask{}, cliques);

  std::vector<std::vector<Vector>> sets;
  for (const auto& c : cliques) {
    std::vector<Vector> s;
    for (std::size_t i = 0; i < pos.size(); ++i)
      if (c[i]) s.push_back(pos[i]);
    sets.push_back(s);  // already sorted: pos is sorted
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });

  auto gens = weyl_generators(n);
  std::set<std::vector<Vector>> seen;
  std::vector<std::vector<Vector>> reps;
  for (const auto& s : sets) {
    if (seen.count(s)) continue;
    reps.push_back(s);
    std::vector<std::vector<Vector>> queue{s};
    seen.insert(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        std::vector<Vector> image;
        for (const auto& v : queue[head]) image.push_back(g * v);
        image = normalized_set(std::move(image));
        if (seen.insert(image).second) queue.push_back(std::move(image));
      }
    }
  }
  return reps;
}

std::vector<IntMatrix> conjugacy_orbit(const IntMatrix& g, int n, std::size_t limit) {
  auto gens = weyl_generators(n);
  std::vector<IntMatrix> orbit{g};
  std::unordered_set<IntMatrix, IntMatrixHash> seen{g};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : gens) {
      IntMatrix h = s * orbit[head] * s;
      if (seen.insert(h).second) {
        orbit.push_back(std::move(h));
        if (orbit.size() > limit) throw Unsupported("conjugacy orbit exceeds enumeration limit");
      }
    }
  }
  return orbit;
}

bool are_conjugate(const IntMatrix& g, const IntMatrix& h, int n) {
  if (n > 7) throw Unsupported("conjugacy search is only supported for n <= 7");
  if (n < 0) throw InputError("n must be non-negative");
  Lattice l = del_pezzo(n);
  if (g.rows() != l.rank() || h.rows() != l.rank()) throw InputError("matrix size does not match n");
  if (g == h) return true;
  if (g.trace() != h.trace()) return false;
  auto gens = weyl_generators(n);
  std::vector<IntMatrix> orbit{g};
  std::unordered_set<IntMatrix, IntMatrixHash> seen{g};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : gens) {
      IntMatrix x = s * orbit[head] * s;
      if (x == h) return true;
      if (seen.insert(x).second) orbit.push_back(std::move(x));
    }
  }
  return false;
}

std::vector<InvolutionClass> classify_involutions(int n) {
  if (n < 0 || n > 8) throw InputError("n must be between 0 and 8, got " + std::to_string(n));
  Lattice l = del_pezzo(n);
  std::vector<InvolutionClass> classes;

  if (n < 3) {
    classes = classify_small(n);
    for (auto& c : classes) {
      Isometry g{l, c.representative};
      c.invariants = involution_invariants(g);
    }
  } else {
    struct Candidate {
      IntMatrix matrix;
      std::vector<Vector> roots;
    };
    std::vector<Candidate> candidates;
    std::unordered_set<IntMatrix, IntMatrixHash> distinct;
    for (const auto& set : maximal_orthogonal_root_sets(n)) {
      std::size_t k = set.size();
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Vector> sub;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) sub.push_back(set[i]);
        IntMatrix g = product_of_reflections(l, sub);
        if (distinct.insert(g).second) candidates.push_back({g, sub});
      }
    }
    // shortest root set first, then matrix order: the first member of a group is its representative
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      return a.roots.size() != b.roots.size() ? a.roots.size() < b.roots.size() : a.matrix < b.matrix;
    });

    if (n <= 7) {
      // exact partition by conjugation orbits; invariants are attached afterwards
      std::unordered_set<IntMatrix, IntMatrixHash> assigned;
      for (const auto& cand : candidates) {
        if (assigned.count(cand.matrix)) continue;
        auto orbit = conjugacy_orbit(cand.matrix, n);
        assigned.insert(orbit.begin(), orbit.end());
        InvolutionClass c;
        c.n = n;
        c.representative = cand.matrix;
        c.root_set = cand.roots;
        c.invariants = involution_invariants(Isometry{l, cand.matrix});
        c.class_size = orbit.size();
        c.conjugacy_verified = true;
        classes.push_back(std::move(c));
      }
    } else {
      // W_8 orbits are too large to enumerate per candidate; classes are separated by the invariant tuple
      std::map<InvolutionInvariants, std::size_t> groups;
      for (const auto& cand : candidates) {
        auto inv = involution_invariants(Isometry{l, cand.matrix});
        if (groups.count(inv)) continue;
        groups.emplace(inv, classes.size());
        InvolutionClass c;
        c.n = n;
        c.representative = cand.matrix;
        c.root_set = cand.roots;
        c.invariants = inv;
        classes.push_back(std::move(c));
      }
    }
  }

  for (auto& c : classes) {
    Isometry g{l, c.representative};
    c.carter_exponent = carter_exponent(g);
    c.zg = zg_invariant(g);
  }
  std::stable_sort(classes.begin(), classes.end(), [](const InvolutionClass& a, const InvolutionClass& b) {
    return std::tie(a.carter_exponent, a.zg, a.invariants) < std::tie(b.carter_exponent, b.zg, b.invariants);
  });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].index = i;
  return classes;
}

}  // namespace dpz
