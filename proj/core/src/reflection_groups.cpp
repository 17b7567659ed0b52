#include "dpz/reflection_groups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dpz/errors.hpp"
#include "dpz/short_vectors.hpp"

namespace dpz {

namespace {

void check_index(int n, int lo) {
  if (n < lo || n > 8) throw InputError("n must be between " + std::to_string(lo) + " and 8, got " + std::to_string(n));
}

Vector he(int n, Int h, std::initializer_list<std::pair<int, Int>> es) {
  Vector v(static_cast<std::size_t>(n) + 1, 0);
  v[0] = h;
  for (auto [i, c] : es) v.at(static_cast<std::size_t>(i)) = c;
  return v;
}

}  // namespace

IntMatrix reflection(const Lattice& lattice, const Vector& v) {
  Int q = norm(lattice, v);
  if (q != 1 && q != -1 && q != 2 && q != -2)
    throw InputError("reflection vector must have norm +-1 or +-2, got " + std::to_string(q));
  std::size_t r = lattice.rank();
  Vector gv = lattice.gram * v;  // row functional w -> Q(v, w)
  IntMatrix m = IntMatrix::identity(r);
  Int f = 2 / q;  // exact for |q| in {1, 2}
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = checked_sub(m(i, j), checked_mul(f, checked_mul(v[i], gv[j])));
  return m;
}

std::vector<Vector> wall_generators(int n) {
  check_index(n, 2);
  std::vector<Vector> out;
  if (n == 2) {
    out.push_back(he(n, 1, {{1, 1}, {2, 1}}));
    out.push_back(he(n, 0, {{1, 1}, {2, -1}}));
    out.push_back(he(n, 0, {{2, 1}}));
    return out;
  }
  out.push_back(he(n, 1, {{1, 1}, {2, 1}, {3, 1}}));
  for (int i = 1; i < n; ++i) out.push_back(he(n, 0, {{i, 1}, {i + 1, -1}}));
  out.push_back(he(n, 0, {{n, 1}}));
  return out;
}

std::vector<Vector> weyl_generator_vectors(int n) {
  check_index(n, 0);
  std::vector<Vector> out;
  if (n < 2) return out;
  if (n == 2) {
    out.push_back(he(n, 1, {{1, -1}, {2, -1}}));
    out.push_back(he(n, 0, {{1, 1}, {2, -1}}));
    return out;
  }
  out.push_back(he(n, 1, {{1, -1}, {2, -1}, {3, -1}}));
  for (int i = 1; i < n; ++i) out.push_back(he(n, 0, {{i, 1}, {i + 1, -1}}));
  return out;
}

std::vector<IntMatrix> weyl_generators(int n) {
  Lattice l = del_pezzo(n);
  std::vector<IntMatrix> out;
  for (const auto& v : weyl_generator_vectors(n)) out.push_back(reflection(l, v));
  return out;
}

std::vector<Vector> roots(int n) {
  check_index(n, 0);
  Lattice l = del_pezzo(n);
  Sublattice kperp = orthogonal_complement(span(l, {canonical_class(l)}));
  NormSearch search(kperp);
  return search.all_of_norm(-2);
}

std::vector<Vector> positive_roots(int n) {
  std::vector<Vector> out;
  for (const auto& r : roots(n)) {
    auto it = std::find_if(r.begin(), r.end(), [](Int x) { return x != 0; });
    if (*it > 0) out.push_back(r);
  }
  return out;
}

bool is_root(int n, const Vector& v) {
  Lattice l = del_pezzo(n);
  return v.size() == l.rank() && norm(l, v) == -2 && inner(l, v, canonical_class(l)) == 0;
}

std::vector<Vector> reflection_orbit(const Lattice& lattice, const Vector& v, const std::vector<Vector>& mirrors) {
  std::vector<Vector> orbit{v};
  std::unordered_set<Vector, VectorHash> seen{v};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& a : mirrors) {
      Vector x = orbit[head];
      Int q = inner(lattice, x, a);
      if (q == 0) continue;
      Vector y = add(x, scale(q, a));  // Ref_a for Q(a, a) = -2
      if (seen.insert(y).second) orbit.push_back(std::move(y));
    }
  }
  return orbit;
}

Int weyl_order(int n) {
  check_index(n, 0);
  if (n < 3) {
    return static_cast<Int>(enumerate_group(weyl_generators(n), static_cast<std::size_t>(n) + 1).size());
  }
  Lattice l = del_pezzo(n);
  std::vector<Vector> current = roots(n);
  Int order = 1;
  // |W(R)| = |W(R).r| * |W(R intersect r^perp)| for r in R
  while (!current.empty()) {
    const Vector r = current.front();
    order = checked_mul(order, static_cast<Int>(reflection_orbit(l, r, current).size()));
    std::vector<Vector> next;
    for (const auto& a : current)
      if (inner(l, a, r) == 0) next.push_back(a);
    current = std::move(next);
  }
  return order;
}

std::vector<IntMatrix> enumerate_group(const std::vector<IntMatrix>& generators, std::size_t dim, std::size_t limit) {
  std::vector<IntMatrix> elements{IntMatrix::identity(dim)};
  std::unordered_set<IntMatrix, IntMatrixHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      IntMatrix next = elements[head] * s;
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limit) throw Unsupported("group exceeds enumeration limit");
      }
    }
  }
  return elements;
}

IntMatrix random_weyl_element(int n, std::mt19937_64& rng, int length) {
  auto gens = weyl_generators(n);
  IntMatrix w = IntMatrix::identity(static_cast<std::size_t>(n) + 1);
  if (gens.empty()) return w;
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int i = 0; i < length; ++i) w = w * gens[pick(rng)];
  return w;
}

}  // namespace dpz
