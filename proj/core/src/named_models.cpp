#include "dpz/named_models.hpp"

#include "dpz/errors.hpp"
#include "dpz/normal_form.hpp"
#include "dpz/reflection_groups.hpp"

namespace dpz {

namespace {

// a H - sum b_i E_i style constructor: coefficients in the H, E basis
Vector he(int n, std::initializer_list<Int> coeffs) {
  Vector v(static_cast<std::size_t>(n) + 1, 0);
  std::size_t i = 0;
  for (Int c : coeffs) v.at(i++) = c;
  return v;
}

// H - Ei - Ej - Ek
Vector alpha(int n, int i, int j, int k) {
  Vector v(static_cast<std::size_t>(n) + 1, 0);
  v[0] = 1;
  v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(k)] = -1;
  return v;
}

Vector e_diff(int n, int i, int j) {
  Vector v(static_cast<std::size_t>(n) + 1, 0);
  v[static_cast<std::size_t>(i)] = 1;
  v[static_cast<std::size_t>(j)] = -1;
  return v;
}

// g(x) = 2 (Q(x,K) / Q(K,K)) K - x
IntMatrix negation_on_kperp(int n) {
  Lattice l = del_pezzo(n);
  Vector k = canonical_class(l);
  Int kk = norm(l, k);
  IntMatrix g(l.rank(), l.rank());
  for (std::size_t j = 0; j < l.rank(); ++j) {
    Int num = 2 * inner(l, basis_vector(l, j), k);
    if (num % kk != 0) throw InputError("projection onto K is not integral");
    Int f = num / kk;
    for (std::size_t i = 0; i < l.rank(); ++i) g(i, j) = f * k[i] - (i == j ? 1 : 0);
  }
  return g;
}

}  // namespace

std::string NamedInvolution::label() const {
  switch (name) {
    case ModelName::DeJonquieres:
      return "DeJonquieres(" + std::to_string(degree) + ")";
    case ModelName::Geiser:
      return "Geiser";
    case ModelName::Bertini:
      return "Bertini";
  }
  return "?";
}

NamedInvolution de_jonquieres(int n) {
  if (n < 5 || n > 7 || n % 2 == 0) throw InputError("de Jonquieres model needs odd n with 5 <= n <= 7");
  Lattice l = del_pezzo(n);
  IntMatrix g = IntMatrix::identity(l.rank());
  for (int k = 1; 2 * k + 1 <= n; ++k)
    g = g * reflection(l, alpha(n, 1, 2 * k, 2 * k + 1)) * reflection(l, e_diff(n, 2 * k, 2 * k + 1));
  return NamedInvolution{ModelName::DeJonquieres, n, (n + 1) / 2, make_isometry(l, g), BasisKind::HE};
}

Isometry de_jonquieres_model(const Lattice& lattice, const Vector& C, const std::vector<Vector>& v) {
  std::size_t r = lattice.rank();
  if (C.size() != r) throw InputError("C has wrong dimension");
  if (v.size() + 2 != r) throw InputError("need rank - 2 vectors v_k");
  if (norm(lattice, C) != 0) throw InputError("Q(C, C) must be 0");
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].size() != r) throw InputError("v_k has wrong dimension");
    if (inner(lattice, C, v[k]) != 0) throw InputError("Q(C, v_k) must be 0");
    for (std::size_t l = 0; l < v.size(); ++l)
      if (inner(lattice, v[k], v[l]) != (k == l ? -1 : 0)) throw InputError("Q(v_k, v_l) must be -delta");
  }
  if (v.size() % 2 != 0) throw InputError("number of v_k must be even");

  // completion c with Q(C, c) = 1; then normalize Q(c, v_k) = 0 and Q(c, c) in {0, -1}
  IntMatrix row(1, r);
  Vector gc = lattice.gram * C;
  for (std::size_t i = 0; i < r; ++i) row(0, i) = gc[i];
  auto sol = solve_integer(row, Vector{1});
  if (!sol) throw InputError("C is not primitive in a unimodular lattice; no completion vector");
  Vector c = *sol;
  for (const auto& vk : v) c = add(c, scale(inner(lattice, c, vk), vk));
  Int q = norm(lattice, c);
  Int a = q >= 0 ? -(q / 2) : (-q) / 2;  // floor-free shift towards {0, -1}
  c = add(c, scale(a, C));
  if (norm(lattice, c) > 0) c = add(c, scale(-1, C));

  std::vector<Vector> basis{C};
  basis.insert(basis.end(), v.begin(), v.end());
  basis.push_back(c);
  IntMatrix t = IntMatrix::from_columns(basis);  // basis coordinates -> ambient coordinates
  if (std::abs(determinant(t)) != 1) throw InputError("C, v_k and c do not form a basis");

  // in the basis (C, v_1..v_k, c): beta_k = 2 Q(c, v_k) - 1 = -1, alpha = -sum beta / 2
  std::size_t k = v.size();
  IntMatrix local = IntMatrix::identity(r);
  for (std::size_t i = 1; i <= k; ++i) {
    local(0, i) = 1;
    local(i, i) = -1;
    local(i, r - 1) = -1;
  }
  local(0, r - 1) = static_cast<Int>(k / 2);
  IntMatrix g = t * local * inverse_unimodular(t);
  if (!is_isometry(lattice, g) || !is_involution(g)) throw InputError("de Jonquieres data does not define an involution");
  return Isometry{lattice, g};
}

std::vector<Vector> geiser_root_set() {
  const int n = 7;
  return {alpha(n, 1, 2, 7), alpha(n, 3, 4, 7), alpha(n, 5, 6, 7), e_diff(n, 1, 2), e_diff(n, 3, 4), e_diff(n, 5, 6),
          he(n, {2, -1, -1, -1, -1, -1, -1, 0})};
}

std::vector<Vector> bertini_root_set() {
  const int n = 8;
  std::vector<Vector> out;
  for (auto v : geiser_root_set()) {
    v.push_back(0);
    out.push_back(v);
  }
  out.push_back(he(n, {3, -1, -1, -1, -1, -1, -1, -1, -2}));
  return out;
}

Isometry involution_from_roots(int n, const std::vector<Vector>& roots) {
  Lattice l = del_pezzo(n);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (norm(l, roots[i]) != -2) throw InputError("reflection vectors must have norm -2");
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (inner(l, roots[i], roots[j]) != 0) throw InputError("reflection vectors must be pairwise orthogonal");
  }
  IntMatrix g = IntMatrix::identity(l.rank());
  for (const auto& r : roots) g = g * reflection(l, r);
  return Isometry{l, g};
}

NamedInvolution geiser() {
  return NamedInvolution{ModelName::Geiser, 7, 0, make_isometry(del_pezzo(7), negation_on_kperp(7)), BasisKind::HE};
}

NamedInvolution bertini() {
  return NamedInvolution{ModelName::Bertini, 8, 0, make_isometry(del_pezzo(8), negation_on_kperp(8)), BasisKind::HE};
}

NamedInvolution named_model(std::string_view name, std::optional<int> n) {
  if (name == "geiser") {
    if (n && *n != 7) throw InputError("the Geiser model lives in n = 7");
    return geiser();
  }
  if (name == "bertini") {
    if (n && *n != 8) throw InputError("the Bertini model lives in n = 8");
    return bertini();
  }
  if (name == "dejonquieres" || name == "de_jonquieres") return de_jonquieres(n.value_or(5));
  throw InputError("unknown model name: " + std::string(name));
}

BasisChange quadric_basis_change(int n) {
  if (n < 2 || n > 8) throw InputError("quadric basis change needs 2 <= n <= 8");
  Lattice src = blown_up_quadric(n), dst = del_pezzo(n);
  std::vector<Vector> images;
  Vector s1(dst.rank(), 0), s2(dst.rank(), 0), e1(dst.rank(), 0);
  s1[0] = s2[0] = e1[0] = 1;
  s1[1] = -1;
  s2[2] = -1;
  e1[1] = e1[2] = -1;
  images = {s1, s2, e1};
  for (int j = 2; j <= n - 1; ++j) images.push_back(basis_vector(dst, static_cast<std::size_t>(j + 1)));
  IntMatrix m = IntMatrix::from_columns(images);
  if (m.transpose() * dst.gram * m != src.gram) throw InputError("basis change does not intertwine the forms");
  return BasisChange{src, dst, m};
}

Isometry transport(const Isometry& g, const BasisChange& change) {
  if (!(g.lattice.gram == change.source.gram)) throw InputError("isometry is not on the source lattice");
  IntMatrix out = change.matrix * g.matrix * inverse_unimodular(change.matrix);
  return make_isometry(change.target, out);
}

Int quotient_signature(const Isometry& g) {
  if (!is_involution(g.matrix)) throw InputError("quotient signature needs an involution");
  Signature s = signature(fixed_and_antifixed(g).first.gram());
  return static_cast<Int>(s.positive) - static_cast<Int>(s.negative);
}

Int defect_sum(const Isometry& g) {
  Signature s = signature(g.lattice.gram);
  return 2 * quotient_signature(g) - (static_cast<Int>(s.positive) - static_cast<Int>(s.negative));
}

}  // namespace dpz
