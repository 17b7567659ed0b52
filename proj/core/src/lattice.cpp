#include "dpz/lattice.hpp"

#include <numeric>
#include <sstream>

#include "dpz/errors.hpp"
#include "dpz/normal_form.hpp"
#include "mp.hpp"

namespace dpz {

using detail::MpqMatrix;

namespace {

struct Diagonalization {
  std::vector<mpq_class> diagonal;  // Q(t_i, t_i)
  MpqMatrix transform;              // rows t_i in original coordinates, pairwise orthogonal
  std::size_t zero = 0;
};

Diagonalization diagonalize(const IntMatrix& gram) {
  std::size_t n = gram.rows();
  MpqMatrix a = detail::to_mpq(gram);
  MpqMatrix t(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;

  auto swap_basis = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    for (auto& row : a) std::swap(row[i], row[k]);
    std::swap(t[i], t[k]);
  };
  // b_i <- b_i + f b_k
  auto add_basis = [&](std::size_t i, std::size_t k, const mpq_class& f) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] += f * a[k][j];
    for (std::size_t j = 0; j < n; ++j) a[j][i] += f * a[j][k];
    for (std::size_t j = 0; j < n; ++j) t[i][j] += f * t[k][j];
  };

  Diagonalization d;
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][p]) == 0) ++p;
      if (p < n) {
        swap_basis(p, k);
      } else {
        // all remaining diagonal entries vanish; use an off-diagonal entry
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (sgn(a[i][j]) != 0) {
              add_basis(i, j, 1);
              swap_basis(i, k);
              found = true;
            }
        if (!found) break;
      }
    }
    for (std::size_t i = k + 1; i < n; ++i)
      if (sgn(a[i][k]) != 0) add_basis(i, k, -a[i][k] / a[k][k]);
    d.diagonal.push_back(a[k][k]);
  }
  d.zero = n - k;
  t.resize(k);
  d.transform = std::move(t);
  return d;
}

Vector primitive_integer(const std::vector<mpq_class>& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class e = mpz_class(x * den);
    g = gcd(g, e);
    z.push_back(e);
  }
  Vector out;
  for (auto& e : z) out.push_back(detail::to_int(sgn(g) == 0 ? e : mpz_class(e / g)));
  return out;
}

std::vector<std::string> default_labels(std::size_t r) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("b" + std::to_string(i));
  return labels;
}

}  // namespace

Lattice del_pezzo(int n) {
  if (n < 0) throw InputError("del Pezzo index must be non-negative");
  std::size_t r = static_cast<std::size_t>(n) + 1;
  Lattice l;
  l.gram = IntMatrix(r, r);
  l.gram(0, 0) = 1;
  l.labels.push_back("H");
  for (std::size_t i = 1; i < r; ++i) {
    l.gram(i, i) = -1;
    l.labels.push_back("E" + std::to_string(i));
  }
  l.family = LatticeFamily::DelPezzo;
  l.index = n;
  if (n <= 8) {
    l.polarization = Vector(r, -1);
    l.polarization[0] = 3;
  } else {
    l.polarization = basis_vector(l, 0);
  }
  return l;
}

Lattice quadric() { return blown_up_quadric(1); }

Lattice blown_up_quadric(int n) {
  if (n < 1) throw InputError("blown-up quadric index must be at least 1");
  std::size_t r = static_cast<std::size_t>(n) + 1;
  Lattice l;
  l.gram = IntMatrix(r, r);
  l.gram(0, 1) = l.gram(1, 0) = 1;
  l.labels = {"S1", "S2"};
  for (std::size_t i = 2; i < r; ++i) {
    l.gram(i, i) = -1;
    l.labels.push_back("e" + std::to_string(i - 1));
  }
  l.family = n == 1 ? LatticeFamily::Quadric : LatticeFamily::BlownUpQuadric;
  l.index = n;
  if (n <= 8) {
    l.polarization = Vector(r, -1);
    l.polarization[0] = 2;
    l.polarization[1] = 2;
  } else {
    l.polarization = Vector(r, 0);
    l.polarization[0] = l.polarization[1] = 1;
  }
  return l;
}

Lattice lattice_from_gram(const IntMatrix& gram, std::vector<std::string> labels, Vector polarization) {
  if (!gram.is_square()) throw InputError("Gram matrix must be square");
  if (gram != gram.transpose()) throw InputError("Gram matrix must be symmetric");
  Lattice l;
  l.gram = gram;
  l.labels = labels.empty() ? default_labels(gram.rows()) : std::move(labels);
  if (l.labels.size() != gram.rows()) throw InputError("label count does not match rank");
  if (!polarization.empty()) {
    if (polarization.size() != gram.rows()) throw InputError("polarization has wrong dimension");
    l.polarization = std::move(polarization);
    if (norm(l, l.polarization) <= 0) throw InputError("polarization must have positive norm");
  } else {
    Signature s = signature(gram);
    if (s.positive == 1 && s.zero == 0) l.polarization = *positive_vector(gram);
  }
  return l;
}

Vector canonical_class(const Lattice& lattice) {
  std::size_t r = lattice.rank();
  switch (lattice.family) {
    case LatticeFamily::DelPezzo: {
      Vector k(r, 1);
      k[0] = -3;
      return k;
    }
    case LatticeFamily::Quadric:
    case LatticeFamily::BlownUpQuadric: {
      Vector k(r, 1);
      k[0] = k[1] = -2;
      return k;
    }
    case LatticeFamily::Custom:
      break;
  }
  return {};
}

Int inner(const Lattice& lattice, const Vector& v, const Vector& w) {
  if (v.size() != lattice.rank() || w.size() != lattice.rank())
    throw InputError("vector dimension does not match lattice rank");
  return dot(v, lattice.gram * w);
}

Int norm(const Lattice& lattice, const Vector& v) { return inner(lattice, v, v); }

Vector basis_vector(const Lattice& lattice, std::size_t i) {
  Vector e(lattice.rank(), 0);
  e.at(i) = 1;
  return e;
}

Signature signature(const IntMatrix& gram) {
  Diagonalization d = diagonalize(gram);
  Signature s;
  for (const auto& x : d.diagonal) (sgn(x) > 0 ? s.positive : s.negative)++;
  s.zero = d.zero;
  return s;
}

bool is_even(const IntMatrix& gram) {
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

bool is_doubly_even_gram(const IntMatrix& gram) {
  for (Int x : gram.data())
    if (x % 2 != 0) return false;
  return true;
}

std::optional<Vector> positive_vector(const IntMatrix& gram) {
  Diagonalization d = diagonalize(gram);
  for (std::size_t i = 0; i < d.diagonal.size(); ++i)
    if (sgn(d.diagonal[i]) > 0) return primitive_integer(d.transform[i]);
  return std::nullopt;
}

IntMatrix Sublattice::gram() const {
  IntMatrix g(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i; j < rank(); ++j) g(i, j) = g(j, i) = inner(ambient, basis[i], basis[j]);
  return g;
}

IntMatrix Sublattice::basis_matrix() const {
  if (basis.empty()) return IntMatrix(0, ambient.rank());
  return IntMatrix::from_rows(basis);
}

bool Sublattice::contains(const Vector& v) const {
  if (basis.empty()) return is_zero(v);
  return solve_integer(basis_matrix().transpose(), v).has_value();
}

Vector Sublattice::coordinates(const Vector& v) const {
  if (basis.empty()) {
    if (!is_zero(v)) throw InputError("vector is not in the sublattice");
    return {};
  }
  auto c = solve_integer(basis_matrix().transpose(), v);
  if (!c) throw InputError("vector is not in the sublattice");
  return *c;
}

Vector Sublattice::from_coordinates(const Vector& c) const {
  if (c.size() != rank()) throw InputError("coordinate vector has wrong dimension");
  Vector v(ambient.rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    if (c[i] != 0) v = add(v, scale(c[i], basis[i]));
  return v;
}

Sublattice span(const Lattice& ambient, const std::vector<Vector>& generators) {
  for (const auto& g : generators)
    if (g.size() != ambient.rank()) throw InputError("generator dimension does not match lattice rank");
  return Sublattice{ambient, saturate(generators, ambient.rank())};
}

Sublattice whole(const Lattice& ambient) {
  Sublattice s{ambient, {}};
  for (std::size_t i = 0; i < ambient.rank(); ++i) s.basis.push_back(basis_vector(ambient, i));
  return s;
}

Sublattice orthogonal_complement(const Sublattice& sub) {
  if (sub.basis.empty()) return whole(sub.ambient);
  IntMatrix m = sub.basis_matrix() * sub.ambient.gram;
  return Sublattice{sub.ambient, integer_kernel(m, sub.ambient.rank())};
}

Sublattice orthogonal_complement(const Sublattice& sub, const Sublattice& inside) {
  if (inside.basis.empty()) return inside;
  if (sub.basis.empty()) return inside;
  // y in Z^k with sum y_i inside_i orthogonal to sub
  IntMatrix m = sub.basis_matrix() * sub.ambient.gram * inside.basis_matrix().transpose();
  Sublattice out{inside.ambient, {}};
  for (const auto& y : integer_kernel(m, inside.rank())) out.basis.push_back(inside.from_coordinates(y));
  return out;
}

Lattice as_lattice(const Sublattice& sub) {
  IntMatrix g = sub.gram();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sub.rank(); ++i) labels.push_back("v" + std::to_string(i + 1));
  Vector pol;
  const Vector& p = sub.ambient.polarization;
  if (!p.empty() && sub.rank() > 0 && determinant(g) != 0) {
    MpqMatrix inv = detail::inverse(detail::to_mpq(g));
    Vector rhs(sub.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) rhs[i] = inner(sub.ambient, sub.basis[i], p);
    std::vector<mpq_class> y(sub.rank(), 0);
    for (std::size_t i = 0; i < sub.rank(); ++i)
      for (std::size_t j = 0; j < sub.rank(); ++j) y[i] += inv[i][j] * detail::to_mpz(rhs[j]);
    Vector cand = primitive_integer(y);
    if (!is_zero(cand) && dot(cand, g * cand) > 0) pol = cand;
  }
  return lattice_from_gram(g, labels, pol);
}

bool is_isometry(const Lattice& lattice, const IntMatrix& m) {
  if (!m.is_square() || m.rows() != lattice.rank()) return false;
  return m.transpose() * lattice.gram * m == lattice.gram;
}

bool is_involution(const IntMatrix& m) { return m.is_square() && m * m == IntMatrix::identity(m.rows()); }

Isometry make_isometry(const Lattice& lattice, const IntMatrix& m) {
  if (!m.is_square()) throw InputError("isometry matrix must be square");
  if (m.rows() != lattice.rank())
    throw InputError("matrix size " + std::to_string(m.rows()) + " does not match lattice rank " +
                     std::to_string(lattice.rank()));
  if (!is_isometry(lattice, m)) throw InputError("matrix does not preserve the intersection form");
  return Isometry{lattice, m};
}

std::pair<Sublattice, Sublattice> fixed_and_antifixed(const Isometry& g) {
  std::size_t r = g.lattice.rank();
  IntMatrix id = IntMatrix::identity(r);
  return {Sublattice{g.lattice, integer_kernel(g.matrix - id, r)},
          Sublattice{g.lattice, integer_kernel(g.matrix + id, r)}};
}

IntMatrix restrict_to(const Isometry& g, const Sublattice& sub) {
  std::vector<Vector> cols;
  for (const auto& b : sub.basis) cols.push_back(sub.coordinates(g.apply(b)));
  if (cols.empty()) return {};
  return IntMatrix::from_columns(cols);
}

IntMatrix conjugate_to_basis(const IntMatrix& g, const IntMatrix& basis_rows) {
  IntMatrix t = basis_rows.transpose();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < t.cols(); ++i) {
    auto y = solve_integer(t, g * t.column(i));
    if (!y) throw InputError("basis change does not preserve the lattice");
    cols.push_back(*y);
  }
  return IntMatrix::from_columns(cols);
}

std::string format_vector(const Lattice& lattice, const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int c = v[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << (i < lattice.labels.size() ? lattice.labels[i] : "b" + std::to_string(i));
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace dpz
