#include "dpz/short_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dpz/errors.hpp"
#include "dpz/normal_form.hpp"
#include "mp.hpp"

namespace dpz {

using detail::MpqMatrix;

namespace {

// Fincke-Pohst enumeration of integer z with (z - c)^T A (z - c) <= bound, A positive definite.
class Ellipsoid {
 public:
  explicit Ellipsoid(const MpqMatrix& a) : k_(a.size()), q_(a) {
    for (std::size_t i = 0; i < k_; ++i) {
      if (sgn(q_[i][i]) <= 0) throw InputError("enumeration requires a definite form");
      for (std::size_t j = i + 1; j < k_; ++j) {
        q_[j][i] = q_[i][j];
        q_[i][j] /= q_[i][i];
      }
      for (std::size_t l = i + 1; l < k_; ++l)
        for (std::size_t j = l; j < k_; ++j) q_[l][j] -= q_[l][i] * q_[i][j];
    }
  }

  void enumerate(const std::vector<mpq_class>& center, const mpq_class& bound,
                 const std::function<void(const Vector&)>& emit) const {
    if (sgn(bound) < 0) return;
    Vector z(k_, 0);
    if (k_ == 0) {
      emit(z);
      return;
    }
    std::vector<mpq_class> y(k_);
    recurse(k_ - 1, bound, center, z, y, emit);
  }

 private:
  void recurse(std::size_t i, const mpq_class& remaining, const std::vector<mpq_class>& c, Vector& z,
               std::vector<mpq_class>& y, const std::function<void(const Vector&)>& emit) const {
    mpq_class m = c[i];
    for (std::size_t j = i + 1; j < k_; ++j) m -= q_[i][j] * y[j];
    mpq_class r2 = remaining / q_[i][i];
    double md = m.get_d(), rd = std::sqrt(std::max(0.0, r2.get_d()));
    Int lo = static_cast<Int>(std::ceil(md - rd)), hi = static_cast<Int>(std::floor(md + rd));
    auto inside = [&](Int v) {
      mpq_class d = mpq_class(detail::to_mpz(v)) - m;
      return d * d <= r2;
    };
    // exact correction of the floating point range
    while (inside(lo - 1)) --lo;
    while (lo <= hi && !inside(lo)) ++lo;
    while (inside(hi + 1)) ++hi;
    while (hi >= lo && !inside(hi)) --hi;
    for (Int v = lo; v <= hi; ++v) {
      z[i] = v;
      mpq_class d = mpq_class(detail::to_mpz(v)) - m;
      y[i] = mpq_class(detail::to_mpz(v)) - c[i];
      if (i == 0) {
        emit(z);
      } else {
        recurse(i - 1, remaining - q_[i][i] * d * d, c, z, y, emit);
      }
    }
  }

  std::size_t k_;
  MpqMatrix q_;
};

MpqMatrix negated(const IntMatrix& g) {
  MpqMatrix a = detail::to_mpq(g);
  for (auto& row : a)
    for (auto& x : row) x = -x;
  return a;
}

void sort_unique(std::vector<Vector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

struct NormSearch::Impl {
  Sublattice sub;
  int sign = 0;
  Vector pol;               // ambient polarization (may be empty)
  IntMatrix gram;           // Gram of `sub`
  // definite case
  std::unique_ptr<Ellipsoid> ellipsoid;
  // layered case: basis b0, b1.. with Q(b_i, P) = 0 for i >= 1
  std::vector<Vector> slice_basis;
  Int w0 = 0;
  Int q0 = 0;
  Vector u;
  IntMatrix slice_neg_gram;  // -Gram(b1..)
  MpqMatrix slice_inverse;
  std::unique_ptr<Ellipsoid> slice;

  Vector combine(const std::vector<Vector>& basis, const Vector& coeffs) const {
    Vector x(sub.ambient.rank(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) x = add(x, scale(coeffs[i], basis[i]));
    return x;
  }
};

NormSearch::NormSearch(const Sublattice& sub) : impl_(std::make_unique<Impl>()) {
  Impl& s = *impl_;
  s.sub = sub;
  s.gram = sub.gram();
  s.pol = sub.ambient.polarization;
  std::size_t k = sub.rank();
  Signature sig = signature(s.gram);
  if (k == 0 || sig.positive == k) {
    s.sign = 1;
    s.ellipsoid = std::make_unique<Ellipsoid>(detail::to_mpq(s.gram));
    return;
  }
  if (sig.negative == k) {
    s.sign = -1;
    s.ellipsoid = std::make_unique<Ellipsoid>(negated(s.gram));
    return;
  }
  if (s.pol.empty()) throw Unsupported("search in an indefinite sublattice needs a Lorentzian ambient");
  Signature amb = signature(sub.ambient.gram);
  if (amb.positive != 1 || amb.zero != 0)
    throw Unsupported("search in an indefinite sublattice needs a Lorentzian ambient");

  IntMatrix w(1, k);
  for (std::size_t i = 0; i < k; ++i) w(0, i) = inner(sub.ambient, sub.basis[i], s.pol);
  SmithForm snf = smith_normal_form(w);
  IntMatrix r = snf.right;
  for (std::size_t j = 0; j < k; ++j) {
    Vector coeff = r.column(j);
    s.slice_basis.push_back(s.combine(sub.basis, coeff));
  }
  s.w0 = inner(sub.ambient, s.slice_basis[0], s.pol);
  if (s.w0 == 0) throw InputError("degenerate slicing of sublattice");
  s.q0 = norm(sub.ambient, s.slice_basis[0]);
  std::size_t m = k - 1;
  s.u.assign(m, 0);
  s.slice_neg_gram = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    s.u[i] = inner(sub.ambient, s.slice_basis[0], s.slice_basis[i + 1]);
    for (std::size_t j = 0; j < m; ++j)
      s.slice_neg_gram(i, j) = -inner(sub.ambient, s.slice_basis[i + 1], s.slice_basis[j + 1]);
  }
  if (m > 0) {
    MpqMatrix a = detail::to_mpq(s.slice_neg_gram);
    s.slice = std::make_unique<Ellipsoid>(a);
    s.slice_inverse = detail::inverse(a);
  }
}

NormSearch::~NormSearch() = default;
NormSearch::NormSearch(NormSearch&&) noexcept = default;
NormSearch& NormSearch::operator=(NormSearch&&) noexcept = default;

const Sublattice& NormSearch::sublattice() const { return impl_->sub; }
bool NormSearch::definite() const { return impl_->sign != 0; }
int NormSearch::definite_sign() const { return impl_->sign; }

Int NormSearch::layer_step() const {
  const Impl& s = *impl_;
  if (s.sign == 0) return s.w0 < 0 ? -s.w0 : s.w0;
  if (s.pol.empty()) return 1;
  Int g = 0;
  for (const auto& b : s.sub.basis) g = std::gcd(g, inner(s.sub.ambient, b, s.pol));
  return g == 0 ? 1 : g;
}

Int NormSearch::height(const Vector& x) const {
  if (impl_->pol.empty()) return 0;
  Int h = inner(impl_->sub.ambient, x, impl_->pol);
  return h < 0 ? -h : h;
}

std::vector<Vector> NormSearch::all_of_norm(Int target) const {
  const Impl& s = *impl_;
  if (s.sign == 0) throw Unsupported("complete enumeration requires a definite sublattice");
  std::vector<Vector> out;
  if (target == 0 || (target > 0) != (s.sign > 0)) return out;
  mpq_class bound = detail::to_mpz(target * s.sign);
  std::vector<mpq_class> center(s.sub.rank(), 0);
  s.ellipsoid->enumerate(center, bound, [&](const Vector& z) {
    Vector x = s.combine(s.sub.basis, z);
    if (norm(s.sub.ambient, x) == target) out.push_back(x);
  });
  sort_unique(out);
  return out;
}

std::vector<Vector> NormSearch::layer(Int target, Int layer) const {
  const Impl& s = *impl_;
  std::vector<Vector> out;
  if (s.sign != 0) {
    if (target == 0) {
      if (layer == 0) out.push_back(Vector(s.sub.ambient.rank(), 0));
      return out;
    }
    for (auto& x : all_of_norm(target))
      if (s.pol.empty() ? layer == 0 : inner(s.sub.ambient, x, s.pol) == layer) out.push_back(std::move(x));
    return out;
  }
  if (layer % s.w0 != 0) return out;
  Int c = layer / s.w0;
  std::size_t m = s.slice_basis.size() - 1;
  Vector base = scale(c, s.slice_basis[0]);
  if (m == 0) {
    if (norm(s.sub.ambient, base) == target) out.push_back(base);
    return out;
  }
  // (z - z*)^T A (z - z*) = c^2 q0 - t + z*^T A z*, with z* = c A^{-1} u
  std::vector<mpq_class> center(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) center[i] += s.slice_inverse[i][j] * detail::to_mpz(s.u[j]);
  for (auto& x : center) x *= detail::to_mpz(c);
  mpq_class zaz = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) zaz += center[i] * detail::to_mpz(s.slice_neg_gram(i, j)) * center[j];
  mpq_class bound = mpq_class(detail::to_mpz(c) * detail::to_mpz(c) * detail::to_mpz(s.q0)) -
                    detail::to_mpz(target) + zaz;
  std::vector<Vector> rest(s.slice_basis.begin() + 1, s.slice_basis.end());
  s.slice->enumerate(center, bound, [&](const Vector& z) {
    Vector x = add(base, s.combine(rest, z));
    if (norm(s.sub.ambient, x) == target) out.push_back(x);
  });
  sort_unique(out);
  return out;
}

ShortVectorResult short_vectors(const Sublattice& sub, Int target, Int height_bound) {
  NormSearch search(sub);
  ShortVectorResult result;
  if (search.definite()) {
    result.vectors = search.all_of_norm(target);
  } else {
    result.truncated = true;
    Int step = search.layer_step();
    for (Int j = 0; j <= height_bound; j += step) {
      for (auto& x : search.layer(target, j)) result.vectors.push_back(std::move(x));
      if (j == 0) continue;
      for (auto& x : search.layer(target, -j)) result.vectors.push_back(std::move(x));
    }
  }
  std::stable_sort(result.vectors.begin(), result.vectors.end(), [&](const Vector& a, const Vector& b) {
    Int ha = search.height(a), hb = search.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return result;
}

}  // namespace dpz
