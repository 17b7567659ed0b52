#include "dpz/normal_form.hpp"

#include <algorithm>
#include <utility>

#include "mp.hpp"

namespace dpz {

using detail::MpqMatrix;
using detail::MpzMatrix;

namespace {

void swap_rows(MpzMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(MpzMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += q * row_j
void add_row(MpzMatrix& a, std::size_t i, std::size_t j, const mpz_class& q) {
  for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] += q * a[j][k];
}

// col_i += q * col_j
void add_col(MpzMatrix& a, std::size_t i, std::size_t j, const mpz_class& q) {
  for (auto& row : a) row[i] += q * row[j];
}

struct MpzSmith {
  MpzMatrix d, left, right;
  std::size_t rank = 0;
};

MpzSmith smith(const MpzMatrix& input, std::size_t m, std::size_t n) {
  MpzSmith s;
  s.d = input;
  s.left.assign(m, std::vector<mpz_class>(m, 0));
  s.right.assign(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < m; ++i) s.left[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i) s.right[i][i] = 1;
  auto& a = s.d;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(a[i][j]) != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    swap_rows(a, t, pi);
    swap_rows(s.left, t, pi);
    swap_cols(a, t, pj);
    swap_cols(s.right, t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(a, i, t, -q);
        add_row(s.left, i, t, -q);
        if (sgn(a[i][t]) != 0) {
          swap_rows(a, t, i);
          swap_rows(s.left, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_col(a, j, t, -q);
        add_col(s.right, j, t, -q);
        if (sgn(a[t][j]) != 0) {
          swap_cols(a, t, j);
          swap_cols(s.right, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            add_row(a, t, i, 1);
            add_row(s.left, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (sgn(a[t][t]) < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : s.left[t]) x = -x;
    }
  }
  s.rank = t;
  return s;
}

}  // namespace

namespace detail {

MpqMatrix inverse(MpqMatrix a) {
  std::size_t n = a.size();
  MpqMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw InputError("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    mpq_class piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

SmithForm smith_normal_form(const IntMatrix& a) {
  MpzSmith s = smith(detail::to_mpz(a), a.rows(), a.cols());
  SmithForm out;
  out.left = detail::to_int(s.left, a.rows());
  out.right = detail::to_int(s.right, a.cols());
  out.rank = s.rank;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out.diagonal.push_back(detail::to_int(s.d[i][i]));
  return out;
}

std::vector<Vector> integer_kernel(const IntMatrix& a, std::size_t cols) {
  std::vector<Vector> basis;
  if (a.rows() == 0) {
    for (std::size_t i = 0; i < cols; ++i) {
      Vector e(cols, 0);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  if (a.cols() != cols) throw InputError("kernel: column count mismatch");
  MpzSmith s = smith(detail::to_mpz(a), a.rows(), cols);
  for (std::size_t j = s.rank; j < cols; ++j) {
    Vector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = detail::to_int(s.right[i][j]);
    basis.push_back(v);
  }
  return basis;
}

std::vector<Vector> saturate(const std::vector<Vector>& rows, std::size_t dim) {
  if (rows.empty()) return {};
  std::vector<Vector> perp = integer_kernel(IntMatrix::from_rows(rows), dim);
  if (perp.empty()) return integer_kernel(IntMatrix(0, dim), dim);
  return integer_kernel(IntMatrix::from_rows(perp), dim);
}

std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw InputError("solve: dimension mismatch");
  std::size_t m = a.rows(), n = a.cols();
  MpzSmith s = smith(detail::to_mpz(a), m, n);
  std::vector<mpz_class> lb(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) lb[i] += s.left[i][k] * detail::to_mpz(b[k]);
  std::vector<mpz_class> y(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(lb[i].get_mpz_t(), s.d[i][i].get_mpz_t())) return std::nullopt;
      y[i] = lb[i] / s.d[i][i];
    } else if (sgn(lb[i]) != 0) {
      return std::nullopt;
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += s.right[i][k] * y[k];
    x[i] = detail::to_int(acc);
  }
  return x;
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  MpzMatrix m = detail::to_mpz(a);
  mpz_class sign = 1, prev = 1;
  // fraction-free Bareiss elimination
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return detail::to_int(sign * m[n - 1][n - 1]);
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  Int d = determinant(a);
  if (d != 1 && d != -1) throw InputError("matrix is not unimodular");
  MpqMatrix inv = detail::inverse(detail::to_mpq(a));
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = detail::to_int(mpz_class(inv[i][j]));
  return out;
}

std::size_t rank_over_q(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return smith(detail::to_mpz(a), a.rows(), a.cols()).rank;
}

std::uint64_t mod2_bits(const Vector& v) {
  if (v.size() > 64) throw Unsupported("mod 2 reduction limited to 64 coordinates");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] & 1) bits |= (std::uint64_t{1} << i);
  return bits;
}

Mod2Span::Mod2Span(const std::vector<Vector>& generators) {
  for (const auto& g : generators) {
    std::uint64_t r = reduce(mod2_bits(g));
    if (r == 0) continue;
    basis_.push_back(r);
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
    // keep a reduced echelon form so reduce() is a single pass
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      std::uint64_t lead = std::uint64_t{1} << (63 - __builtin_clzll(basis_[i]));
      for (std::size_t j = 0; j < basis_.size(); ++j)
        if (j != i && (basis_[j] & lead)) basis_[j] ^= basis_[i];
    }
    std::sort(basis_.begin(), basis_.end(), std::greater<>());
  }
}

std::uint64_t Mod2Span::reduce(std::uint64_t bits) const {
  for (std::uint64_t b : basis_) {
    std::uint64_t lead = std::uint64_t{1} << (63 - __builtin_clzll(b));
    if (bits & lead) bits ^= b;
  }
  return bits;
}

bool Mod2Span::contains(const Vector& v) const { return reduce(mod2_bits(v)) == 0; }

std::size_t rank_mod2(const IntMatrix& a) { return Mod2Span(a.row_list()).rank(); }

}  // namespace dpz
