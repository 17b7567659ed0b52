#pragma once

// Brute-force reference computations used to freeze expected values. Deliberately naive
// and independent of the library: plain loops over boxes and explicit group closure.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major

inline long long form(const Vec& a, const Vec& b) {
  long long s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

inline Vec canonical(int n) {
  Vec k(n + 1, 1);
  k[0] = -3;
  return k;
}

// Calls f on every vector of length `dim` with entries in [-bound, bound].
inline void box(std::size_t dim, long long bound, const std::function<void(const Vec&)>& f) {
  Vec v(dim, -bound);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < dim && v[i] == bound) v[i++] = -bound;
    if (i == dim) return;
    ++v[i];
  }
}

// Vectors of Z^{1,n} with coefficients in [-3, 3], norm -2 and orthogonal to K.
inline std::size_t root_count_box(int n) {
  std::size_t count = 0;
  Vec k = canonical(n);
  box(n + 1, 3, [&](const Vec& v) { count += form(v, v) == -2 && form(v, k) == 0; });
  return count;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  std::size_t r = a.size();
  Mat c(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat identity(std::size_t r) {
  Mat m(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

// Inverse of an isometry of diag(1,-1,...,-1): G w^T G.
inline Mat isometry_inverse(const Mat& w) {
  std::size_t r = w.size();
  Mat out(r, Vec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i][j] = ((i == 0) == (j == 0) ? 1 : -1) * w[j][i];
  return out;
}

// x -> x + Q(x, v) v for a vector of norm -2 in Z^{1,n}.
inline Mat root_reflection(const Vec& v) {
  std::size_t r = v.size();
  Mat m = identity(r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec e(r, 0);
    e[j] = 1;
    long long q = form(e, v);
    for (std::size_t i = 0; i < r; ++i) m[i][j] += q * v[i];
  }
  return m;
}

// Closure of the generators under multiplication.
inline std::set<Mat> closure(const std::vector<Mat>& gens) {
  std::set<Mat> seen{identity(gens.front().size())};
  std::vector<Mat> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Mat y = multiply(s, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Group generated by reflections in all roots of the box (n >= 3).
inline std::set<Mat> weyl_group_bfs(int n) {
  Vec k = canonical(n);
  std::vector<Mat> gens;
  box(n + 1, 1, [&](const Vec& v) {
    if (form(v, v) == -2 && form(v, k) == 0) gens.push_back(root_reflection(v));
  });
  return closure(gens);
}

// Vectors of the given norm for a Gram matrix, by box enumeration.
inline std::vector<Vec> vectors_of_norm(const Mat& gram, long long target, long long bound) {
  std::vector<Vec> out;
  box(gram.size(), bound, [&](const Vec& v) {
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * gram[i][j] * v[j];
    if (s == target) out.push_back(v);
  });
  return out;
}

// Whether two rank-2 Gram matrices are congruent over Z, by search over P with entries
// in [-bound, bound] and det P = +-1.
inline bool congruent_rank2(const Mat& a, const Mat& b, long long bound) {
  bool found = false;
  box(4, bound, [&](const Vec& p) {
    if (found) return;
    long long det = p[0] * p[3] - p[1] * p[2];
    if (det != 1 && det != -1) return;
    Mat P{{p[0], p[1]}, {p[2], p[3]}};
    Mat pt{{p[0], p[2]}, {p[1], p[3]}};
    found = multiply(multiply(pt, a), P) == b;
  });
  return found;
}

}  // namespace oracle
