#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpz/dpz.hpp"
#include "oracle.hpp"

namespace testing_support {

// Parses "2H - E1 - E3 + E5" into coordinates of Z^{1,n}.
inline dpz::Vector cls(int n, const std::string& text) {
  dpz::Vector v(static_cast<std::size_t>(n) + 1, 0);
  std::size_t i = 0;
  int sign = 1;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ') {
      ++i;
    } else if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++i;
    } else {
      dpz::Int coef = 1;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t used = 0;
        coef = std::stoll(text.substr(i), &used);
        i += used;
      }
      if (text[i] == 'H') {
        v[0] += sign * coef;
        ++i;
      } else if (text[i] == 'E') {
        std::size_t used = 0;
        int k = std::stoi(text.substr(i + 1), &used);
        if (k < 1 || k > n) throw std::out_of_range("bad class " + text);
        v[static_cast<std::size_t>(k)] += sign * coef;
        i += 1 + used;
      } else {
        throw std::invalid_argument("bad class " + text);
      }
      sign = 1;
    }
  }
  return v;
}

inline dpz::IntMatrix ref(int n, const std::string& text) { return dpz::reflection(dpz::del_pezzo(n), cls(n, text)); }

// Product of reflections, applied right to left as written.
inline dpz::Isometry reflections(int n, const std::vector<std::string>& mirrors) {
  auto m = dpz::IntMatrix::identity(static_cast<std::size_t>(n) + 1);
  for (const auto& s : mirrors) m = m * ref(n, s);
  return dpz::make_isometry(dpz::del_pezzo(n), m);
}

// Block sum of g (on Z^{1,k}) with `tail` on E(k+1)..En.
inline dpz::Isometry block_sum(const dpz::Isometry& g, int n, const std::vector<dpz::Int>& tail) {
  auto m = dpz::IntMatrix::identity(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < g.matrix.rows(); ++i)
    for (std::size_t j = 0; j < g.matrix.cols(); ++j) m(i, j) = g.matrix(i, j);
  for (std::size_t t = 0; t < tail.size(); ++t) {
    std::size_t d = g.matrix.rows() + t;
    m(d, d) = tail[t];
  }
  return dpz::make_isometry(dpz::del_pezzo(n), m);
}

inline oracle::Mat to_oracle(const dpz::IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline dpz::IntMatrix from_oracle(const oracle::Mat& m) {
  dpz::IntMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline dpz::Isometry conjugate(const dpz::Isometry& g, const dpz::IntMatrix& w) {
  return dpz::make_isometry(g.lattice, w * g.matrix * dpz::inverse_unimodular(w));
}

}  // namespace testing_support
