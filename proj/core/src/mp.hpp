#pragma once

#include <gmpxx.h>

#include <vector>

#include "dpz/errors.hpp"
#include "dpz/int_matrix.hpp"

namespace dpz::detail {

using MpzMatrix = std::vector<std::vector<mpz_class>>;
using MpqMatrix = std::vector<std::vector<mpq_class>>;

inline Int to_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(z.get_si());
}

inline mpz_class to_mpz(Int x) { return mpz_class(static_cast<long>(x)); }

inline MpzMatrix to_mpz(const IntMatrix& m) {
  MpzMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_mpz(m(i, j));
  return out;
}

inline MpqMatrix to_mpq(const IntMatrix& m) {
  MpqMatrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_mpz(m(i, j));
  return out;
}

inline IntMatrix to_int(const MpzMatrix& m, std::size_t cols) {
  IntMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = to_int(m[i][j]);
  return out;
}

// Inverse of a nonsingular rational matrix.
MpqMatrix inverse(MpqMatrix a);

}  // namespace dpz::detail
