#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dpz/int_matrix.hpp"

namespace dpz {

// left * a * right = diag(diagonal), with left and right unimodular.
struct SmithForm {
  IntMatrix left;
  IntMatrix right;
  std::vector<Int> diagonal;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Saturated basis of {x in Z^cols : a x = 0}.
std::vector<Vector> integer_kernel(const IntMatrix& a, std::size_t cols);

// Basis of (span_Q rows) intersected with Z^dim.
std::vector<Vector> saturate(const std::vector<Vector>& rows, std::size_t dim);

// Some integer solution of a x = b, if one exists.
std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b);

Int determinant(const IntMatrix& a);
// Inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);
std::size_t rank_over_q(const IntMatrix& a);
std::size_t rank_mod2(const IntMatrix& a);

// Row space of a set of integer vectors reduced mod 2; used for congruence tests mod 2L.
class Mod2Span {
 public:
  explicit Mod2Span(const std::vector<Vector>& generators);
  bool contains(const Vector& v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<std::uint64_t> basis_;  // echelon form keyed by leading bit
  std::uint64_t reduce(std::uint64_t bits) const;
};

std::uint64_t mod2_bits(const Vector& v);

}  // namespace dpz
