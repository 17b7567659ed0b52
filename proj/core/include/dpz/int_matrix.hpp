#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dpz {

using Int = std::int64_t;

// Coordinate vector with respect to a fixed lattice basis.
using Vector = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Dense row-major integer matrix. Arithmetic is overflow checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vector>& rows);
  static IntMatrix from_columns(const std::vector<Vector>& cols);
  static IntMatrix diagonal(const Vector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;
  const std::vector<Int>& data() const { return data_; }

  IntMatrix transpose() const;
  Int trace() const;

  IntMatrix operator*(const IntMatrix& other) const;
  Vector operator*(const Vector& v) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;

  bool operator==(const IntMatrix& other) const = default;
  auto operator<=>(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

Int dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(Int s, const Vector& v);
Vector negate(const Vector& v);
bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace dpz
