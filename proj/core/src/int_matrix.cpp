#include "dpz/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "dpz/errors.hpp"

namespace dpz {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& cols) {
  return from_rows(cols).transpose();
}

IntMatrix IntMatrix::diagonal(const Vector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector IntMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> IntMatrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vector> IntMatrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        Int b = other(k, j);
        if (b == 0) continue;
        out(i, j) = checked_add(out(i, j), checked_mul(a, b));
      }
    }
  }
  return out;
}

Vector IntMatrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) s = checked_add(s, checked_mul((*this)(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_add(data_[k], other.data_[k]);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_sub(data_[k], other.data_[k]);
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = checked_sub(0, data_[k]);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << dpz::to_string(row(i));
  }
  os << ']';
  return os.str();
}

namespace {
std::size_t hash_range(const std::vector<Int>& v, std::size_t seed) {
  for (Int x : v) seed ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
}  // namespace

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  return hash_range(m.data(), m.rows() * 31 + m.cols());
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept { return hash_range(v, v.size()); }

Int dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("dot product dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector sum dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector difference dimension mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

Vector scale(Int s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(s, v[i]);
  return r;
}

Vector negate(const Vector& v) { return scale(-1, v); }

bool is_zero(const Vector& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

}  // namespace dpz
