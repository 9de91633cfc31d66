#pragma once

// Dense exact matrices over arbitrary-precision integers and rationals.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "flatbound/error.hpp"

namespace flatbound {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }
  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  // Lexicographic order on (shape, entries); used for deterministic containers.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (a.data_[k] < b.data_[k]) return true;
      if (b.data_[k] < a.data_[k]) return false;
    }
    return false;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
    std::vector<T> r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shape");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
// num/den in canonical form (the two-argument mpq_class constructor does not reduce).
Rational ratio(const Integer& num, const Integer& den);
bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);
bool is_integral(const RatMatrix& m);
// Requires is_integral; throws InvalidArgument otherwise.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

Integer floor(const Rational& q);
// Representative in [0, 1).
Rational frac(const Rational& q);
RatVector frac(const RatVector& v);
// Least common multiple of all denominators (1 for an empty input).
Integer common_denominator(const RatVector& v);
Integer common_denominator(const RatMatrix& m);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Rational& s, const RatVector& v);
RatVector operator*(const IntMatrix& m, const RatVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);
std::string to_string(const IntMatrix& m);
std::string to_string(const RatMatrix& m);

}  // namespace flatbound
