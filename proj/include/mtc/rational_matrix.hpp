#pragma once

#include "mtc/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace mtc {

/// Dense row-major matrix over Q. Subspaces are represented by the column
/// span of a matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix transpose() const;
  QMatrix columns(std::size_t first, std::size_t count) const;
  bool is_zero() const;

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

/// [a | b]
QMatrix hconcat(const QMatrix& a, const QMatrix& b);

std::size_t rank(const QMatrix& m);
Rational determinant(const QMatrix& m);

/// Throws std::domain_error when `m` is singular.
QMatrix inverse(const QMatrix& m);

/// Columns form a basis of {x : m x = 0}; zero columns when the kernel is trivial.
QMatrix kernel(const QMatrix& m);

/// True iff every column of `vectors` lies in the column span of `space`.
bool span_contains(const QMatrix& space, const QMatrix& vectors);

/// True iff the two column spans coincide.
bool same_span(const QMatrix& a, const QMatrix& b);

}  // namespace mtc
