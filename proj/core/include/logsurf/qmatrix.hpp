#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "logsurf/rational.hpp"

namespace logsurf {

/// Dense row-major matrix of rationals. Sizes in this project stay small
/// (tens of rows), so no attempt is made at sparsity.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(std::span<const QVector> columns, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;

  bool is_symmetric() const;
  QMatrix transpose() const;
  QMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  QMatrix principal_submatrix(std::span<const std::size_t> idx) const { return submatrix(idx, idx); }

  QVector operator*(const QVector& v) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator-() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace logsurf
