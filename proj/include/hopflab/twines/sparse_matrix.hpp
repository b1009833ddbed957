#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopflab/exact/matrix.hpp"

namespace hopflab {

using exact::Field;
using exact::Matrix;
using exact::Scalar;

/// Exact matrix stored by columns; each column is sorted by row and holds no
/// explicit zeros, so equality is structural.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrix() : field_(Field::rational()) {}
  SparseMatrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(Field f, std::size_t n);
  static SparseMatrix from_dense(const Matrix& m);
  Matrix to_dense() const;

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const;

  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  /// Sums repeated rows and drops zeros.
  void set_column(std::size_t c, std::vector<Entry> entries);
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  /// id_a (x) M (x) id_b.
  SparseMatrix embedded(std::size_t a, std::size_t b) const;
  bool is_identity() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  /// First (row, col) where the two differ, scanning columns in order.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const SparseMatrix& o) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Inverts each connected block of the row/column incidence graph densely.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

}  // namespace hopflab
