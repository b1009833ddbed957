#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopflab/exact/scalar.hpp"

namespace hopflab::exact {

class Vector {
 public:
  Vector() : field_(Field::rational()) {}
  Vector(Field f, std::size_t n) : field_(f), entries_(n, Scalar::zero(f)) {}
  Vector(Field f, std::vector<Scalar> entries);

  static Vector unit(Field f, std::size_t n, std::size_t i);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  /// this += c * o
  void add_scaled(const Scalar& c, const Vector& o);
  Vector scaled(const Scalar& c) const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend bool operator==(const Vector& a, const Vector& b);

 private:
  Field field_;
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Scalar& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivots are chosen as the leftmost column with a
/// nonzero entry among the remaining rows, taking the topmost such row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
/// Basis of {x : a x = 0}, returned as the rows of a reduced echelon matrix
/// (leading entry 1, leading positions increasing).
std::vector<Vector> kernel_basis(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

/// Solution set {base + sum_i t_i directions[i]} of a linear system. The
/// parameter t_i is the value of coordinate free_columns[i], so parameters are
/// echelon coordinates of the solution.
struct AffineSpace {
  Vector base;
  std::vector<Vector> directions;
  std::vector<std::size_t> free_columns;

  std::size_t dimension() const noexcept { return directions.size(); }
  Vector point(std::span<const Scalar> params) const;
};

/// Accumulates sparse linear equations over a fixed number of unknowns and
/// keeps them in echelon form as they arrive.
class LinearSystem {
 public:
  LinearSystem(Field f, std::size_t unknowns);

  using Row = std::vector<std::pair<std::size_t, Scalar>>;

  Field field() const noexcept { return field_; }
  std::size_t unknowns() const noexcept { return unknowns_; }

  /// Adds sum_k row[k].second * x[row[k].first] = rhs. Duplicate indices are summed.
  void add(const Row& row, const Scalar& rhs);
  void add_dense(std::span<const Scalar> coeffs, const Scalar& rhs);

  bool consistent() const noexcept { return consistent_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  /// nullopt iff the system is inconsistent.
  std::optional<AffineSpace> solve() const;

 private:
  Field field_;
  std::size_t unknowns_;
  bool consistent_ = true;
  // pivot column -> normalized row (length unknowns_ + 1, last entry is rhs)
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> pivots_;
  std::vector<long> pivot_slot_;
  void insert(std::vector<Scalar> row);
};

/// Flat index of basis tensor e_i (x) e_j in a tensor product with right factor of dimension n.
std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t n_left, std::size_t n_right);
std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t flat, std::size_t n_left, std::size_t n_right);
std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t flat, std::size_t n);

}  // namespace hopflab::exact

namespace hopflab::exact {

/// Solves a sparse system by splitting it into independent blocks (connected
/// components of the unknown/equation incidence graph) and reducing each block
/// densely. Returns one solution, or nullopt if some block is inconsistent.
std::optional<Vector> solve_sparse(Field f, std::size_t unknowns, const std::vector<LinearSystem::Row>& rows,
                                   const std::vector<Scalar>& rhs);

}  // namespace hopflab::exact
