#include "hopflab/twines/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "hopflab/error.hpp"

namespace hopflab {

SparseMatrix SparseMatrix::identity(Field f, std::size_t n) {
  SparseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Scalar::one(f)});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
  SparseMatrix m(d.field(), d.rows(), d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c)
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (!d(r, c).is_zero()) m.columns_[c].push_back({r, d(r, c)});
  return m;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) d(e.row, c) = e.value;
  return d;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
  if (c >= cols_) throw Error(ErrorCode::out_of_range, "column index");
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::vector<Entry> out;
  for (auto& e : entries) {
    if (e.row >= rows_) throw Error(ErrorCode::out_of_range, "row index");
    if (!out.empty() && out.back().row == e.row)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
  }
  std::erase_if(out, [](const Entry& e) { return e.value.is_zero(); });
  columns_[c] = std::move(out);
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
  return it != col.end() && it->row == r ? it->value : Scalar::zero(field_);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::dimension_mismatch, "sparse product");
  if (!(field_ == o.field_)) throw Error(ErrorCode::field_mismatch, "sparse product");
  SparseMatrix out(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    // residues fit in 31 bits, so products fit in 62
    const std::uint64_t p = field_.modulus();
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> lhs(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& e : columns_[c]) lhs[c].emplace_back(e.row, static_cast<std::uint64_t>(e.value.residue()));
    std::vector<std::uint64_t> acc(rows_, 0);
    std::vector<char> used(rows_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < o.cols_; ++j) {
      touched.clear();
      for (const auto& b : o.columns_[j]) {
        const auto bv = static_cast<std::uint64_t>(b.value.residue());
        for (const auto& [row, av] : lhs[b.row]) {
          if (!used[row]) {
            used[row] = 1;
            touched.push_back(row);
            acc[row] = av * bv % p;
          } else {
            acc[row] = (acc[row] + av * bv) % p;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& col = out.columns_[j];
      for (auto r : touched) {
        used[r] = 0;
        if (acc[r] != 0) col.push_back({r, Scalar::from_int(field_, static_cast<long long>(acc[r]))});
      }
    }
    return out;
  }
  std::vector<Scalar> acc(rows_, Scalar::zero(field_));
  std::vector<char> used(rows_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t j = 0; j < o.cols_; ++j) {
    touched.clear();
    for (const auto& b : o.columns_[j])
      for (const auto& a : columns_[b.row]) {
        if (!used[a.row]) {
          used[a.row] = 1;
          touched.push_back(a.row);
          acc[a.row] = a.value * b.value;
        } else {
          acc[a.row] += a.value * b.value;
        }
      }
    std::sort(touched.begin(), touched.end());
    auto& col = out.columns_[j];
    for (auto r : touched) {
      used[r] = 0;
      if (!acc[r].is_zero()) col.push_back({r, acc[r]});
    }
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix out(field_, rows_, cols_);
  if (c.is_zero()) return out;
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) out.columns_[j].push_back({e.row, e.value * c});
  return out;
}

SparseMatrix SparseMatrix::embedded(std::size_t a, std::size_t b) const {
  if (a == 1 && b == 1) return *this;
  SparseMatrix out(field_, a * rows_ * b, a * cols_ * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t k = 0; k < b; ++k) {
        auto& col = out.columns_[(i * cols_ + j) * b + k];
        col.reserve(columns_[j].size());
        for (const auto& e : columns_[j]) col.push_back({(i * rows_ + e.row) * b + k, e.value});
      }
  return out;
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t j = 0; j < cols_; ++j)
    if (columns_[j].size() != 1 || columns_[j][0].row != j || !columns_[j][0].value.is_one()) return false;
  return true;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

std::optional<std::pair<std::size_t, std::size_t>> SparseMatrix::first_difference(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::dimension_mismatch, "comparing matrices of different shape");
  for (std::size_t j = 0; j < cols_; ++j) {
    const auto& x = columns_[j];
    const auto& y = o.columns_[j];
    if (x == y) continue;
    std::size_t i = 0;
    while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
    std::size_t r = rows_;
    if (i < x.size()) r = x[i].row;
    if (i < y.size()) r = std::min(r, y[i].row);
    return std::make_pair(r, j);
  }
  return std::nullopt;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<SparseMatrix::Entry> col;
      for (const auto& x : a.column(i))
        for (const auto& y : b.column(j)) col.push_back({x.row * b.rows() + y.row, x.value * y.value});
      out.set_column(i * b.cols() + j, std::move(col));
    }
  return out;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  // nodes 0..n-1 are rows, n..2n-1 columns
  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& e : m.column(c)) parent[find(e.row)] = find(n + c);
  std::vector<std::vector<std::size_t>> rows_of(2 * n), cols_of(2 * n);
  for (std::size_t r = 0; r < n; ++r) rows_of[find(r)].push_back(r);
  for (std::size_t c = 0; c < n; ++c) cols_of[find(n + c)].push_back(c);
  SparseMatrix out(m.field(), n, n);
  for (std::size_t root = 0; root < 2 * n; ++root) {
    const auto& rs = rows_of[root];
    const auto& cs = cols_of[root];
    if (rs.empty() && cs.empty()) continue;
    if (rs.size() != cs.size()) return std::nullopt;
    const std::size_t k = rs.size();
    Matrix block(m.field(), k, k);
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& e : m.column(cs[j])) {
        auto i = static_cast<std::size_t>(std::lower_bound(rs.begin(), rs.end(), e.row) - rs.begin());
        block(i, j) = e.value;
      }
    auto inv = exact::inverse(block);
    if (!inv) return std::nullopt;
    // the inverse maps rows of the block back onto its columns
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<SparseMatrix::Entry> col;
      for (std::size_t i = 0; i < k; ++i)
        if (!(*inv)(i, j).is_zero()) col.push_back({cs[i], (*inv)(i, j)});
      out.set_column(rs[j], std::move(col));
    }
  }
  return out;
}

}  // namespace hopflab
