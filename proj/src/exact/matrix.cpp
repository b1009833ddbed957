#include "hopflab/exact/matrix.hpp"

#include <algorithm>
#include <string>

namespace hopflab::exact {

namespace {

void require_field(Field a, Field b) {
  if (!(a == b)) throw Error(ErrorCode::field_mismatch, a.tag() + " vs " + b.tag());
}

void require_dims(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::dimension_mismatch, what);
}

}  // namespace

Vector::Vector(Field f, std::vector<Scalar> entries) : field_(f), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_field(f, e.field());
}

Vector Vector::unit(Field f, std::size_t n, std::size_t i) {
  Vector v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& Vector::operator+=(const Vector& o) {
  require_field(field_, o.field_);
  require_dims(size() == o.size(), "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_field(field_, o.field_);
  require_dims(size() == o.size(), "vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

void Vector::add_scaled(const Scalar& c, const Vector& o) {
  require_dims(size() == o.size(), "vector sizes differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < size(); ++i)
    if (!o.entries_[i].is_zero()) entries_[i] += c * o.entries_[i];
}

Vector Vector::scaled(const Scalar& c) const {
  Vector out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

bool operator==(const Vector& a, const Vector& b) {
  if (!(a.field_ == b.field_) || a.size() != b.size()) return false;
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin());
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_dims(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      require_field(f, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require_dims(v.size() == rows_, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_field(field_, o.field_);
  require_dims(cols_ == o.rows_, "matrix product dimensions");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  require_field(field_, v.field());
  require_dims(cols_ == v.size(), "matrix-vector dimensions");
  Vector out(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& e : out.data_) e *= c;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return std::equal(a.data_.begin(), a.data_.end(), b.data_.begin());
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  const Field f = m.field();
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(lead_row, j));
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(lead_row, j).is_zero()) m(i, j) -= factor * m(lead_row, j);
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  (void)f;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  require_field(a.field(), b.field());
  require_dims(a.rows() == b.size(), "solve_linear: rhs length differs from row count");
  LinearSystem sys(a.field(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) sys.add_dense(a.row(r).entries(), b[r]);
  auto space = sys.solve();
  if (!space) return std::nullopt;
  return space->base;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  auto ech = row_reduce(a);
  const Field f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  Matrix raw(f, a.cols() - ech.rank(), a.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    raw(k, free) = Scalar::one(f);
    for (std::size_t r = 0; r < ech.rank(); ++r) raw(k, ech.pivot_columns[r]) = -ech.reduced(r, free);
    ++k;
  }
  auto normalized = row_reduce(raw);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < normalized.rank(); ++r) out.push_back(normalized.reduced.row(r));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require_dims(m.rows() == m.cols(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.rank() < n || ech.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  return out;
}

Scalar determinant(Matrix m) {
  require_dims(m.rows() == m.cols(), "determinant of a non-square matrix");
  const Field f = m.field();
  Scalar det = Scalar::one(f);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c).is_zero()) ++r;
    if (r == n) return Scalar::zero(f);
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(r, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

Vector AffineSpace::point(std::span<const Scalar> params) const {
  require_dims(params.size() == directions.size(), "parameter count");
  Vector v = base;
  for (std::size_t i = 0; i < params.size(); ++i) v.add_scaled(params[i], directions[i]);
  return v;
}

LinearSystem::LinearSystem(Field f, std::size_t unknowns)
    : field_(f), unknowns_(unknowns), pivot_slot_(unknowns, -1) {}

void LinearSystem::add(const Row& row, const Scalar& rhs) {
  std::vector<Scalar> dense(unknowns_ + 1, Scalar::zero(field_));
  for (const auto& [idx, c] : row) {
    if (idx >= unknowns_) throw Error(ErrorCode::out_of_range, "equation references unknown " + std::to_string(idx));
    dense[idx] += c;
  }
  dense[unknowns_] = rhs;
  insert(std::move(dense));
}

void LinearSystem::add_dense(std::span<const Scalar> coeffs, const Scalar& rhs) {
  require_dims(coeffs.size() == unknowns_, "equation length");
  std::vector<Scalar> dense(coeffs.begin(), coeffs.end());
  dense.push_back(rhs);
  insert(std::move(dense));
}

void LinearSystem::insert(std::vector<Scalar> row) {
  // Reduce against existing pivots in increasing column order; pivot rows
  // only have zeros left of their pivot, so one pass suffices.
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (row[c].is_zero()) continue;
    long slot = pivot_slot_[c];
    if (slot < 0) {
      Scalar inv = row[c].inverse();
      for (std::size_t j = c; j <= unknowns_; ++j) row[j] *= inv;
      pivot_slot_[c] = static_cast<long>(pivots_.size());
      pivots_.emplace_back(c, std::move(row));
      return;
    }
    const auto& prow = pivots_[static_cast<std::size_t>(slot)].second;
    Scalar factor = row[c];
    for (std::size_t j = c; j <= unknowns_; ++j)
      if (!prow[j].is_zero()) row[j] -= factor * prow[j];
  }
  if (!row[unknowns_].is_zero()) consistent_ = false;
}

std::optional<AffineSpace> LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  // Back-substitute to reduced form, processing pivots right to left.
  std::vector<std::vector<Scalar>> rows(unknowns_);
  std::vector<bool> has(unknowns_, false);
  for (const auto& [c, r] : pivots_) {
    rows[c] = r;
    has[c] = true;
  }
  for (std::size_t cc = unknowns_; cc-- > 0;) {
    if (!has[cc]) continue;
    for (std::size_t other = 0; other < cc; ++other) {
      if (!has[other] || rows[other][cc].is_zero()) continue;
      Scalar factor = rows[other][cc];
      for (std::size_t j = cc; j <= unknowns_; ++j)
        if (!rows[cc][j].is_zero()) rows[other][j] -= factor * rows[cc][j];
    }
  }
  AffineSpace space;
  space.base = Vector(field_, unknowns_);
  for (std::size_t c = 0; c < unknowns_; ++c)
    if (has[c]) space.base[c] = rows[c][unknowns_];
  for (std::size_t free = 0; free < unknowns_; ++free) {
    if (has[free]) continue;
    Vector dir(field_, unknowns_);
    dir[free] = Scalar::one(field_);
    for (std::size_t c = 0; c < unknowns_; ++c)
      if (has[c]) dir[c] = -rows[c][free];
    space.directions.push_back(std::move(dir));
    space.free_columns.push_back(free);
  }
  return space;
}

std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t n_left, std::size_t n_right) {
  if (i >= n_left || j >= n_right)
    throw Error(ErrorCode::out_of_range, "tensor_index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return i * n_right + j;
}

std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t n) { return tensor_index(i, j, n, n); }

std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t flat, std::size_t n_left, std::size_t n_right) {
  if (n_right == 0 || flat >= n_left * n_right)
    throw Error(ErrorCode::out_of_range, "tensor_unindex " + std::to_string(flat));
  return {flat / n_right, flat % n_right};
}

std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t flat, std::size_t n) {
  return tensor_unindex(flat, n, n);
}

}  // namespace hopflab::exact

namespace hopflab::exact {

std::optional<Vector> solve_sparse(Field f, std::size_t unknowns, const std::vector<LinearSystem::Row>& rows,
                                   const std::vector<Scalar>& rhs) {
  require_dims(rows.size() == rhs.size(), "right-hand side length");
  std::vector<std::size_t> parent(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : rows)
    for (const auto& [idx, c] : row) {
      if (idx >= unknowns) throw Error(ErrorCode::out_of_range, "equation references unknown " + std::to_string(idx));
      if (!c.is_zero()) parent[find(idx)] = find(row.front().first);
    }

  std::vector<std::vector<std::size_t>> members(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) members[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> eqs(unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::optional<std::size_t> root;
    for (const auto& [idx, c] : rows[r])
      if (!c.is_zero()) {
        root = find(idx);
        break;
      }
    if (!root) {
      if (!rhs[r].is_zero()) return std::nullopt;
      continue;
    }
    eqs[*root].push_back(r);
  }

  Vector out(f, unknowns);
  std::vector<std::size_t> local(unknowns);
  for (std::size_t root = 0; root < unknowns; ++root) {
    const auto& vars = members[root];
    if (vars.empty()) continue;
    for (std::size_t k = 0; k < vars.size(); ++k) local[vars[k]] = k;
    LinearSystem sys(f, vars.size());
    for (std::size_t r : eqs[root]) {
      LinearSystem::Row lr;
      for (const auto& [idx, c] : rows[r]) lr.emplace_back(local[idx], c);
      sys.add(lr, rhs[r]);
      if (!sys.consistent()) return std::nullopt;
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    for (std::size_t k = 0; k < vars.size(); ++k) out[vars[k]] = sol->base[k];
  }
  return out;
}

}  // namespace hopflab::exact
