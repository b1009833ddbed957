#include "hopflab/core/forms.hpp"

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void same_algebra(const HopfPtr& a, const HopfPtr& b) {
  if (!a || !b) throw Error(ErrorCode::dimension_mismatch, "form without algebra");
  if (a != b && (a->dim() != b->dim() || !(a->field() == b->field())))
    throw Error(ErrorCode::field_mismatch, "forms live on different algebras");
}

}  // namespace

LinearForm::LinearForm(HopfPtr h, Vector c) : algebra(std::move(h)), coeffs(std::move(c)) {
  if (coeffs.size() != algebra->dim()) throw Error(ErrorCode::dimension_mismatch, "linear form length");
  if (!(coeffs.field() == algebra->field())) throw Error(ErrorCode::field_mismatch, "linear form field");
}

Scalar LinearForm::eval(const Vector& v) const {
  Scalar s = Scalar::zero(algebra->field());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s += v[i] * coeffs[i];
  return s;
}

BilinearForm::BilinearForm(HopfPtr h, Matrix c) : algebra(std::move(h)), coeffs(std::move(c)) {
  if (coeffs.rows() != algebra->dim() || coeffs.cols() != algebra->dim())
    throw Error(ErrorCode::dimension_mismatch, "bilinear form shape");
  if (!(coeffs.field() == algebra->field())) throw Error(ErrorCode::field_mismatch, "bilinear form field");
}

Scalar BilinearForm::eval(const Vector& a, const Vector& b) const {
  Scalar s = Scalar::zero(algebra->field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) s += a[i] * b[j] * coeffs(i, j);
  }
  return s;
}

LinearForm counit_form(const HopfPtr& h) { return {h, h->counit()}; }

BilinearForm trivial_bilinear(const HopfPtr& h) {
  const std::size_t n = h->dim();
  Matrix m(h->field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = h->counit()[i] * h->counit()[j];
  return {h, m};
}

bool is_normalized(const LinearForm& g) { return g.eval(g.algebra->unit()).is_one(); }

bool is_normalized(const BilinearForm& s) {
  const auto& h = *s.algebra;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vector e = h.basis(i);
    if (!(s.eval(h.unit(), e) == h.counit()[i]) || !(s.eval(e, h.unit()) == h.counit()[i])) return false;
  }
  return true;
}

LinearForm convolve(const LinearForm& a, const LinearForm& b) {
  same_algebra(a.algebra, b.algebra);
  const auto& h = *a.algebra;
  Vector out(h.field(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (const auto& t : h.comult(i)) out[i] += t.coeff * a(t.idx[0]) * b(t.idx[1]);
  return {a.algebra, out};
}

BilinearForm convolve(const BilinearForm& a, const BilinearForm& b) {
  same_algebra(a.algebra, b.algebra);
  const auto& h = *a.algebra;
  Matrix out(h.field(), h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) {
      Scalar s = Scalar::zero(h.field());
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          const Scalar& l = a(x.idx[0], y.idx[0]);
          if (l.is_zero()) continue;
          const Scalar& r = b(x.idx[1], y.idx[1]);
          if (!r.is_zero()) s += x.coeff * y.coeff * l * r;
        }
      out(i, j) = std::move(s);
    }
  return {a.algebra, out};
}

std::optional<LinearForm> convolution_inverse(const LinearForm& f) {
  const auto& h = *f.algebra;
  const std::size_t n = h.dim();
  // (f * g)(e_i) = sum_t c_t f(e_{t0}) g(e_{t1}) = eps(e_i)
  Matrix a(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comult(i)) a(i, t.idx[1]) += t.coeff * f(t.idx[0]);
  auto sol = exact::solve_linear(a, h.counit());
  if (!sol) return std::nullopt;
  LinearForm g{f.algebra, *sol};
  LinearForm e = counit_form(f.algebra);
  if (!(convolve(f, g) == e) || !(convolve(g, f) == e)) return std::nullopt;
  return g;
}

std::optional<BilinearForm> convolution_inverse(const BilinearForm& f) {
  const auto& h = *f.algebra;
  const std::size_t n = h.dim();
  std::vector<exact::LinearSystem::Row> rows(n * n);
  std::vector<Scalar> rhs(n * n, Scalar::zero(h.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      rhs[row] = h.counit()[i] * h.counit()[j];
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          const Scalar& l = f(x.idx[0], y.idx[0]);
          if (!l.is_zero()) rows[row].emplace_back(x.idx[1] * n + y.idx[1], x.coeff * y.coeff * l);
        }
    }
  auto sol = exact::solve_sparse(h.field(), n * n, rows, rhs);
  if (!sol) return std::nullopt;
  Matrix m(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*sol)[i * n + j];
  BilinearForm g{f.algebra, m};
  BilinearForm e = trivial_bilinear(f.algebra);
  if (!(convolve(f, g) == e) || !(convolve(g, f) == e)) return std::nullopt;
  return g;
}

LinearForm require_inverse(const LinearForm& f) {
  auto g = convolution_inverse(f);
  if (!g) throw Error(ErrorCode::not_invertible, "linear form has no convolution inverse");
  return *g;
}

BilinearForm require_inverse(const BilinearForm& f) {
  auto g = convolution_inverse(f);
  if (!g) throw Error(ErrorCode::not_invertible, "bilinear form has no convolution inverse");
  return *g;
}

bool canonical_less(const LinearForm& a, const LinearForm& b) {
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (canonical_less(a.coeffs[i], b.coeffs[i])) return true;
    if (canonical_less(b.coeffs[i], a.coeffs[i])) return false;
  }
  return false;
}

bool canonical_less(const BilinearForm& a, const BilinearForm& b) {
  const std::size_t n = a.coeffs.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (canonical_less(a(i, j), b(i, j))) return true;
      if (canonical_less(b(i, j), a(i, j))) return false;
    }
  return false;
}

}  // namespace hopflab
