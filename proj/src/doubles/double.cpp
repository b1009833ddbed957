#include "hopflab/doubles/double.hpp"

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void require_len(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
}

// w[(x * n + y) * n + m][c]: coefficient of e_c in S^{-1}(e_x) e_m e_y.
std::vector<Vector> conjugation_table(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Matrix& sinv = h.require_antipode_inverse();
  std::vector<Vector> w(n * n * n, Vector(h.field(), n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t m = 0; m < n; ++m) {
      Vector sm(h.field(), n);  // S^{-1}(e_x) e_m
      for (std::size_t u = 0; u < n; ++u) {
        if (sinv(x, u).is_zero()) continue;
        for (std::size_t v = 0; v < n; ++v)
          if (!h.mult(u, m, v).is_zero()) sm[v] += sinv(x, u) * h.mult(u, m, v);
      }
      for (std::size_t y = 0; y < n; ++y) {
        Vector& out = w[(x * n + y) * n + m];
        for (std::size_t v = 0; v < n; ++v) {
          if (sm[v].is_zero()) continue;
          for (std::size_t c = 0; c < n; ++c)
            if (!h.mult(v, y, c).is_zero()) out[c] += sm[v] * h.mult(v, y, c);
        }
      }
    }
  return w;
}

// Coefficient of e_c in S^{-1}(e_x) e_y.
Matrix sinv_times(const HopfAlgebra& h, std::size_t x, std::size_t y) {
  const std::size_t n = h.dim();
  Matrix out(h.field(), 1, n);
  const Matrix& sinv = h.require_antipode_inverse();
  for (std::size_t u = 0; u < n; ++u) {
    if (sinv(x, u).is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c)
      if (!h.mult(u, y, c).is_zero()) out(0, c) += sinv(x, u) * h.mult(u, y, c);
  }
  return out;
}

const HopfAlgebra& base_of(const HopfPtr& dh, const HopfAlgebra& h) {
  if (dh->dim() != h.dim() * h.dim() || !(dh->field() == h.field()))
    throw Error(ErrorCode::dimension_mismatch, "the supplied double does not match the algebra");
  return *dh;
}

CheckReport first_difference(const std::string& cond, const BilinearForm& a, const BilinearForm& b) {
  for (std::size_t i = 0; i < a.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < a.coeffs.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return CheckReport::fail(cond, {{i, j}, {a(i, j)}, {b(i, j)}, ""});
  return CheckReport::pass(cond);
}

CheckReport implication(const std::string& cond, bool premise, const CheckReport& conclusion) {
  if (!premise) return CheckReport::pass(cond).note("premise does not hold");
  if (conclusion.passed()) return CheckReport::pass(cond);
  CheckReport r = CheckReport::fail(cond, *conclusion.witness);
  r.note("extension fails: " + conclusion.condition);
  return r;
}

}  // namespace

Vector harpoon_left(const HopfAlgebra& h, const Vector& elem, const Vector& p) {
  const std::size_t n = h.dim();
  require_len(elem, n, "element");
  require_len(p, n, "dual element");
  Vector out(h.field(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      if (elem[j].is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m)
        if (!h.mult(k, j, m).is_zero()) out[k] += elem[j] * p[m] * h.mult(k, j, m);
    }
  return out;
}

Vector harpoon_right(const HopfAlgebra& h, const Vector& p, const Vector& elem) {
  const std::size_t n = h.dim();
  require_len(elem, n, "element");
  require_len(p, n, "dual element");
  Vector out(h.field(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      if (elem[j].is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m)
        if (!h.mult(j, k, m).is_zero()) out[k] += elem[j] * p[m] * h.mult(j, k, m);
    }
  return out;
}

HopfPtr drinfeld_double(const HopfPtr& hp) {
  const HopfAlgebra& h = *hp;
  const std::size_t n = h.dim();
  const std::size_t nn = n * n;
  const Field f = h.field();
  HopfPtr dual = dual_hopf(h, true);
  const auto w = conjugation_table(h);

  HopfTables t;
  t.field = f;
  t.dim = nn;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.labels.push_back(dual->labels()[i] + "⊗" + h.labels()[j]);

  // (d_a (x) e_b)(d_c (x) e_d) = sum d_a (b_1 -> d_c <- S^{-1}(b_3)) (x) b_2 e_d
  t.mult.assign(nn * nn * nn, Scalar::zero(f));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          Scalar* out = t.mult.data() + ((a * n + b) * nn + (c * n + d)) * nn;
          for (const auto& term : h.comult3(b)) {
            const auto [b1, b2, b3] = term.idx;
            for (std::size_t m = 0; m < n; ++m) {
              const Scalar& q = w[(b3 * n + b1) * n + m][c];
              if (q.is_zero()) continue;
              for (std::size_t tt = 0; tt < n; ++tt) {
                const Scalar& pm = dual->mult(a, m, tt);
                if (pm.is_zero()) continue;
                Scalar s = term.coeff * q * pm;
                for (std::size_t u = 0; u < n; ++u)
                  if (!h.mult(b2, d, u).is_zero()) out[tt * n + u] += s * h.mult(b2, d, u);
              }
            }
          }
        }

  t.unit = Vector(f, nn);
  t.counit = Vector(f, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.unit[i * n + j] = dual->unit()[i] * h.unit()[j];
      t.counit[i * n + j] = dual->counit()[i] * h.counit()[j];
    }
  t.comult.resize(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : dual->comult(i))
        for (const auto& y : h.comult(j))
          t.comult[i * n + j].push_back({{x.idx[0] * n + y.idx[0], x.idx[1] * n + y.idx[1]}, x.coeff * y.coeff});

  // S * id = unit counit, with S(e_A) = sum_K s[A * nn + K] e_K
  const auto mult_d = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return t.mult[(i * nn + j) * nn + k];
  };
  std::vector<exact::LinearSystem::Row> rows;
  std::vector<Scalar> rhs;
  for (std::size_t x = 0; x < nn; ++x)
    for (std::size_t m = 0; m < nn; ++m) {
      exact::LinearSystem::Row row;
      for (const auto& term : t.comult[x])
        for (std::size_t k = 0; k < nn; ++k) {
          const Scalar& c = mult_d(k, term.idx[1], m);
          if (!c.is_zero()) row.emplace_back(term.idx[0] * nn + k, term.coeff * c);
        }
      rows.push_back(std::move(row));
      rhs.push_back(t.counit[x] * t.unit[m]);
    }
  auto sol = exact::solve_sparse(f, nn * nn, rows, rhs);
  if (!sol) throw Error(ErrorCode::axiom_violation, "the antipode equations of D(H) have no solution");
  t.antipode = Matrix(f, nn, nn);
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t k = 0; k < nn; ++k) t.antipode(a, k) = (*sol)[a * nn + k];

  HopfPtr d = make_hopf(std::move(t));
  auto report = verify_hopf(*d);
  if (!report.passed()) throw Error(ErrorCode::axiom_violation, "D(H) fails: " + report.summary());
  return d;
}

BilinearForm extension_formula(const BilinearForm& sigma, const HopfPtr& dh) {
  const HopfAlgebra& h = *sigma.algebra;
  base_of(dh, h);
  const std::size_t n = h.dim();
  const Field f = h.field();
  Matrix out(f, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (h.unit()[a].is_zero()) continue;  // p(1)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& term : h.comult3(b)) {
        const auto [b1, b2, b3] = term.idx;
        Matrix q = sinv_times(h, b3, b1);
        for (std::size_t c = 0; c < n; ++c) {
          if (q(0, c).is_zero()) continue;
          Scalar s = h.unit()[a] * term.coeff * q(0, c);
          for (std::size_t d = 0; d < n; ++d)
            if (!sigma(b2, d).is_zero()) out(a * n + b, c * n + d) += s * sigma(b2, d);
        }
      }
  }
  return {dh, out};
}

CocycleExtension extend_cocycle_to_double(const BilinearForm& sigma, const HopfPtr& dh) {
  if (!is_normalized(sigma)) throw Error(ErrorCode::prereq_violated, "sigma is not normalized");
  if (auto r = is_lazy_cocycle_condition(sigma); !r.passed())
    throw Error(ErrorCode::prereq_violated, "sigma is not lazy: " + r.summary());
  if (auto r = is_left_2cocycle(sigma); !r.passed())
    throw Error(ErrorCode::prereq_violated, "sigma is not a left 2-cocycle: " + r.summary());
  auto inv = convolution_inverse(sigma);
  if (!inv) throw Error(ErrorCode::prereq_violated, "sigma has no convolution inverse");

  CocycleExtension e;
  e.sigma = extension_formula(sigma, dh);
  e.inverse = extension_formula(*inv, dh);
  const BilinearForm unit = trivial_bilinear(dh);
  e.inverse_check = first_difference("extension inverse (left)", convolve(e.sigma, e.inverse), unit);
  if (e.inverse_check.passed())
    e.inverse_check = first_difference("extension inverse", convolve(e.inverse, e.sigma), unit);
  e.cocycle_check = is_left_2cocycle(e.sigma);
  e.lazy_check = is_lazy_cocycle_condition(e.sigma);
  return e;
}

CocycleExtension extend_cocycle_to_double(const BilinearForm& sigma) {
  return extend_cocycle_to_double(sigma, drinfeld_double(sigma.algebra));
}

CheckReport extension_preserves_pure_neat(const BilinearForm& sigma, const HopfPtr& dh) {
  auto e = extend_cocycle_to_double(sigma, dh);
  const std::string cond = "extension preserves pure and neat";
  if (!e.inverse_check.passed()) return CheckReport::fail(cond, *e.inverse_check.witness).note("inverse formula");
  auto pure = implication(cond, is_pure(sigma).passed(), is_pure(e.sigma, e.inverse));
  if (!pure.passed()) return pure;
  auto neat = implication(cond, is_neat(sigma).passed(), is_neat(e.sigma));
  if (!neat.passed()) return neat;
  CheckReport r = CheckReport::pass(cond);
  for (const auto* part : {&pure, &neat})
    for (const auto& note : part->notes) r.note(note);
  return r;
}

CheckReport extension_preserves_pure_neat(const BilinearForm& sigma) {
  return extension_preserves_pure_neat(sigma, drinfeld_double(sigma.algebra));
}

ElementExtension extend_element_to_double(const LinearForm& gamma, const HopfPtr& dh) {
  const HopfAlgebra& h = *gamma.algebra;
  base_of(dh, h);
  if (!is_normalized(gamma)) throw Error(ErrorCode::prereq_violated, "gamma is not normalized");
  if (auto r = is_lazy_element(gamma); !r.passed()) throw Error(ErrorCode::prereq_violated, "gamma is not lazy: " + r.summary());
  if (!convolution_inverse(gamma)) throw Error(ErrorCode::prereq_violated, "gamma has no convolution inverse");
  const std::size_t n = h.dim();
  Vector v(h.field(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) v[a * n + b] = h.unit()[a] * gamma(b);
  ElementExtension e;
  e.gamma = LinearForm(dh, v);
  e.lazy_check = is_lazy_element(e.gamma);
  e.pure_check = implication("extension preserves pure elements", is_pure_element(gamma).passed(), is_pure_element(e.gamma));
  e.neat_check = implication("extension preserves neat elements", is_neat_element(gamma).passed(), is_neat_element(e.gamma));
  return e;
}

ElementExtension extend_element_to_double(const LinearForm& gamma) {
  return extend_element_to_double(gamma, drinfeld_double(gamma.algebra));
}

CheckReport coboundary_extension_probe(const LinearForm& gamma, const HopfPtr& dh) {
  auto g = extend_element_to_double(gamma, dh);
  auto bar = extension_formula(d1(gamma), dh);
  return first_difference("extension of D1(gamma) equals D1(gamma-bar)", bar, d1(g.gamma));
}

}  // namespace hopflab
