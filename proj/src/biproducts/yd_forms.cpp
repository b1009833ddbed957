#include "hopflab/biproducts/yd_forms.hpp"

#include <algorithm>
#include <map>

#include "hopflab/cocycle/predicates.hpp"
#include "hopflab/error.hpp"
#include "hopflab/exact/enumerate.hpp"

namespace hopflab {

using exact::LinearSystem;
using exact::QuadraticEquation;

namespace {

// b_1 (x) b_2^(-1) (x) b_2^(0): the coproduct followed by the coaction on the
// second factor.
struct SplitTerm {
  std::size_t first;
  std::size_t h;
  std::size_t second;
  Scalar coeff;
};

std::vector<SplitTerm> split(const YDPair& p, std::size_t b) {
  std::vector<SplitTerm> out;
  for (const auto& t : p.comult(b))
    for (const auto& c : p.coaction(t.idx[1])) out.push_back({t.idx[0], c.idx[0], c.idx[1], t.coeff * c.coeff});
  return out;
}

std::vector<Term3> comult2(const YDPair& p, std::size_t b) {
  std::vector<Term3> out;
  for (const auto& t : p.comult(b))
    for (const auto& s : p.comult(t.idx[1])) out.push_back({{t.idx[0], s.idx[0], s.idx[1]}, t.coeff * s.coeff});
  return out;
}

Scalar eval_bi(const Matrix& s, const Vector& a, const Vector& b) {
  Scalar out = Scalar::zero(s.field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !s(i, j).is_zero()) out += a[i] * b[j] * s(i, j);
  }
  return out;
}

Scalar eval_lin(const Vector& g, const Vector& v) {
  Scalar out = Scalar::zero(g.field());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out += g[i] * v[i];
  return out;
}

std::optional<CheckReport> differ(const std::string& cond, std::vector<std::size_t> idx, const Vector& l,
                                  const Vector& r) {
  if (l == r) return std::nullopt;
  return CheckReport::fail(cond, {std::move(idx), {l.begin(), l.end()}, {r.begin(), r.end()}, ""});
}

std::optional<CheckReport> differ(const std::string& cond, std::vector<std::size_t> idx, const Scalar& l,
                                  const Scalar& r) {
  if (l == r) return std::nullopt;
  return CheckReport::fail(cond, {std::move(idx), {l}, {r}, ""});
}

void same_pair(const YDPairPtr& a, const YDPairPtr& b) {
  if (a != b) throw Error(ErrorCode::field_mismatch, "forms on different pairs");
}

const HopfAlgebra& check_biproduct(const YDPair& p, const HopfPtr& bh) {
  if (bh->dim() != p.dim() * p.host().dim() || !(bh->field() == p.field()))
    throw Error(ErrorCode::dimension_mismatch, "the supplied algebra is not B x H for this pair");
  return *bh;
}

// row coefficients of sigma(a, v) for a basis a and a vector v
void add_sigma(LinearSystem::Row& row, std::size_t a, const Vector& v, const Scalar& c, std::size_t m) {
  for (std::size_t j = 0; j < m; ++j)
    if (!v[j].is_zero()) row.emplace_back(a * m + j, c * v[j]);
}

}  // namespace

Scalar YDLinear::eval(const Vector& v) const { return eval_lin(coeffs, v); }
Scalar YDBilinear::eval(const Vector& a, const Vector& b) const { return eval_bi(coeffs, a, b); }

YDLinear yd_counit(const YDPairPtr& p) { return {p, p->counit()}; }

YDBilinear yd_trivial(const YDPairPtr& p) {
  const std::size_t m = p->dim();
  Matrix c(p->field(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = p->counit()[i] * p->counit()[j];
  return {p, c};
}

bool is_normalized(const YDLinear& g) { return g.eval(g.pair->unit()) == Scalar::one(g.pair->field()); }

bool is_normalized(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  for (std::size_t b = 0; b < p.dim(); ++b) {
    if (!(s.eval(p.unit(), p.basis(b)) == p.counit()[b])) return false;
    if (!(s.eval(p.basis(b), p.unit()) == p.counit()[b])) return false;
  }
  return true;
}

YDBilinear yd_convolution(const YDBilinear& a, const YDBilinear& b) {
  same_pair(a.pair, b.pair);
  const YDPair& p = *a.pair;
  const std::size_t m = p.dim();
  Matrix out(p.field(), m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (const auto& st : split(p, x))
        for (const auto& t : p.comult(y)) {
          const Scalar& r = b(st.second, t.idx[1]);
          if (r.is_zero()) continue;
          out(x, y) += st.coeff * t.coeff * a.eval(p.basis(st.first), p.act_basis(st.h, p.basis(t.idx[0]))) * r;
        }
  return {a.pair, out};
}

YDLinear yd_convolution(const YDLinear& a, const YDLinear& b) {
  same_pair(a.pair, b.pair);
  const YDPair& p = *a.pair;
  Vector out(p.field(), p.dim());
  for (std::size_t x = 0; x < p.dim(); ++x)
    for (const auto& t : p.comult(x)) out[x] += t.coeff * a(t.idx[0]) * b(t.idx[1]);
  return {a.pair, out};
}

std::optional<YDBilinear> yd_convolution_inverse(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const std::size_t m = p.dim();
  std::vector<LinearSystem::Row> rows(m * m);
  std::vector<Scalar> rhs(m * m, Scalar::zero(p.field()));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      rhs[x * m + y] = p.counit()[x] * p.counit()[y];
      for (const auto& st : split(p, x))
        for (const auto& t : p.comult(y)) {
          Scalar l = s.eval(p.basis(st.first), p.act_basis(st.h, p.basis(t.idx[0])));
          if (!l.is_zero()) rows[x * m + y].emplace_back(st.second * m + t.idx[1], st.coeff * t.coeff * l);
        }
    }
  auto sol = exact::solve_sparse(p.field(), m * m, rows, rhs);
  if (!sol) return std::nullopt;
  Matrix c(p.field(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = (*sol)[i * m + j];
  YDBilinear inv{s.pair, c};
  const YDBilinear e = yd_trivial(s.pair);
  if (!(yd_convolution(s, inv) == e) || !(yd_convolution(inv, s) == e)) return std::nullopt;
  return inv;
}

std::optional<YDLinear> yd_convolution_inverse(const YDLinear& g) {
  const YDPair& p = *g.pair;
  const std::size_t m = p.dim();
  Matrix a(p.field(), m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (const auto& t : p.comult(x)) a(x, t.idx[1]) += t.coeff * g(t.idx[0]);
  auto sol = exact::solve_linear(a, p.counit());
  if (!sol) return std::nullopt;
  YDLinear inv{g.pair, *sol};
  const YDLinear e = yd_counit(g.pair);
  if (!(yd_convolution(g, inv) == e) || !(yd_convolution(inv, g) == e)) return std::nullopt;
  return inv;
}

CheckReport is_yd_morphism(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const HopfAlgebra& h = p.host();
  const std::size_t m = p.dim();
  for (std::size_t hi = 0; hi < h.dim(); ++hi)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Scalar l = Scalar::zero(p.field());
        for (const auto& t : h.comult(hi))
          l += t.coeff * s.eval(p.act_basis(t.idx[0], p.basis(b)), p.act_basis(t.idx[1], p.basis(c)));
        if (auto r = differ("(b4)", {hi, b, c}, l, h.counit()[hi] * s(b, c))) return *r;
      }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      Vector l(p.field(), h.dim());
      for (const auto& x : p.coaction(b))
        for (const auto& y : p.coaction(c))
          l.add_scaled(x.coeff * y.coeff * s(x.idx[1], y.idx[1]), h.multiply(h.basis(x.idx[0]), h.basis(y.idx[0])));
      if (auto r = differ("(b5)", {b, c}, l, h.unit().scaled(s(b, c)))) return *r;
    }
  return CheckReport::pass("YD morphism");
}

CheckReport is_yd_morphism(const YDLinear& g) {
  const YDPair& p = *g.pair;
  const HopfAlgebra& h = p.host();
  for (std::size_t hi = 0; hi < h.dim(); ++hi)
    for (std::size_t b = 0; b < p.dim(); ++b)
      if (auto r = differ("(b8)", {hi, b}, g.eval(p.act_basis(hi, p.basis(b))), h.counit()[hi] * g(b))) return *r;
  for (std::size_t b = 0; b < p.dim(); ++b) {
    Vector l(p.field(), h.dim());
    for (const auto& x : p.coaction(b)) l[x.idx[0]] += x.coeff * g(x.idx[1]);
    if (auto r = differ("(b9)", {b}, l, h.unit().scaled(g(b)))) return *r;
  }
  return CheckReport::pass("YD morphism");
}

CheckReport is_yd_lazy(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const std::size_t m = p.dim();
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      Vector l(p.field(), m), r(p.field(), m);
      for (const auto& st : split(p, b))
        for (const auto& t : p.comult(c)) {
          Vector hc = p.act_basis(st.h, p.basis(t.idx[0]));
          Scalar k = st.coeff * t.coeff;
          l.add_scaled(k * s.eval(p.basis(st.first), hc), p.multiply(p.basis(st.second), p.basis(t.idx[1])));
          r.add_scaled(k * s(st.second, t.idx[1]), p.multiply(p.basis(st.first), hc));
        }
      if (auto rep = differ("(b6)", {b, c}, l, r)) return *rep;
    }
  return CheckReport::pass("YD lazy");
}

CheckReport is_yd_lazy(const YDLinear& g) {
  const YDPair& p = *g.pair;
  for (std::size_t b = 0; b < p.dim(); ++b) {
    Vector l(p.field(), p.dim()), r(p.field(), p.dim());
    for (const auto& t : p.comult(b)) {
      l[t.idx[1]] += t.coeff * g(t.idx[0]);
      r[t.idx[0]] += t.coeff * g(t.idx[1]);
    }
    if (auto rep = differ("YD lazy element", {b}, l, r)) return *rep;
  }
  return CheckReport::pass("YD lazy element");
}

CheckReport is_yd_left_2cocycle(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const std::size_t m = p.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Scalar l = Scalar::zero(p.field()), r = Scalar::zero(p.field());
        for (const auto& sa : split(p, a))
          for (const auto& tb : p.comult(b))
            l += sa.coeff * tb.coeff * s.eval(p.basis(sa.first), p.act_basis(sa.h, p.basis(tb.idx[0]))) *
                 s.eval(p.multiply(p.basis(sa.second), p.basis(tb.idx[1])), p.basis(c));
        for (const auto& sb : split(p, b))
          for (const auto& tc : p.comult(c))
            r += sb.coeff * tc.coeff * s.eval(p.basis(sb.first), p.act_basis(sb.h, p.basis(tc.idx[0]))) *
                 s.eval(p.basis(a), p.multiply(p.basis(sb.second), p.basis(tc.idx[1])));
        if (auto rep = differ("(b6.5)", {a, b, c}, l, r)) return *rep;
      }
  return CheckReport::pass("YD left 2-cocycle");
}

CheckReport is_yd_pure(const YDBilinear& s) {
  auto inv_opt = yd_convolution_inverse(s);
  if (!inv_opt) throw Error(ErrorCode::not_invertible, "sigma has no inverse in the YD convolution");
  const YDBilinear& inv = *inv_opt;
  const YDPair& p = *s.pair;
  const HopfAlgebra& h = p.host();
  const std::size_t m = p.dim();

  // b -> b_1, h1 = b_2^(-1), u = (b_2^(0))_1, h2 = (b_2^(0))_2^(-1), v = (b_2^(0))_2^(0),
  // then h3 (x) w is the coaction of v.
  struct BTerm {
    std::size_t b1, h1, u, h2, v;
    Scalar c;
  };
  struct CTerm {
    std::size_t c1, c2, c3;
    Scalar c;
  };
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<BTerm> bt;
    for (const auto& st : split(p, b))
      for (const auto& s2 : split(p, st.second)) bt.push_back({st.first, st.h, s2.first, s2.h, s2.second, st.coeff * s2.coeff});
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<CTerm> ct;
      for (const auto& t : comult2(p, c)) ct.push_back({t.idx[0], t.idx[1], t.idx[2], t.coeff});
      // both sides are sums of terms f(a) g(d)
      std::vector<std::vector<Scalar>> l(m, std::vector<Scalar>(m, Scalar::zero(p.field()))), r = l;
      auto accumulate = [&](std::vector<std::vector<Scalar>>& acc, const Scalar& k, const std::vector<Scalar>& fa,
                            const std::vector<Scalar>& gd) {
        for (std::size_t a = 0; a < m; ++a) {
          if (fa[a].is_zero()) continue;
          Scalar ka = k * fa[a];
          for (std::size_t d = 0; d < m; ++d)
            if (!gd[d].is_zero()) acc[a][d] += ka * gd[d];
        }
      };
      std::vector<Scalar> fa(m), gd(m);
      for (const auto& x : bt)
        for (const auto& y : ct) {
          Vector h1c1 = p.act_basis(x.h1, p.basis(y.c1));
          Scalar mid = inv.eval(p.basis(x.u), p.act_basis(x.h2, p.basis(y.c2)));
          if (mid.is_zero()) continue;
          Scalar k = x.c * y.c * mid;
          for (std::size_t i = 0; i < m; ++i) {
            fa[i] = s.eval(p.multiply(p.basis(i), p.basis(x.b1)), h1c1);
            gd[i] = s.eval(p.basis(x.v), p.multiply(p.basis(y.c3), p.basis(i)));
          }
          accumulate(l, k, fa, gd);
          for (const auto& w : p.coaction(x.v))
            for (const auto& z : p.coaction(y.c3)) {
              Vector hh = h.multiply(h.basis(w.idx[0]), h.basis(z.idx[0]));
              for (std::size_t i = 0; i < m; ++i) {
                fa[i] = s.eval(p.multiply(p.basis(i), p.basis(w.idx[1])), p.basis(z.idx[1]));
                gd[i] = s.eval(p.basis(x.b1), p.multiply(h1c1, p.act(hh, p.basis(i))));
              }
              accumulate(r, k * w.coeff * z.coeff, fa, gd);
            }
        }
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t d = 0; d < m; ++d)
          if (auto rep = differ("(pure4)", {a, b, c, d}, l[a][d], r[a][d])) return *rep;
    }
  }
  return CheckReport::pass("YD pure");
}

CheckReport is_yd_neat(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const std::size_t m = p.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Scalar l = Scalar::zero(p.field()), r = Scalar::zero(p.field());
        for (const auto& t : p.comult(b)) {
          l += t.coeff * s(a, t.idx[0]) * s(t.idx[1], c);
          for (const auto& x : p.coaction(a))
            r += t.coeff * x.coeff * s.eval(p.act_basis(x.idx[0], p.basis(t.idx[0])), p.basis(c)) * s(x.idx[1], t.idx[1]);
        }
        if (auto rep = differ("(verypure2)", {a, b, c}, l, r)) return *rep;
      }
  return CheckReport::pass("YD neat");
}

CheckReport is_yd_neat_element(const YDLinear& g) {
  const YDPair& p = *g.pair;
  const std::size_t m = p.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Scalar l = Scalar::zero(p.field()), r = Scalar::zero(p.field());
        for (const auto& t : p.comult(b))
          l += t.coeff * g.eval(p.multiply(p.basis(a), p.basis(t.idx[0]))) *
               g.eval(p.multiply(p.basis(t.idx[1]), p.basis(c)));
        for (const auto& st : split(p, b))
          r += st.coeff * g.eval(p.multiply(p.basis(st.first), p.act_basis(st.h, p.basis(c)))) *
               g.eval(p.multiply(p.basis(a), p.basis(st.second)));
        if (auto rep = differ("(verypure3)", {a, b, c}, l, r)) return *rep;
      }
  return CheckReport::pass("YD neat element");
}

CheckReport consmor_check(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const HopfAlgebra& h = p.host();
  const Matrix& sinv = h.require_antipode_inverse();
  for (std::size_t hi = 0; hi < h.dim(); ++hi)
    for (std::size_t a = 0; a < p.dim(); ++a)
      for (std::size_t b = 0; b < p.dim(); ++b) {
        Scalar l = s.eval(p.basis(a), p.act_basis(hi, p.basis(b)));
        Scalar r = s.eval(p.act(sinv.row(hi), p.basis(a)), p.basis(b));
        if (auto rep = differ("sigma(a, h.b) = sigma(S^-1(h).a, b)", {hi, a, b}, l, r)) return *rep;
      }
  return CheckReport::pass("sigma(a, h.b) = sigma(S^-1(h).a, b)");
}

YDBilinear yd_d1(const YDLinear& g) {
  auto inv = yd_convolution_inverse(g);
  if (!inv) throw Error(ErrorCode::not_invertible, "gamma has no convolution inverse");
  const YDPair& p = *g.pair;
  const std::size_t m = p.dim();
  Matrix out(p.field(), m, m);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c)
      for (const auto& st : split(p, b))
        for (const auto& t : p.comult(c))
          out(b, c) += st.coeff * t.coeff * g(st.first) * g.eval(p.act_basis(st.h, p.basis(t.idx[0]))) *
                       inv->eval(p.multiply(p.basis(st.second), p.basis(t.idx[1])));
  return {g.pair, out};
}

AlgebraTable yd_crossed_smash(const YDBilinear& s) {
  const YDPair& p = *s.pair;
  const HopfAlgebra& h = p.host();
  const std::size_t m = p.dim();
  const std::size_t n = h.dim();
  const Field f = p.field();
  // crossed product on B
  std::vector<Vector> cross(m * m, Vector(f, m));
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c)
      for (const auto& st : split(p, b))
        for (const auto& t : p.comult(c)) {
          Scalar k = st.coeff * t.coeff * s.eval(p.basis(st.first), p.act_basis(st.h, p.basis(t.idx[0])));
          if (!k.is_zero()) cross[b * m + c].add_scaled(k, p.multiply(p.basis(st.second), p.basis(t.idx[1])));
        }
  AlgebraTable out;
  out.field = f;
  out.dim = m * n;
  out.mult.assign(out.dim * out.dim * out.dim, Scalar::zero(f));
  out.unit = Vector(f, out.dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.unit[i * n + j] = p.unit()[i] * h.unit()[j];
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t l = 0; l < n; ++l)
          for (const auto& t : h.comult(j)) {
            Vector hc = p.act_basis(t.idx[0], p.basis(c));
            Vector bc(f, m);
            for (std::size_t k = 0; k < m; ++k)
              if (!hc[k].is_zero()) bc.add_scaled(hc[k], cross[b * m + k]);
            for (std::size_t v = 0; v < m; ++v) {
              if (bc[v].is_zero()) continue;
              for (std::size_t w = 0; w < n; ++w)
                if (!h.mult(t.idx[1], l, w).is_zero())
                  out.at(b * n + j, c * n + l, v * n + w) += t.coeff * bc[v] * h.mult(t.idx[1], l, w);
            }
          }
  if (auto r = verify_associative_unital(out); !r.passed())
    throw Error(ErrorCode::axiom_violation, "crossed product is not associative and unital: " + r.summary());
  return out;
}

BilinearForm biproduct_extension_formula(const YDBilinear& s, const HopfPtr& bh) {
  const YDPair& p = *s.pair;
  check_biproduct(p, bh);
  const HopfAlgebra& h = p.host();
  const std::size_t m = p.dim();
  const std::size_t n = h.dim();
  Matrix out(p.field(), m * n, m * n);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < m; ++c) {
        Scalar v = s.eval(p.basis(b), p.act_basis(j, p.basis(c)));
        if (v.is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) out(b * n + j, c * n + l) = v * h.counit()[l];
      }
  return {bh, out};
}

LinearForm biproduct_extension_formula(const YDLinear& g, const HopfPtr& bh) {
  const YDPair& p = *g.pair;
  check_biproduct(p, bh);
  const HopfAlgebra& h = p.host();
  Vector out(p.field(), p.dim() * h.dim());
  for (std::size_t b = 0; b < p.dim(); ++b)
    for (std::size_t j = 0; j < h.dim(); ++j) out[b * h.dim() + j] = g(b) * h.counit()[j];
  return {bh, out};
}

namespace {

CheckReport named(CheckReport r, const std::string& name) {
  if (!r.passed()) r.note("failed: " + r.condition);
  r.condition = name;
  return r;
}

CheckReport equal_forms(const std::string& cond, const BilinearForm& a, const BilinearForm& b) {
  for (std::size_t i = 0; i < a.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < a.coeffs.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return CheckReport::fail(cond, {{i, j}, {a(i, j)}, {b(i, j)}, ""});
  return CheckReport::pass(cond);
}

CheckReport equal_tables(const std::string& cond, const AlgebraTable& a, const AlgebraTable& b) {
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> l, r;
      bool same = true;
      for (std::size_t k = 0; k < n; ++k) {
        l.push_back(a.at(i, j, k));
        r.push_back(b.at(i, j, k));
        same = same && a.at(i, j, k) == b.at(i, j, k);
      }
      if (!same) return CheckReport::fail(cond, {{i, j}, l, r, ""});
    }
  return CheckReport::pass(cond);
}

// Any tau whose left-twisted product reproduces `table` equals sigma-bar.
CheckReport uniqueness(const BilinearForm& bar, const AlgebraTable& table) {
  const HopfAlgebra& h = *bar.algebra;
  const std::size_t n = h.dim();
  LinearSystem sys(h.field(), n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t k = 0; k < n; ++k) {
        LinearSystem::Row row;
        for (const auto& s : h.comult(x))
          for (const auto& t : h.comult(y)) {
            const Scalar& c = h.mult(s.idx[1], t.idx[1], k);
            if (!c.is_zero()) row.emplace_back(s.idx[0] * n + t.idx[0], s.coeff * t.coeff * c);
          }
        sys.add(row, table.at(x, y, k));
      }
  const std::string cond = "extension: unique";
  auto sol = sys.solve();
  if (!sol) return CheckReport::fail(cond, {{}, {}, {}, "no form reproduces the crossed product"});
  if (sol->dimension() != 0)
    return CheckReport::fail(cond, {{}, {Scalar::from_int(h.field(), static_cast<long long>(sol->dimension()))},
                                    {Scalar::zero(h.field())}, "solution space dimension"});
  Matrix m(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = sol->base[i * n + j];
  return equal_forms(cond, BilinearForm(bar.algebra, m), bar);
}

}  // namespace

bool BiproductCocycleExtension::all_passed() const {
  for (const auto& c : checks)
    if (c.failed()) return false;
  return true;
}

bool BiproductElementExtension::all_passed() const {
  for (const auto& c : checks)
    if (c.failed()) return false;
  return true;
}

BiproductCocycleExtension extend_to_biproduct(const YDBilinear& s, const HopfPtr& bh) {
  if (!is_normalized(s)) throw Error(ErrorCode::prereq_violated, "sigma is not normalized");
  if (auto r = is_yd_morphism(s); !r.passed())
    throw Error(ErrorCode::prereq_violated, "sigma is not a YD morphism: " + r.summary());
  BiproductCocycleExtension e;
  e.sigma = biproduct_extension_formula(s, bh);
  auto& out = e.checks;
  out.push_back(is_normalized(e.sigma) ? CheckReport::pass("extension: normalized")
                                       : CheckReport::fail("extension: normalized", {{}, {}, {}, ""}));
  if (is_yd_left_2cocycle(s).passed()) {
    out.push_back(named(is_left_2cocycle(e.sigma), "extension: left 2-cocycle"));
    AlgebraTable crossed = yd_crossed_smash(s);
    out.push_back(equal_tables("extension: crossed smash equals twisted algebra", crossed, twisted_table(e.sigma, Side::left)));
    out.push_back(uniqueness(e.sigma, crossed));
  } else {
    out.push_back(CheckReport::skipped("extension: left 2-cocycle", "sigma is not a YD left 2-cocycle"));
  }
  auto inv = yd_convolution_inverse(s);
  if (inv) {
    e.inverse = biproduct_extension_formula(*inv, bh);
    const BilinearForm unit = trivial_bilinear(bh);
    auto r = equal_forms("extension: inverse", convolve(e.sigma, *e.inverse), unit);
    if (r.passed()) r = equal_forms("extension: inverse", convolve(*e.inverse, e.sigma), unit);
    out.push_back(r);
  } else {
    out.push_back(CheckReport::skipped("extension: inverse", "sigma is not invertible in YD"));
  }
  if (is_yd_lazy(s).passed())
    out.push_back(named(is_lazy_cocycle_condition(e.sigma), "extension: lazy"));
  else
    out.push_back(CheckReport::skipped("extension: lazy", "sigma is not lazy in YD"));
  if (inv && is_yd_pure(s).passed())
    out.push_back(named(is_pure(e.sigma, e.inverse), "extension: pure"));
  else
    out.push_back(CheckReport::skipped("extension: pure", "sigma is not pure in YD"));
  if (is_yd_neat(s).passed())
    out.push_back(named(is_neat(e.sigma), "extension: neat"));
  else
    out.push_back(CheckReport::skipped("extension: neat", "sigma is not neat in YD"));
  return e;
}

BiproductElementExtension extend_to_biproduct(const YDLinear& g, const HopfPtr& bh) {
  if (!is_normalized(g)) throw Error(ErrorCode::prereq_violated, "gamma is not normalized");
  if (auto r = is_yd_morphism(g); !r.passed())
    throw Error(ErrorCode::prereq_violated, "gamma is not a YD morphism: " + r.summary());
  auto inv = yd_convolution_inverse(g);
  if (!inv) throw Error(ErrorCode::prereq_violated, "gamma is not convolution invertible");
  BiproductElementExtension e;
  e.gamma = biproduct_extension_formula(g, bh);
  auto& out = e.checks;
  auto bar_inv = convolution_inverse(e.gamma);
  out.push_back(is_normalized(e.gamma) && bar_inv
                    ? CheckReport::pass("extension: normalized and invertible")
                    : CheckReport::fail("extension: normalized and invertible", {{}, {}, {}, ""}));
  if (bar_inv) out.push_back(equal_forms("extension: D1 commutes with extension", biproduct_extension_formula(yd_d1(g), bh), d1(e.gamma)));
  if (is_yd_lazy(g).passed())
    out.push_back(named(is_lazy_element(e.gamma), "extension: lazy"));
  else
    out.push_back(CheckReport::skipped("extension: lazy", "gamma is not lazy"));
  if (is_yd_neat_element(g).passed())
    out.push_back(named(is_neat_element(e.gamma), "extension: neat element"));
  else
    out.push_back(CheckReport::skipped("extension: neat element", "gamma is not neat in YD"));
  return e;
}

std::vector<YDBilinear> enumerate_yd_lazy_cocycles(const YDPairPtr& pp, const EnumerationOptions& opt) {
  const YDPair& p = *pp;
  const HopfAlgebra& h = p.host();
  const std::size_t m = p.dim();
  const Field f = p.field();
  const Scalar zero = Scalar::zero(f);
  LinearSystem sys(f, m * m);
  for (std::size_t k = 0; k < m; ++k) {
    LinearSystem::Row l, r;
    for (std::size_t i = 0; i < m; ++i)
      if (!p.unit()[i].is_zero()) {
        l.emplace_back(i * m + k, p.unit()[i]);
        r.emplace_back(k * m + i, p.unit()[i]);
      }
    sys.add(l, p.counit()[k]);
    sys.add(r, p.counit()[k]);
  }
  for (std::size_t hi = 0; hi < h.dim(); ++hi)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        LinearSystem::Row row;
        for (const auto& t : h.comult(hi)) {
          Vector x = p.act_basis(t.idx[0], p.basis(b));
          Vector y = p.act_basis(t.idx[1], p.basis(c));
          for (std::size_t i = 0; i < m; ++i)
            if (!x[i].is_zero()) add_sigma(row, i, y, t.coeff * x[i], m);
        }
        row.emplace_back(b * m + c, -h.counit()[hi]);
        sys.add(row, zero);
      }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<LinearSystem::Row> rows(h.dim());
      for (const auto& x : p.coaction(b))
        for (const auto& y : p.coaction(c)) {
          Vector hh = h.multiply(h.basis(x.idx[0]), h.basis(y.idx[0]));
          for (std::size_t k = 0; k < h.dim(); ++k)
            if (!hh[k].is_zero()) rows[k].emplace_back(x.idx[1] * m + y.idx[1], x.coeff * y.coeff * hh[k]);
        }
      for (std::size_t k = 0; k < h.dim(); ++k) {
        rows[k].emplace_back(b * m + c, -h.unit()[k]);
        sys.add(rows[k], zero);
      }
    }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<LinearSystem::Row> rows(m);
      for (const auto& st : split(p, b))
        for (const auto& t : p.comult(c)) {
          Vector hc = p.act_basis(st.h, p.basis(t.idx[0]));
          Vector lv = p.multiply(p.basis(st.second), p.basis(t.idx[1]));
          Vector rv = p.multiply(p.basis(st.first), hc);
          Scalar k = st.coeff * t.coeff;
          for (std::size_t o = 0; o < m; ++o) {
            if (!lv[o].is_zero()) add_sigma(rows[o], st.first, hc, k * lv[o], m);
            if (!rv[o].is_zero()) rows[o].emplace_back(st.second * m + t.idx[1], -(k * rv[o]));
          }
        }
      for (auto& row : rows)
        if (!row.empty()) sys.add(row, zero);
    }

  // braided cocycle identity, quadratic in the entries
  std::vector<QuadraticEquation> quad;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
        auto add = [&](std::size_t u, std::size_t v, const Scalar& w) {
          auto key = std::minmax(u, v);
          auto [it, ins] = acc.try_emplace({key.first, key.second}, w);
          if (!ins) it->second += w;
        };
        for (const auto& sa : split(p, a))
          for (const auto& tb : p.comult(b)) {
            Vector x = p.act_basis(sa.h, p.basis(tb.idx[0]));
            Vector y = p.multiply(p.basis(sa.second), p.basis(tb.idx[1]));
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t j = 0; j < m; ++j)
                if (!x[i].is_zero() && !y[j].is_zero()) add(sa.first * m + i, j * m + c, sa.coeff * tb.coeff * x[i] * y[j]);
          }
        for (const auto& sb : split(p, b))
          for (const auto& tc : p.comult(c)) {
            Vector x = p.act_basis(sb.h, p.basis(tc.idx[0]));
            Vector y = p.multiply(p.basis(sb.second), p.basis(tc.idx[1]));
            for (std::size_t i = 0; i < m; ++i)
              for (std::size_t j = 0; j < m; ++j)
                if (!x[i].is_zero() && !y[j].is_zero()) add(sb.first * m + i, a * m + j, -(sb.coeff * tc.coeff * x[i] * y[j]));
          }
        QuadraticEquation eq{{}, {}, zero};
        for (auto& [k, w] : acc)
          if (!w.is_zero()) eq.products.emplace_back(k.first, k.second, w);
        if (!eq.products.empty()) quad.push_back(std::move(eq));
      }

  auto res = exact::enumerate_points(sys, quad, {}, opt.max_affine_dim);
  std::vector<YDBilinear> out;
  for (const auto& v : res.points) {
    Matrix c(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) c(i, j) = v[i * m + j];
    YDBilinear s{pp, c};
    if (yd_convolution_inverse(s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<YDLinear> enumerate_yd_lazy_elements(const YDPairPtr& pp, const EnumerationOptions& opt) {
  const YDPair& p = *pp;
  const HopfAlgebra& h = p.host();
  const std::size_t m = p.dim();
  const Field f = p.field();
  const Scalar zero = Scalar::zero(f);
  LinearSystem sys(f, m);
  LinearSystem::Row unit;
  for (std::size_t i = 0; i < m; ++i)
    if (!p.unit()[i].is_zero()) unit.emplace_back(i, p.unit()[i]);
  sys.add(unit, Scalar::one(f));
  for (std::size_t hi = 0; hi < h.dim(); ++hi)
    for (std::size_t b = 0; b < m; ++b) {
      LinearSystem::Row row;
      Vector x = p.act_basis(hi, p.basis(b));
      for (std::size_t i = 0; i < m; ++i)
        if (!x[i].is_zero()) row.emplace_back(i, x[i]);
      row.emplace_back(b, -h.counit()[hi]);
      sys.add(row, zero);
    }
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<LinearSystem::Row> rows(h.dim());
    for (const auto& x : p.coaction(b)) rows[x.idx[0]].emplace_back(x.idx[1], x.coeff);
    for (std::size_t k = 0; k < h.dim(); ++k) {
      rows[k].emplace_back(b, -h.unit()[k]);
      sys.add(rows[k], zero);
    }
    std::vector<LinearSystem::Row> lazy(m);
    for (const auto& t : p.comult(b)) {
      lazy[t.idx[1]].emplace_back(t.idx[0], t.coeff);
      lazy[t.idx[0]].emplace_back(t.idx[1], -t.coeff);
    }
    for (auto& row : lazy)
      if (!row.empty()) sys.add(row, zero);
  }
  auto res = exact::enumerate_points(sys, {}, {}, opt.max_affine_dim);
  std::vector<YDLinear> out;
  for (const auto& v : res.points) {
    YDLinear g{pp, v};
    if (yd_convolution_inverse(g)) out.push_back(std::move(g));
  }
  return out;
}

std::string form_key(const YDBilinear& s) {
  std::string k;
  for (std::size_t i = 0; i < s.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < s.coeffs.cols(); ++j) k += s(i, j).to_string() + ",";
  return k;
}

}  // namespace hopflab
