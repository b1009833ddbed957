#include "hopflab/cocycle/predicates.hpp"

#include <map>

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

using Table = std::vector<Scalar>;

Table zeros(Field f, std::size_t size) { return Table(size, Scalar::zero(f)); }

// sigma(e_x e_y, e_z) at [(x * n + y) * n + z]
Table product_left(const BilinearForm& s) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  Table out = zeros(h.field(), n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto p = h.product(x, y);
      for (std::size_t m = 0; m < n; ++m) {
        if (p[m].is_zero()) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (!s(m, z).is_zero()) out[(x * n + y) * n + z] += p[m] * s(m, z);
      }
    }
  return out;
}

// sigma(e_x, e_y e_z) at [(x * n + y) * n + z]
Table product_right(const BilinearForm& s) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  Table out = zeros(h.field(), n * n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) {
      auto p = h.product(y, z);
      for (std::size_t m = 0; m < n; ++m) {
        if (p[m].is_zero()) continue;
        for (std::size_t x = 0; x < n; ++x)
          if (!s(x, m).is_zero()) out[(x * n + y) * n + z] += p[m] * s(x, m);
      }
    }
  return out;
}

// gamma(e_x e_y)
Table product2(const LinearForm& g) {
  const auto& h = *g.algebra;
  const std::size_t n = h.dim();
  Table out = zeros(h.field(), n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto p = h.product(x, y);
      for (std::size_t m = 0; m < n; ++m)
        if (!p[m].is_zero()) out[x * n + y] += p[m] * g(m);
    }
  return out;
}

// gamma(e_x e_y e_z) from the two-fold table
Table product3(const HopfAlgebra& h, const Table& g2) {
  const std::size_t n = h.dim();
  Table out = zeros(h.field(), n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto p = h.product(x, y);
      for (std::size_t m = 0; m < n; ++m) {
        if (p[m].is_zero()) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (!g2[m * n + z].is_zero()) out[(x * n + y) * n + z] += p[m] * g2[m * n + z];
      }
    }
  return out;
}

std::optional<std::size_t> first_difference(const Table& a, const Table& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return k;
  return std::nullopt;
}

std::vector<std::size_t> unflatten(std::size_t flat, std::size_t n, std::size_t r) {
  std::vector<std::size_t> idx(r);
  for (std::size_t k = r; k-- > 0;) {
    idx[k] = flat % n;
    flat /= n;
  }
  return idx;
}

CheckReport compare_scalar_tables(const Table& l, const Table& r, std::size_t n, std::size_t arity, std::string cond) {
  if (auto d = first_difference(l, r))
    return CheckReport::fail(std::move(cond), {unflatten(*d, n, arity), {l[*d]}, {r[*d]}, ""});
  return CheckReport::pass(std::move(cond));
}

void axpy(Table& acc, const Scalar& c, std::span<const Scalar> v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) acc[k] += c * v[k];
}

}  // namespace

CheckReport is_left_2cocycle(const BilinearForm& s) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  const Table p = product_left(s), q = product_right(s);
  Table l = zeros(h.field(), n * n * n), r = l;
  // sigma(a_1, b_1) sigma(a_2 b_2, c)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& x : h.comult(a))
        for (const auto& y : h.comult(b)) {
          Scalar w = x.coeff * y.coeff * s(x.idx[0], y.idx[0]);
          if (w.is_zero()) continue;
          for (std::size_t c = 0; c < n; ++c) {
            const Scalar& v = p[(x.idx[1] * n + y.idx[1]) * n + c];
            if (!v.is_zero()) l[(a * n + b) * n + c] += w * v;
          }
        }
  // sigma(b_1, c_1) sigma(a, b_2 c_2)
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& y : h.comult(b))
        for (const auto& z : h.comult(c)) {
          Scalar w = y.coeff * z.coeff * s(y.idx[0], z.idx[0]);
          if (w.is_zero()) continue;
          for (std::size_t a = 0; a < n; ++a) {
            const Scalar& v = q[(a * n + y.idx[1]) * n + z.idx[1]];
            if (!v.is_zero()) r[(a * n + b) * n + c] += w * v;
          }
        }
  return compare_scalar_tables(l, r, n, 3, "left 2-cocycle");
}

CheckReport is_right_2cocycle(const BilinearForm& s) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  const Table p = product_left(s), q = product_right(s);
  Table l = zeros(h.field(), n * n * n), r = l;
  // sigma(a_1 b_1, c) sigma(a_2, b_2)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& x : h.comult(a))
        for (const auto& y : h.comult(b)) {
          Scalar w = x.coeff * y.coeff * s(x.idx[1], y.idx[1]);
          if (w.is_zero()) continue;
          for (std::size_t c = 0; c < n; ++c) {
            const Scalar& v = p[(x.idx[0] * n + y.idx[0]) * n + c];
            if (!v.is_zero()) l[(a * n + b) * n + c] += w * v;
          }
        }
  // sigma(a, b_1 c_1) sigma(b_2, c_2)
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& y : h.comult(b))
        for (const auto& z : h.comult(c)) {
          Scalar w = y.coeff * z.coeff * s(y.idx[1], z.idx[1]);
          if (w.is_zero()) continue;
          for (std::size_t a = 0; a < n; ++a) {
            const Scalar& v = q[(a * n + y.idx[0]) * n + z.idx[0]];
            if (!v.is_zero()) r[(a * n + b) * n + c] += w * v;
          }
        }
  return compare_scalar_tables(l, r, n, 3, "right 2-cocycle");
}

CheckReport is_lazy_element(const LinearForm& g) {
  const auto& h = *g.algebra;
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Table l = zeros(h.field(), n), r = l;
    for (const auto& t : h.comult(i)) {
      l[t.idx[1]] += t.coeff * g(t.idx[0]);
      r[t.idx[0]] += t.coeff * g(t.idx[1]);
    }
    if (l != r) return CheckReport::fail("lazy element", {{i}, l, r, "gamma(h_1) h_2 vs h_1 gamma(h_2)"});
  }
  return CheckReport::pass("lazy element");
}

CheckReport is_lazy_cocycle_condition(const BilinearForm& s) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Table l = zeros(h.field(), n), r = l;
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          Scalar c = x.coeff * y.coeff;
          const Scalar& sl = s(x.idx[0], y.idx[0]);
          if (!sl.is_zero()) axpy(l, c * sl, h.product(x.idx[1], y.idx[1]));
          const Scalar& sr = s(x.idx[1], y.idx[1]);
          if (!sr.is_zero()) axpy(r, c * sr, h.product(x.idx[0], y.idx[0]));
        }
      if (l != r)
        return CheckReport::fail("lazy cocycle", {{i, j}, l, r, "sigma(h_1,h'_1) h_2 h'_2 vs h_1 h'_1 sigma(h_2,h'_2)"});
    }
  return CheckReport::pass("lazy cocycle");
}

CheckReport is_pure(const BilinearForm& s, const std::optional<BilinearForm>& given_inverse) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  const Field f = h.field();
  const BilinearForm inv = given_inverse ? *given_inverse : require_inverse(s);
  const Table p = product_left(s), q = product_right(s);
  // p[(a * n + x) * n + y] = sigma(a x, y); q[(x * n + y) * n + d] = sigma(x, y d)
  // Regroup so that the a- and d-dependence are contiguous.
  Table pa = zeros(f, n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) pa[(x * n + y) * n + a] = p[(a * n + x) * n + y];
  const Table& qd = q;
  auto col = [&](const Table& t, std::size_t x, std::size_t y) {
    return std::span<const Scalar>(t).subspan((x * n + y) * n, n);
  };
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      std::map<std::array<std::size_t, 4>, Scalar> terms;
      for (const auto& tb : h.comult3(b))
        for (const auto& tc : h.comult3(c)) {
          const Scalar& mid = inv(tb.idx[1], tc.idx[1]);
          if (mid.is_zero()) continue;
          Scalar w = tb.coeff * tc.coeff * mid;
          auto [it, ins] = terms.try_emplace({tb.idx[0], tc.idx[0], tb.idx[2], tc.idx[2]}, w);
          if (!ins) it->second += w;
        }
      Table l = zeros(f, n * n), r = l;
      for (const auto& [k, w] : terms) {
        if (w.is_zero()) continue;
        // lhs: sigma(a b_1, c_1) ... sigma(b_3, c_3 d)
        auto la = col(pa, k[0], k[1]);
        auto ld = col(qd, k[2], k[3]);
        // rhs: sigma(b_1, c_1 d) ... sigma(a b_3, c_3)
        auto ra = col(pa, k[2], k[3]);
        auto rd = col(qd, k[0], k[1]);
        for (std::size_t a = 0; a < n; ++a) {
          if (!la[a].is_zero()) {
            Scalar wa = w * la[a];
            for (std::size_t d = 0; d < n; ++d)
              if (!ld[d].is_zero()) l[a * n + d] += wa * ld[d];
          }
          if (!ra[a].is_zero()) {
            Scalar wa = w * ra[a];
            for (std::size_t d = 0; d < n; ++d)
              if (!rd[d].is_zero()) r[a * n + d] += wa * rd[d];
          }
        }
      }
      if (auto d = first_difference(l, r))
        return CheckReport::fail("pure", {{*d / n, b, c, *d % n}, {l[*d]}, {r[*d]}, "(a,b,c,d)"});
    }
  return CheckReport::pass("pure");
}

CheckReport is_neat(const BilinearForm& s) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  for (std::size_t b = 0; b < n; ++b) {
    Table l = zeros(h.field(), n * n), r = l;
    for (const auto& t : h.comult(b))
      for (std::size_t a = 0; a < n; ++a) {
        const Scalar& x = s(a, t.idx[0]);
        const Scalar& y = s(a, t.idx[1]);
        for (std::size_t c = 0; c < n; ++c) {
          if (!x.is_zero()) l[a * n + c] += t.coeff * x * s(t.idx[1], c);
          if (!y.is_zero()) r[a * n + c] += t.coeff * s(t.idx[0], c) * y;
        }
      }
    if (auto d = first_difference(l, r))
      return CheckReport::fail("neat", {{*d / n, b, *d % n}, {l[*d]}, {r[*d]}, "(a,b,c)"});
  }
  return CheckReport::pass("neat");
}

CheckReport is_pure_element(const LinearForm& g) {
  const auto& h = *g.algebra;
  const std::size_t n = h.dim();
  const Field f = h.field();
  const LinearForm gi = require_inverse(g);
  const Table g2 = product2(g), gi2 = product2(gi);
  const Table gi3 = product3(h, gi2);
  auto G = [&](std::size_t x, std::size_t y) -> const Scalar& { return g2[x * n + y]; };
  auto I3 = [&](std::size_t x, std::size_t y, std::size_t z) -> const Scalar& { return gi3[(x * n + y) * n + z]; };
  const std::size_t n3 = n * n * n;
  // tables with the a- (or d-) index innermost
  Table x = zeros(f, n3 * n), y = x, x2 = x, y2 = x;
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& t : h.comult(a))
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            // X(a; b1, b2, c1) = gamma(a_1 b1) gamma^{-1}(a_2 b2 c1)
            const Scalar& u = G(t.idx[0], i);
            if (!u.is_zero()) x[((i * n + j) * n + k) * n + a] += t.coeff * u * I3(t.idx[1], j, k);
            // X'(a; b3, c4, b4) = gamma^{-1}(a_1 b3 c4) gamma(a_2 b4)
            const Scalar& v = G(t.idx[1], k);
            if (!v.is_zero()) x2[((i * n + j) * n + k) * n + a] += t.coeff * I3(t.idx[0], i, j) * v;
            // Y(d; b4, c3, c4) = gamma^{-1}(b4 c3 d_1) gamma(c4 d_2)
            const Scalar& w = G(k, t.idx[1]);
            if (!w.is_zero()) y[((i * n + j) * n + k) * n + a] += t.coeff * I3(i, j, t.idx[0]) * w;
            // Y'(d; c1, b1, c2) = gamma(c1 d_1) gamma^{-1}(b1 c2 d_2)
            const Scalar& z = G(i, t.idx[0]);
            if (!z.is_zero()) y2[((i * n + j) * n + k) * n + a] += t.coeff * z * I3(j, k, t.idx[1]);
          }
  auto vec = [&](const Table& t, std::size_t i, std::size_t j, std::size_t k) {
    return std::span<const Scalar>(t).subspan(((i * n + j) * n + k) * n, n);
  };
  auto outer = [&](Table& acc, const Scalar& w, std::span<const Scalar> ua, std::span<const Scalar> vd) {
    for (std::size_t a = 0; a < n; ++a) {
      if (ua[a].is_zero()) continue;
      Scalar wa = w * ua[a];
      for (std::size_t d = 0; d < n; ++d)
        if (!vd[d].is_zero()) acc[a * n + d] += wa * vd[d];
    }
  };
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      Table l = zeros(f, n * n), r = l;
      for (const auto& tb : h.comult4(b))
        for (const auto& tc : h.comult4(c)) {
          const auto& B = tb.idx;
          const auto& C = tc.idx;
          Scalar w = tb.coeff * tc.coeff;
          // gamma(a1b1) g^-1(a2b2c1) gamma(b3c2) g^-1(b4c3d1) gamma(c4d2)
          const Scalar& ml = G(B[2], C[1]);
          if (!ml.is_zero()) outer(l, w * ml, vec(x, B[0], B[1], C[0]), vec(y, B[3], C[2], C[3]));
          // gamma(c1d1) g^-1(b1c2d2) gamma(b2c3) g^-1(a1b3c4) gamma(a2b4)
          const Scalar& mr = G(B[1], C[2]);
          if (!mr.is_zero()) outer(r, w * mr, vec(x2, B[2], C[3], B[3]), vec(y2, C[0], B[0], C[1]));
        }
      if (auto d = first_difference(l, r))
        return CheckReport::fail("pure element", {{*d / n, b, c, *d % n}, {l[*d]}, {r[*d]}, "(a,b,c,d)"});
    }
  return CheckReport::pass("pure element");
}

CheckReport is_neat_element(const LinearForm& g) {
  const auto& h = *g.algebra;
  const std::size_t n = h.dim();
  const Table g2 = product2(g);
  for (std::size_t b = 0; b < n; ++b) {
    Table l = zeros(h.field(), n * n), r = l;
    for (const auto& t : h.comult(b))
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
          l[a * n + c] += t.coeff * g2[a * n + t.idx[0]] * g2[t.idx[1] * n + c];
          r[a * n + c] += t.coeff * g2[t.idx[0] * n + c] * g2[a * n + t.idx[1]];
        }
    if (auto d = first_difference(l, r))
      return CheckReport::fail("neat element", {{*d / n, b, *d % n}, {l[*d]}, {r[*d]}, "(a,b,c)"});
  }
  return CheckReport::pass("neat element");
}

CheckReport is_strongly_neat_element(const LinearForm& g) {
  const auto& h = *g.algebra;
  const std::size_t n = h.dim();
  const Table g2 = product2(g);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Table l = zeros(h.field(), n), r = l;
      for (const auto& t : h.comult(b)) {
        l[t.idx[1]] += t.coeff * g2[a * n + t.idx[0]];
        r[t.idx[0]] += t.coeff * g2[a * n + t.idx[1]];
      }
      if (l != r) return CheckReport::fail("strongly neat element", {{a, b}, l, r, "gamma(a b_1) b_2 vs gamma(a b_2) b_1"});
    }
  return CheckReport::pass("strongly neat element");
}

BilinearForm d1(const LinearForm& g) {
  const auto& h = *g.algebra;
  const std::size_t n = h.dim();
  const LinearForm gi = require_inverse(g);
  const Table gi2 = product2(gi);
  Matrix out(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          Scalar w = x.coeff * y.coeff * g(x.idx[0]) * g(y.idx[0]);
          if (!w.is_zero()) out(i, j) += w * gi2[x.idx[1] * n + y.idx[1]];
        }
  return {g.algebra, out};
}

AlgebraTable twisted_table(const BilinearForm& s, Side side) {
  const auto& h = *s.algebra;
  const std::size_t n = h.dim();
  AlgebraTable t{h.field(), n, zeros(h.field(), n * n * n), h.unit()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::span<Scalar> out(t.mult.data() + (i * n + j) * n, n);
      for (const auto& x : h.comult(i))
        for (const auto& y : h.comult(j)) {
          const bool left = side == Side::left;
          const Scalar& sv = left ? s(x.idx[0], y.idx[0]) : s(x.idx[1], y.idx[1]);
          if (sv.is_zero()) continue;
          Scalar w = x.coeff * y.coeff * sv;
          auto p = left ? h.product(x.idx[1], y.idx[1]) : h.product(x.idx[0], y.idx[0]);
          for (std::size_t k = 0; k < n; ++k)
            if (!p[k].is_zero()) out[k] += w * p[k];
        }
    }
  return t;
}

AlgebraTable twisted_algebra(const BilinearForm& s, Side side) {
  AlgebraTable t = twisted_table(s, side);
  auto r = verify_associative_unital(t);
  if (!r.passed()) throw Error(ErrorCode::axiom_violation, "twisted product: " + r.summary());
  return t;
}

CheckReport left_right_inverse_check(const BilinearForm& s) {
  const BilinearForm inv = require_inverse(s);
  CheckReport left = is_left_2cocycle(s);
  CheckReport right = is_right_2cocycle(inv);
  if (left.passed() == right.passed()) {
    auto r = CheckReport::pass("left cocycle iff inverse right cocycle");
    r.note(std::string("sigma left 2-cocycle: ") + (left.passed() ? "yes" : "no"));
    return r;
  }
  const CheckReport& failing = left.passed() ? right : left;
  auto r = CheckReport::fail("left cocycle iff inverse right cocycle", *failing.witness);
  r.note(left.passed() ? "sigma is a left 2-cocycle but sigma^-1 is not a right one"
                       : "sigma^-1 is a right 2-cocycle but sigma is not a left one");
  return r;
}

}  // namespace hopflab
