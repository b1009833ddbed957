#include "hopflab/biproducts/yd_pair.hpp"

#include "hopflab/catalog.hpp"
#include "hopflab/error.hpp"

namespace hopflab {

namespace {

using Tensor = std::vector<Scalar>;

Tensor zeros(Field f, std::size_t n) { return Tensor(n, Scalar::zero(f)); }

std::optional<CheckReport> differ(const std::string& cond, std::vector<std::size_t> idx, const Tensor& l,
                                  const Tensor& r, std::string context = "") {
  for (std::size_t k = 0; k < l.size(); ++k)
    if (!(l[k] == r[k])) return CheckReport::fail(cond, {std::move(idx), l, r, std::move(context)});
  return std::nullopt;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::dimension_mismatch, what);
}

void require_field(const Vector& v, Field f, const char* what) {
  if (!v.empty() && !(v.field() == f)) throw Error(ErrorCode::field_mismatch, std::string(what) + " is over another field");
}

// Module and comodule axioms of an H-module with coaction, plus the
// Yetter-Drinfeld compatibility when `yd` is set.
std::optional<CheckReport> module_checks(const HopfAlgebra& h, std::size_t m, const std::vector<Scalar>& action,
                                         const std::vector<std::vector<Term2>>& coaction, bool yd) {
  const Field f = h.field();
  const std::size_t n = h.dim();
  auto act = [&](std::size_t hi, const Tensor& v) {
    Tensor out = zeros(f, m);
    for (std::size_t b = 0; b < m; ++b) {
      if (v[b].is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& c = action[(hi * m + b) * m + k];
        if (!c.is_zero()) out[k] += v[b] * c;
      }
    }
    return out;
  };
  auto basis = [&](std::size_t b) {
    Tensor v = zeros(f, m);
    v[b] = Scalar::one(f);
    return v;
  };

  for (std::size_t b = 0; b < m; ++b) {
    Tensor l = zeros(f, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!h.unit()[i].is_zero()) {
        Tensor t = act(i, basis(b));
        for (std::size_t k = 0; k < m; ++k) l[k] += h.unit()[i] * t[k];
      }
    if (auto r = differ("module", {b}, l, basis(b), "unit acts as identity")) return r;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t b = 0; b < m; ++b) {
        Tensor l = zeros(f, m);
        for (std::size_t w = 0; w < n; ++w)
          if (!h.mult(a, c, w).is_zero()) {
            Tensor t = act(w, basis(b));
            for (std::size_t k = 0; k < m; ++k) l[k] += h.mult(a, c, w) * t[k];
          }
        if (auto r = differ("module", {a, c, b}, l, act(a, act(c, basis(b))), "(hk) . b = h . (k . b)")) return r;
      }

  for (std::size_t b = 0; b < m; ++b) {
    Tensor l = zeros(f, n * n * m), r = zeros(f, n * n * m);
    for (const auto& t : coaction[b]) {
      for (const auto& s : h.comult(t.idx[0])) l[(s.idx[0] * n + s.idx[1]) * m + t.idx[1]] += t.coeff * s.coeff;
      for (const auto& s : coaction[t.idx[1]]) r[(t.idx[0] * n + s.idx[0]) * m + s.idx[1]] += t.coeff * s.coeff;
    }
    if (auto rep = differ("comodule", {b}, l, r, "coassociativity")) return rep;
    Tensor e = zeros(f, m);
    for (const auto& t : coaction[b]) e[t.idx[1]] += t.coeff * h.counit()[t.idx[0]];
    if (auto rep = differ("comodule", {b}, e, basis(b), "counit")) return rep;
  }

  if (!yd) return std::nullopt;
  // (h_1 . b)^(-1) h_2 (x) (h_1 . b)^(0) = h_1 b^(-1) (x) h_2 . b^(0)
  for (std::size_t hi = 0; hi < n; ++hi)
    for (std::size_t b = 0; b < m; ++b) {
      Tensor l = zeros(f, n * m), r = zeros(f, n * m);
      for (const auto& s : h.comult(hi)) {
        Tensor hb = act(s.idx[0], basis(b));
        for (std::size_t k = 0; k < m; ++k) {
          if (hb[k].is_zero()) continue;
          for (const auto& t : coaction[k])
            for (std::size_t w = 0; w < n; ++w)
              if (!h.mult(t.idx[0], s.idx[1], w).is_zero())
                l[w * m + t.idx[1]] += s.coeff * hb[k] * t.coeff * h.mult(t.idx[0], s.idx[1], w);
        }
        for (const auto& t : coaction[b]) {
          Tensor hb0 = act(s.idx[1], basis(t.idx[1]));
          for (std::size_t w = 0; w < n; ++w) {
            const Scalar& c = h.mult(s.idx[0], t.idx[0], w);
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k)
              if (!hb0[k].is_zero()) r[w * m + k] += s.coeff * t.coeff * c * hb0[k];
          }
        }
      }
      if (auto rep = differ("(r6)", {hi, b}, l, r)) return rep;
    }
  return std::nullopt;
}

Tensor bmul(const YDPair& p, const Tensor& a, const Tensor& b) {
  const std::size_t m = p.dim();
  Tensor out = zeros(p.field(), m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j].is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (!p.mult(i, j, k).is_zero()) out[k] += a[i] * b[j] * p.mult(i, j, k);
    }
  }
  return out;
}

Tensor ent(const Vector& v) { return Tensor(v.begin(), v.end()); }

}  // namespace

YDPair::YDPair(YDPairData data) : d_(std::move(data)) {
  if (!d_.host) throw Error(ErrorCode::dimension_mismatch, "pair without host algebra");
  const Field f = d_.host->field();
  const std::size_t m = d_.dim;
  const std::size_t n = d_.host->dim();
  if (d_.labels.empty())
    for (std::size_t i = 0; i < m; ++i) d_.labels.push_back("b" + std::to_string(i));
  require(d_.labels.size() == m, "B labels");
  require(d_.mult.size() == m * m * m, "B multiplication table has the wrong size");
  require(d_.unit.size() == m && d_.counit.size() == m, "B unit/counit length");
  require(d_.comult.size() == m, "B comultiplication table has the wrong size");
  require(d_.action.size() == n * m * m, "action table has the wrong size");
  require(d_.coaction.size() == m, "coaction table has the wrong size");
  require_field(d_.unit, f, "B unit");
  require_field(d_.counit, f, "B counit");
  for (const auto& c : d_.mult)
    if (!(c.field() == f)) throw Error(ErrorCode::field_mismatch, "B multiplication is over another field");
  for (const auto& c : d_.action)
    if (!(c.field() == f)) throw Error(ErrorCode::field_mismatch, "action is over another field");
  for (const auto& terms : d_.comult)
    for (const auto& t : terms)
      if (t.idx[0] >= m || t.idx[1] >= m) throw Error(ErrorCode::out_of_range, "B comultiplication index");
  for (const auto& terms : d_.coaction)
    for (const auto& t : terms)
      if (t.idx[0] >= n || t.idx[1] >= m) throw Error(ErrorCode::out_of_range, "coaction index");

  if (d_.antipode) {
    require(d_.antipode->rows() == m && d_.antipode->cols() == m, "B antipode shape");
    antipode_ = d_.antipode;
    return;
  }
  // S(b_1) b_2 = eps(b) 1, then check b_1 S(b_2) as well
  std::vector<exact::LinearSystem::Row> rows;
  std::vector<Scalar> rhs;
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t k = 0; k < m; ++k) {
      exact::LinearSystem::Row row;
      for (const auto& t : d_.comult[b])
        for (std::size_t j = 0; j < m; ++j)
          if (!mult(j, t.idx[1], k).is_zero()) row.emplace_back(t.idx[0] * m + j, t.coeff * mult(j, t.idx[1], k));
      rows.push_back(std::move(row));
      rhs.push_back(d_.counit[b] * d_.unit[k]);
    }
  auto sol = exact::solve_sparse(f, m * m, rows, rhs);
  if (!sol) return;
  Matrix s(f, m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < m; ++k) s(a, k) = (*sol)[a * m + k];
  for (std::size_t b = 0; b < m; ++b) {
    Vector r(f, m);
    for (const auto& t : d_.comult[b]) r.add_scaled(t.coeff, multiply(basis(t.idx[0]), s.row(t.idx[1])));
    if (!(r == d_.unit.scaled(d_.counit[b]))) return;
  }
  antipode_ = s;
}

Vector YDPair::multiply(const Vector& a, const Vector& b) const { return Vector(field(), bmul(*this, ent(a), ent(b))); }

Vector YDPair::act_basis(std::size_t h, const Vector& v) const {
  Vector out(field(), d_.dim);
  for (std::size_t b = 0; b < d_.dim; ++b) {
    if (v[b].is_zero()) continue;
    for (std::size_t k = 0; k < d_.dim; ++k)
      if (!action(h, b, k).is_zero()) out[k] += v[b] * action(h, b, k);
  }
  return out;
}

Vector YDPair::act(const Vector& h, const Vector& b) const {
  Vector out(field(), d_.dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) out.add_scaled(h[i], act_basis(i, b));
  return out;
}

YDPairPtr make_pair(YDPairData data) { return std::make_shared<const YDPair>(std::move(data)); }

CheckReport verify_admissible_pair(const YDPair& p) {
  const HopfAlgebra& h = p.host();
  const Field f = p.field();
  const std::size_t m = p.dim();
  const std::size_t n = h.dim();
  auto basis = [&](std::size_t b) { return ent(p.basis(b)); };
  auto act = [&](std::size_t hi, const Tensor& v) { return ent(p.act_basis(hi, Vector(f, v))); };
  auto prod = [&](std::size_t a, std::size_t b) { return bmul(p, basis(a), basis(b)); };
  auto comult_of = [&](const Tensor& v) {
    Tensor out = zeros(f, m * m);
    for (std::size_t b = 0; b < m; ++b)
      if (!v[b].is_zero())
        for (const auto& t : p.comult(b)) out[t.idx[0] * m + t.idx[1]] += v[b] * t.coeff;
    return out;
  };
  auto coaction_of = [&](const Tensor& v) {
    Tensor out = zeros(f, n * m);
    for (std::size_t b = 0; b < m; ++b)
      if (!v[b].is_zero())
        for (const auto& t : p.coaction(b)) out[t.idx[0] * m + t.idx[1]] += v[b] * t.coeff;
    return out;
  };
  auto counit_of = [&](const Tensor& v) {
    Scalar s = Scalar::zero(f);
    for (std::size_t b = 0; b < m; ++b) s += v[b] * p.counit()[b];
    return s;
  };
  const Tensor one_b = ent(p.unit());

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (auto r = differ("B associativity", {a, b, c}, bmul(p, prod(a, b), basis(c)), bmul(p, basis(a), prod(b, c))))
          return *r;
  for (std::size_t b = 0; b < m; ++b) {
    if (auto r = differ("B unit", {b}, bmul(p, one_b, basis(b)), basis(b), "left")) return *r;
    if (auto r = differ("B unit", {b}, bmul(p, basis(b), one_b), basis(b), "right")) return *r;
  }
  for (std::size_t b = 0; b < m; ++b) {
    Tensor l = zeros(f, m * m * m), r = zeros(f, m * m * m);
    for (const auto& t : p.comult(b)) {
      for (const auto& s : p.comult(t.idx[0])) l[(s.idx[0] * m + s.idx[1]) * m + t.idx[1]] += t.coeff * s.coeff;
      for (const auto& s : p.comult(t.idx[1])) r[(t.idx[0] * m + s.idx[0]) * m + s.idx[1]] += t.coeff * s.coeff;
    }
    if (auto rep = differ("B coassociativity", {b}, l, r)) return *rep;
    Tensor cl = zeros(f, m), cr = zeros(f, m);
    for (const auto& t : p.comult(b)) {
      cl[t.idx[1]] += t.coeff * p.counit()[t.idx[0]];
      cr[t.idx[0]] += t.coeff * p.counit()[t.idx[1]];
    }
    if (auto rep = differ("B counit", {b}, cl, basis(b), "left")) return *rep;
    if (auto rep = differ("B counit", {b}, cr, basis(b), "right")) return *rep;
  }

  const auto& d = p.data();
  if (auto r = module_checks(h, m, d.action, d.coaction, true)) return *r;

  // (1) module algebra
  for (std::size_t hi = 0; hi < n; ++hi) {
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Tensor r = zeros(f, m);
        for (const auto& s : h.comult(hi)) {
          Tensor t = bmul(p, act(s.idx[0], basis(b)), act(s.idx[1], basis(c)));
          for (std::size_t k = 0; k < m; ++k) r[k] += s.coeff * t[k];
        }
        if (auto rep = differ("(1)", {hi, b, c}, act(hi, prod(b, c)), r, "h . (bc) = (h_1 . b)(h_2 . c)")) return *rep;
      }
    Tensor e = one_b;
    for (auto& x : e) x *= h.counit()[hi];
    if (auto rep = differ("(1)", {hi}, act(hi, one_b), e, "h . 1 = eps(h) 1")) return *rep;
  }

  // (2) comodule algebra
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      Tensor r = zeros(f, n * m);
      for (const auto& s : p.coaction(b))
        for (const auto& t : p.coaction(c)) {
          Tensor bc = prod(s.idx[1], t.idx[1]);
          for (std::size_t w = 0; w < n; ++w) {
            const Scalar& hw = h.mult(s.idx[0], t.idx[0], w);
            if (hw.is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k)
              if (!bc[k].is_zero()) r[w * m + k] += s.coeff * t.coeff * hw * bc[k];
          }
        }
      if (auto rep = differ("(2)", {b, c}, coaction_of(prod(b, c)), r, "coaction is multiplicative")) return *rep;
    }
  {
    Tensor r = zeros(f, n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < m; ++k) r[i * m + k] = h.unit()[i] * one_b[k];
    if (auto rep = differ("(2)", {}, coaction_of(one_b), r, "coaction of 1")) return *rep;
  }

  // Delta_B and eps_B are H-linear
  for (std::size_t hi = 0; hi < n; ++hi)
    for (std::size_t b = 0; b < m; ++b) {
      Tensor r = zeros(f, m * m);
      for (const auto& s : h.comult(hi))
        for (const auto& t : p.comult(b)) {
          Tensor x = act(s.idx[0], basis(t.idx[0]));
          Tensor y = act(s.idx[1], basis(t.idx[1]));
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) r[i * m + j] += s.coeff * t.coeff * x[i] * y[j];
        }
      if (auto rep = differ("(r3)", {hi, b}, comult_of(act(hi, basis(b))), r)) return *rep;
    }
  for (std::size_t hi = 0; hi < n; ++hi)
    for (std::size_t b = 0; b < m; ++b)
      if (auto rep = differ("(r4)", {hi, b}, {counit_of(act(hi, basis(b)))}, {h.counit()[hi] * p.counit()[b]}))
        return *rep;

  // Delta_B and eps_B are H-colinear
  for (std::size_t b = 0; b < m; ++b) {
    Tensor l = zeros(f, n * m * m), r = zeros(f, n * m * m);
    for (const auto& t : p.comult(b))
      for (const auto& s : p.coaction(t.idx[0]))
        for (const auto& u : p.coaction(t.idx[1]))
          for (std::size_t w = 0; w < n; ++w)
            if (!h.mult(s.idx[0], u.idx[0], w).is_zero())
              l[(w * m + s.idx[1]) * m + u.idx[1]] += t.coeff * s.coeff * u.coeff * h.mult(s.idx[0], u.idx[0], w);
    for (const auto& s : p.coaction(b))
      for (const auto& t : p.comult(s.idx[1])) r[(s.idx[0] * m + t.idx[0]) * m + t.idx[1]] += s.coeff * t.coeff;
    if (auto rep = differ("(r1)", {b}, l, r)) return *rep;
    Tensor l2 = zeros(f, n), r2 = zeros(f, n);
    for (const auto& s : p.coaction(b)) l2[s.idx[0]] += s.coeff * p.counit()[s.idx[1]];
    for (std::size_t i = 0; i < n; ++i) r2[i] = p.counit()[b] * h.unit()[i];
    if (auto rep = differ("(r2)", {b}, l2, r2)) return *rep;
  }

  // (5)
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c)
      if (auto rep = differ("(5)", {b, c}, {counit_of(prod(b, c))}, {p.counit()[b] * p.counit()[c]}, "eps_B is multiplicative"))
        return *rep;
  if (auto rep = differ("(5)", {}, {counit_of(one_b)}, {Scalar::one(f)}, "eps_B(1) = 1")) return *rep;
  {
    Tensor r = zeros(f, m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) r[i * m + j] = one_b[i] * one_b[j];
    if (auto rep = differ("(5)", {}, comult_of(one_b), r, "Delta(1) = 1 (x) 1")) return *rep;
  }

  // Delta_B(bc) = b_1 (b_2^(-1) . c_1) (x) b_2^(0) c_2
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      Tensor r = zeros(f, m * m);
      for (const auto& t : p.comult(b))
        for (const auto& s : p.coaction(t.idx[1]))
          for (const auto& u : p.comult(c)) {
            Tensor left = bmul(p, basis(t.idx[0]), act(s.idx[0], basis(u.idx[0])));
            Tensor right = prod(s.idx[1], u.idx[1]);
            Scalar k = t.coeff * s.coeff * u.coeff;
            for (std::size_t i = 0; i < m; ++i) {
              if (left[i].is_zero()) continue;
              for (std::size_t j = 0; j < m; ++j)
                if (!right[j].is_zero()) r[i * m + j] += k * left[i] * right[j];
            }
          }
      if (auto rep = differ("(r5)", {b, c}, comult_of(prod(b, c)), r)) return *rep;
    }

  if (d.antipode) {
    for (std::size_t b = 0; b < m; ++b) {
      Tensor l = zeros(f, m), r = zeros(f, m);
      for (const auto& t : p.comult(b)) {
        Tensor x = bmul(p, ent(d.antipode->row(t.idx[0])), basis(t.idx[1]));
        Tensor y = bmul(p, basis(t.idx[0]), ent(d.antipode->row(t.idx[1])));
        for (std::size_t k = 0; k < m; ++k) {
          l[k] += t.coeff * x[k];
          r[k] += t.coeff * y[k];
        }
      }
      Tensor e = one_b;
      for (auto& x : e) x *= p.counit()[b];
      if (auto rep = differ("B antipode", {b}, l, e, "S_B(b_1) b_2")) return *rep;
      if (auto rep = differ("B antipode", {b}, r, e, "b_1 S_B(b_2)")) return *rep;
    }
  }
  return CheckReport::pass("admissible pair");
}

HopfPtr biproduct(const YDPairPtr& pp) {
  const YDPair& p = *pp;
  const HopfAlgebra& h = p.host();
  if (!p.antipode()) throw Error(ErrorCode::prereq_violated, "the pair is admissible but has no antipode S_B");
  if (auto r = verify_admissible_pair(p); !r.passed())
    throw Error(ErrorCode::prereq_violated, "not an admissible pair: " + r.summary());
  const Field f = p.field();
  const std::size_t m = p.dim();
  const std::size_t n = h.dim();
  const std::size_t nn = m * n;

  HopfTables t;
  t.field = f;
  t.dim = nn;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) t.labels.push_back(p.labels()[i] + "×" + h.labels()[j]);

  // (b x h)(c x l) = b (h_1 . c) x h_2 l
  t.mult.assign(nn * nn * nn, Scalar::zero(f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Scalar* out = t.mult.data() + ((i * n + j) * nn + (k * n + l)) * nn;
          for (const auto& s : h.comult(j)) {
            Vector bc = p.multiply(p.basis(i), p.act_basis(s.idx[0], p.basis(k)));
            for (std::size_t v = 0; v < m; ++v) {
              if (bc[v].is_zero()) continue;
              for (std::size_t w = 0; w < n; ++w)
                if (!h.mult(s.idx[1], l, w).is_zero()) out[v * n + w] += s.coeff * bc[v] * h.mult(s.idx[1], l, w);
            }
          }
        }

  t.unit = Vector(f, nn);
  t.counit = Vector(f, nn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.unit[i * n + j] = p.unit()[i] * h.unit()[j];
      t.counit[i * n + j] = p.counit()[i] * h.counit()[j];
    }

  // Delta(b x h) = (b_1 x b_2^(-1) h_1) (x) (b_2^(0) x h_2)
  t.comult.resize(nn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& bt : p.comult(i))
        for (const auto& ct : p.coaction(bt.idx[1]))
          for (const auto& ht : h.comult(j))
            for (std::size_t w = 0; w < n; ++w) {
              const Scalar& c = h.mult(ct.idx[0], ht.idx[0], w);
              if (c.is_zero()) continue;
              t.comult[i * n + j].push_back(
                  {{bt.idx[0] * n + w, ct.idx[1] * n + ht.idx[1]}, bt.coeff * ct.coeff * ht.coeff * c});
            }

  auto multiply = [&](const Vector& a, const Vector& b) {
    Vector out(f, nn);
    for (std::size_t x = 0; x < nn; ++x) {
      if (a[x].is_zero()) continue;
      for (std::size_t y = 0; y < nn; ++y) {
        if (b[y].is_zero()) continue;
        for (std::size_t z = 0; z < nn; ++z) {
          const Scalar& c = t.mult[(x * nn + y) * nn + z];
          if (!c.is_zero()) out[z] += a[x] * b[y] * c;
        }
      }
    }
    return out;
  };
  // S(b x h) = (1 x S_H(b^(-1) h)) (S_B(b^(0)) x 1)
  const Matrix& sb = *p.antipode();
  t.antipode = Matrix(f, nn, nn);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector s(f, nn);
      for (const auto& ct : p.coaction(i)) {
        Vector y = h.apply_antipode(h.multiply(h.basis(ct.idx[0]), h.basis(j)));
        Vector left(f, nn), right(f, nn);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            left[a * n + b] = p.unit()[a] * y[b];
            right[a * n + b] = sb(ct.idx[1], a) * h.unit()[b];
          }
        s.add_scaled(ct.coeff, multiply(left, right));
      }
      for (std::size_t k = 0; k < nn; ++k) t.antipode(i * n + j, k) = s[k];
    }

  HopfPtr out = make_hopf(std::move(t));
  if (auto r = verify_hopf(*out); !r.passed()) throw Error(ErrorCode::axiom_violation, "B x H fails: " + r.summary());
  return out;
}

YDModule yd_module(const YDPair& p) { return {p.host_ptr(), p.dim(), p.data().action, p.data().coaction}; }

CheckReport verify_yd_module(const YDModule& m) {
  if (m.action.size() != m.host->dim() * m.dim * m.dim || m.coaction.size() != m.dim)
    throw Error(ErrorCode::dimension_mismatch, "Yetter-Drinfeld module tables have the wrong size");
  if (auto r = module_checks(*m.host, m.dim, m.action, m.coaction, true)) {
    if (r->condition == "(r6)") r->condition = "Yetter-Drinfeld compatibility";
    return *r;
  }
  return CheckReport::pass("Yetter-Drinfeld module");
}

Matrix yd_braiding_matrix(const YDModule& m, const YDModule& n) {
  if (m.host != n.host && !same_structure_constants(*m.host, *n.host))
    throw Error(ErrorCode::field_mismatch, "modules over different algebras");
  const Field f = m.host->field();
  Matrix out(f, m.dim * n.dim, n.dim * m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < n.dim; ++j)
      for (const auto& t : m.coaction[i])
        for (std::size_t k = 0; k < n.dim; ++k) {
          const Scalar& c = n.action[(t.idx[0] * n.dim + j) * n.dim + k];
          if (!c.is_zero()) out(i * n.dim + j, k * m.dim + t.idx[1]) += t.coeff * c;
        }
  return out;
}

YDPairPtr trivial_pair(const HopfPtr& h) {
  const Field f = h->field();
  YDPairData d;
  d.host = h;
  d.dim = 1;
  d.labels = {"1"};
  d.mult = {Scalar::one(f)};
  d.unit = Vector(f, {Scalar::one(f)});
  d.comult = {{{{0, 0}, Scalar::one(f)}}};
  d.counit = Vector(f, {Scalar::one(f)});
  d.antipode = Matrix::identity(f, 1);
  for (std::size_t i = 0; i < h->dim(); ++i) d.action.push_back(h->counit()[i]);
  d.coaction.resize(1);
  for (std::size_t i = 0; i < h->dim(); ++i)
    if (!h->unit()[i].is_zero()) d.coaction[0].push_back({{i, 0}, h->unit()[i]});
  return make_pair(std::move(d));
}

YDPairPtr sweedler_pair(Field f) {
  enum { one, x };
  const Scalar u = Scalar::one(f);
  const Scalar z = Scalar::zero(f);
  YDPairData d;
  d.host = cyclic_group_algebra(f, 2);
  d.dim = 2;
  d.labels = {"1", "x"};
  d.mult.assign(8, z);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c) { d.mult[(a * 2 + b) * 2 + c] = u; };
  set(one, one, one);
  set(one, x, x);
  set(x, one, x);
  d.unit = Vector(f, {u, z});
  d.comult = {{{{one, one}, u}}, {{{x, one}, u}, {{one, x}, u}}};
  d.counit = Vector(f, {u, z});
  d.antipode = Matrix(f, 2, 2);
  (*d.antipode)(one, one) = u;
  (*d.antipode)(x, x) = -u;
  // host basis {1, g}: 1 acts trivially, g . x = -x
  d.action.assign(2 * 2 * 2, z);
  d.action[(0 * 2 + one) * 2 + one] = u;
  d.action[(0 * 2 + x) * 2 + x] = u;
  d.action[(1 * 2 + one) * 2 + one] = u;
  d.action[(1 * 2 + x) * 2 + x] = -u;
  d.coaction = {{{{0, one}, u}}, {{{1, x}, u}}};
  return make_pair(std::move(d));
}

}  // namespace hopflab

namespace hopflab {

YDPairPtr catalog_pair(const std::string& name, Field f) {
  if (name == "sweedler-pair") return sweedler_pair(f);
  throw Error(ErrorCode::out_of_range, "unknown catalog pair " + name);
}

}  // namespace hopflab
