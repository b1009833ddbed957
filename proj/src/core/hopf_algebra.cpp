#include "hopflab/core/hopf_algebra.hpp"

#include <algorithm>
#include <map>

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

void require_field(Field expected, const Scalar& s, const char* where) {
  require(s.field() == expected, ErrorCode::field_mismatch, std::string(where) + " has entries outside " + expected.tag());
}

template <std::size_t R>
std::vector<Term<R>> collect(std::map<std::array<std::size_t, R>, Scalar>& acc) {
  std::vector<Term<R>> out;
  out.reserve(acc.size());
  for (auto& [idx, c] : acc)
    if (!c.is_zero()) out.push_back({idx, std::move(c)});
  return out;
}

template <std::size_t R>
void accumulate(std::map<std::array<std::size_t, R>, Scalar>& acc, const std::array<std::size_t, R>& idx,
                const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(idx, c);
  if (!inserted) it->second += c;
}

std::vector<Scalar> dense(const Vector& v) { return {v.begin(), v.end()}; }

}  // namespace

HopfAlgebra::HopfAlgebra(HopfTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.dim;
  const Field f = t_.field;
  require(n > 0, ErrorCode::dimension_mismatch, "algebra dimension must be positive");
  if (t_.labels.empty())
    for (std::size_t i = 0; i < n; ++i) t_.labels.push_back("e" + std::to_string(i));
  require(t_.labels.size() == n, ErrorCode::dimension_mismatch, "basis label count differs from dim");
  require(t_.mult.size() == n * n * n, ErrorCode::dimension_mismatch, "multiplication table must have dim^3 entries");
  require(t_.unit.size() == n && t_.counit.size() == n, ErrorCode::dimension_mismatch, "unit/counit length differs from dim");
  require(t_.comult.size() == n, ErrorCode::dimension_mismatch, "comultiplication needs one entry per basis element");
  require(t_.antipode.rows() == n && t_.antipode.cols() == n, ErrorCode::dimension_mismatch, "antipode must be dim x dim");
  for (const auto& s : t_.mult) require_field(f, s, "mult");
  for (const auto& s : t_.unit) require_field(f, s, "unit");
  for (const auto& s : t_.counit) require_field(f, s, "counit");
  require(t_.antipode.field() == f, ErrorCode::field_mismatch, "antipode field");
  require(t_.unit.field() == f && t_.counit.field() == f, ErrorCode::field_mismatch, "unit/counit field");

  // normalize comult: merge repeated index pairs, drop zeros
  for (auto& terms : t_.comult) {
    std::map<std::array<std::size_t, 2>, Scalar> acc;
    for (const auto& t : terms) {
      require(t.idx[0] < n && t.idx[1] < n, ErrorCode::out_of_range, "comult index");
      require_field(f, t.coeff, "comult");
      accumulate(acc, t.idx, t.coeff);
    }
    terms = collect(acc);
  }

  antipode_inverse_ = exact::inverse(t_.antipode);

  comult3_.resize(n);
  comult4_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::array<std::size_t, 3>, Scalar> acc3;
    for (const auto& a : t_.comult[i])
      for (const auto& b : t_.comult[a.idx[1]]) accumulate(acc3, {a.idx[0], b.idx[0], b.idx[1]}, a.coeff * b.coeff);
    comult3_[i] = collect(acc3);
    std::map<std::array<std::size_t, 4>, Scalar> acc4;
    for (const auto& a : comult3_[i])
      for (const auto& b : t_.comult[a.idx[2]])
        accumulate(acc4, {a.idx[0], a.idx[1], b.idx[0], b.idx[1]}, a.coeff * b.coeff);
    comult4_[i] = collect(acc4);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = t_.comult[i];
    if (d.size() == 1 && d[0].idx[0] == i && d[0].idx[1] == i && d[0].coeff.is_one()) grouplikes_.push_back(i);
  }
}

std::size_t HopfAlgebra::index_of(const std::string& label) const {
  auto it = std::find(t_.labels.begin(), t_.labels.end(), label);
  if (it == t_.labels.end()) throw Error(ErrorCode::out_of_range, "no basis element labelled " + label);
  return static_cast<std::size_t>(it - t_.labels.begin());
}

Vector HopfAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = t_.dim;
  require(a.size() == n && b.size() == n, ErrorCode::dimension_mismatch, "multiply operand length");
  Vector out(t_.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      auto p = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

const Matrix& HopfAlgebra::require_antipode_inverse() const {
  if (!antipode_inverse_) throw Error(ErrorCode::not_invertible, "antipode is not bijective");
  return *antipode_inverse_;
}

Vector HopfAlgebra::apply_antipode(const Vector& v) const { return t_.antipode.transpose() * v; }

Vector HopfAlgebra::apply_antipode_inverse(const Vector& v) const {
  return require_antipode_inverse().transpose() * v;
}

Scalar HopfAlgebra::counit_of(const Vector& v) const {
  Scalar s = Scalar::zero(t_.field);
  for (std::size_t i = 0; i < t_.dim; ++i)
    if (!v[i].is_zero()) s += v[i] * t_.counit[i];
  return s;
}

HopfPtr make_hopf(HopfTables tables) { return std::make_shared<const HopfAlgebra>(std::move(tables)); }

namespace {

// Dense n x n coefficient table of an element of H (x) H.
using Tensor2 = std::vector<Scalar>;

Tensor2 comult_dense(const HopfAlgebra& h, std::size_t i) {
  const std::size_t n = h.dim();
  Tensor2 out(n * n, Scalar::zero(h.field()));
  for (const auto& t : h.comult(i)) out[t.idx[0] * n + t.idx[1]] += t.coeff;
  return out;
}

std::optional<std::size_t> first_difference(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return k;
  return std::nullopt;
}

Witness component_witness(std::vector<std::size_t> instance, std::size_t component, const Scalar& l, const Scalar& r,
                          const std::string& what) {
  return Witness{std::move(instance), {l}, {r}, what + " component " + std::to_string(component)};
}

}  // namespace

CheckReport verify_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  const Scalar zero = Scalar::zero(f);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto ij = h.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs(f, n), rhs(f, n);
        for (std::size_t m = 0; m < n; ++m) {
          if (!ij[m].is_zero()) {
            auto p = h.product(m, k);
            for (std::size_t q = 0; q < n; ++q)
              if (!p[q].is_zero()) lhs[q] += ij[m] * p[q];
          }
          const Scalar& jk = h.mult(j, k, m);
          if (!jk.is_zero()) {
            auto p = h.product(i, m);
            for (std::size_t q = 0; q < n; ++q)
              if (!p[q].is_zero()) rhs[q] += jk * p[q];
          }
        }
        if (!(lhs == rhs))
          return CheckReport::fail("associativity", {{i, j, k}, dense(lhs), dense(rhs), "(e_i e_j) e_k vs e_i (e_j e_k)"});
      }
    }

  for (std::size_t i = 0; i < n; ++i) {
    Vector e = h.basis(i);
    Vector l = h.multiply(h.unit(), e), r = h.multiply(e, h.unit());
    if (!(l == e)) return CheckReport::fail("unit", {{i}, dense(l), dense(e), "1 e_i"});
    if (!(r == e)) return CheckReport::fail("unit", {{i}, dense(r), dense(e), "e_i 1"});
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::array<std::size_t, 3>, Scalar> left, right;
    for (const auto& a : h.comult(i)) {
      for (const auto& b : h.comult(a.idx[0])) accumulate(left, {b.idx[0], b.idx[1], a.idx[1]}, a.coeff * b.coeff);
      for (const auto& b : h.comult(a.idx[1])) accumulate(right, {a.idx[0], b.idx[0], b.idx[1]}, a.coeff * b.coeff);
    }
    std::vector<Scalar> l(n * n * n, zero), r(n * n * n, zero);
    for (auto& [k, c] : left) l[(k[0] * n + k[1]) * n + k[2]] = c;
    for (auto& [k, c] : right) r[(k[0] * n + k[1]) * n + k[2]] = c;
    if (auto d = first_difference(l, r))
      return CheckReport::fail("coassociativity", component_witness({i}, *d, l[*d], r[*d], "(Delta (x) id)Delta vs (id (x) Delta)Delta"));
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vector l(f, n), r(f, n);
    for (const auto& t : h.comult(i)) {
      l[t.idx[1]] += h.counit()[t.idx[0]] * t.coeff;
      r[t.idx[0]] += h.counit()[t.idx[1]] * t.coeff;
    }
    Vector e = h.basis(i);
    if (!(l == e)) return CheckReport::fail("counit", {{i}, dense(l), dense(e), "(eps (x) id)Delta"});
    if (!(r == e)) return CheckReport::fail("counit", {{i}, dense(r), dense(e), "(id (x) eps)Delta"});
  }

  std::vector<Tensor2> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = comult_dense(h, i);
  {
    Tensor2 du(n * n, zero), uu(n * n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      if (h.unit()[i].is_zero()) continue;
      for (std::size_t k = 0; k < n * n; ++k) du[k] += h.unit()[i] * delta[i][k];
      for (std::size_t j = 0; j < n; ++j) uu[i * n + j] = h.unit()[i] * h.unit()[j];
    }
    if (auto d = first_difference(du, uu))
      return CheckReport::fail("comultiplicativity", component_witness({}, *d, du[*d], uu[*d], "Delta(1) vs 1 (x) 1"));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Tensor2 l(n * n, zero), r(n * n, zero);
      auto p = h.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero())
          for (const auto& t : h.comult(k)) l[t.idx[0] * n + t.idx[1]] += p[k] * t.coeff;
      for (const auto& a : h.comult(i))
        for (const auto& b : h.comult(j)) {
          Scalar c = a.coeff * b.coeff;
          auto p1 = h.product(a.idx[0], b.idx[0]);
          auto p2 = h.product(a.idx[1], b.idx[1]);
          for (std::size_t x = 0; x < n; ++x) {
            if (p1[x].is_zero()) continue;
            Scalar cx = c * p1[x];
            for (std::size_t y = 0; y < n; ++y)
              if (!p2[y].is_zero()) r[x * n + y] += cx * p2[y];
          }
        }
      if (auto d = first_difference(l, r))
        return CheckReport::fail("comultiplicativity", component_witness({i, j}, *d, l[*d], r[*d], "Delta(e_i e_j) vs Delta(e_i)Delta(e_j)"));
    }

  if (!(h.counit_of(h.unit()).is_one()))
    return CheckReport::fail("counit multiplicativity", {{}, {h.counit_of(h.unit())}, {Scalar::one(f)}, "eps(1)"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar l = Scalar::zero(f);
      auto p = h.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) l += p[k] * h.counit()[k];
      Scalar r = h.counit()[i] * h.counit()[j];
      if (!(l == r)) return CheckReport::fail("counit multiplicativity", {{i, j}, {l}, {r}, "eps(e_i e_j)"});
    }

  const Matrix& s = h.antipode();
  for (std::size_t i = 0; i < n; ++i) {
    Vector l(f, n), r(f, n);
    for (const auto& t : h.comult(i)) {
      Vector a = s.row(t.idx[0]).scaled(t.coeff);
      l += h.multiply(a, h.basis(t.idx[1]));
      Vector b = s.row(t.idx[1]).scaled(t.coeff);
      r += h.multiply(h.basis(t.idx[0]), b);
    }
    Vector target = h.unit().scaled(h.counit()[i]);
    if (!(l == target)) return CheckReport::fail("antipode", {{i}, dense(l), dense(target), "S(h_1) h_2 vs eps(h) 1"});
    if (!(r == target)) return CheckReport::fail("antipode", {{i}, dense(r), dense(target), "h_1 S(h_2) vs eps(h) 1"});
  }

  if (!h.antipode_inverse())
    return CheckReport::fail("antipode bijective", {{}, {exact::determinant(s)}, {}, "det S"});
  return CheckReport::pass("hopf axioms");
}

std::vector<SweedlerTerm> sweedler_power(const HopfAlgebra& h, const Vector& element, int r, SplitOrder order) {
  if (r < 1) throw Error(ErrorCode::out_of_range, "sweedler_power needs r >= 1");
  if (element.size() != h.dim()) throw Error(ErrorCode::dimension_mismatch, "element length differs from dim");
  std::map<std::vector<std::size_t>, Scalar> cur;
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!element[i].is_zero()) cur.emplace(std::vector<std::size_t>{i}, element[i]);
  for (int step = 1; step < r; ++step) {
    std::map<std::vector<std::size_t>, Scalar> next;
    for (const auto& [factors, c] : cur) {
      const std::size_t pos = order == SplitOrder::first_factor ? 0 : factors.size() - 1;
      for (const auto& t : h.comult(factors[pos])) {
        std::vector<std::size_t> nf;
        nf.reserve(factors.size() + 1);
        nf.insert(nf.end(), factors.begin(), factors.begin() + static_cast<long>(pos));
        nf.push_back(t.idx[0]);
        nf.push_back(t.idx[1]);
        nf.insert(nf.end(), factors.begin() + static_cast<long>(pos) + 1, factors.end());
        auto [it, ins] = next.try_emplace(std::move(nf), c * t.coeff);
        if (!ins) it->second += c * t.coeff;
      }
    }
    cur = std::move(next);
  }
  std::vector<SweedlerTerm> out;
  for (auto& [factors, c] : cur)
    if (!c.is_zero()) out.push_back({c, factors});
  return out;
}

HopfPtr dual_hopf(const HopfAlgebra& h, bool cop) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  HopfTables t;
  t.field = f;
  t.dim = n;
  for (const auto& l : h.labels()) t.labels.push_back("δ" + l);
  t.mult.assign(n * n * n, Scalar::zero(f));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& term : h.comult(k)) t.mult[(term.idx[0] * n + term.idx[1]) * n + k] += term.coeff;
  t.unit = h.counit();
  t.counit = h.unit();
  t.comult.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = h.mult(i, j, k);
        if (c.is_zero()) continue;
        if (cop)
          t.comult[k].push_back({{j, i}, c});
        else
          t.comult[k].push_back({{i, j}, c});
      }
  t.antipode = cop ? h.require_antipode_inverse().transpose() : h.antipode().transpose();
  return make_hopf(std::move(t));
}

bool same_structure_constants(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) return false;
  const auto& x = a.tables();
  const auto& y = b.tables();
  if (x.mult != y.mult || !(x.unit == y.unit) || !(x.counit == y.counit) || !(x.antipode == y.antipode)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& p = a.comult(i);
    const auto& q = b.comult(i);
    if (p.size() != q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k].idx != q[k].idx || !(p[k].coeff == q[k].coeff)) return false;
  }
  return true;
}

bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
  return a.field == b.field && a.dim == b.dim && a.mult == b.mult && a.unit == b.unit;
}

AlgebraTable algebra_table(const HopfAlgebra& h) { return {h.field(), h.dim(), h.tables().mult, h.unit()}; }

CheckReport verify_associative_unital(const AlgebraTable& a) {
  const std::size_t n = a.dim;
  const Field f = a.field;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> l(n, Scalar::zero(f)), r(n, Scalar::zero(f));
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& ij = a.at(i, j, m);
          if (!ij.is_zero())
            for (std::size_t q = 0; q < n; ++q)
              if (!a.at(m, k, q).is_zero()) l[q] += ij * a.at(m, k, q);
          const Scalar& jk = a.at(j, k, m);
          if (!jk.is_zero())
            for (std::size_t q = 0; q < n; ++q)
              if (!a.at(i, m, q).is_zero()) r[q] += jk * a.at(i, m, q);
        }
        if (l != r) return CheckReport::fail("associativity", {{i, j, k}, l, r, "(e_i e_j) e_k vs e_i (e_j e_k)"});
      }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> l(n, Scalar::zero(f)), r(n, Scalar::zero(f)), e(n, Scalar::zero(f));
    e[i] = Scalar::one(f);
    for (std::size_t m = 0; m < n; ++m) {
      if (a.unit[m].is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) {
        l[q] += a.unit[m] * a.at(m, i, q);
        r[q] += a.unit[m] * a.at(i, m, q);
      }
    }
    if (l != e) return CheckReport::fail("unit", {{i}, l, e, "1 e_i"});
    if (r != e) return CheckReport::fail("unit", {{i}, r, e, "e_i 1"});
  }
  return CheckReport::pass("associative unital algebra");
}

}  // namespace hopflab
