#include "hopflab/core/comodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hopflab/error.hpp"

namespace hopflab {

namespace {

void canonicalize(std::vector<CoactionTerm>& terms) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
  for (auto& t : terms) {
    auto [it, ins] = acc.try_emplace({t.j, t.k}, t.coeff);
    if (!ins) it->second += t.coeff;
  }
  terms.clear();
  for (auto& [key, c] : acc)
    if (!c.is_zero()) terms.push_back({key.first, key.second, c});
}

}  // namespace

Comodule trivial_comodule(const HopfPtr& h) {
  Comodule m{h, 1, {}, "trivial"};
  std::vector<CoactionTerm> terms;
  for (std::size_t k = 0; k < h->dim(); ++k)
    if (!h->unit()[k].is_zero()) terms.push_back({0, k, h->unit()[k]});
  m.coaction.push_back(std::move(terms));
  return m;
}

Comodule regular_comodule(const HopfPtr& h) {
  Comodule m{h, h->dim(), {}, "regular"};
  for (std::size_t i = 0; i < h->dim(); ++i) {
    std::vector<CoactionTerm> terms;
    for (const auto& t : h->comult(i)) terms.push_back({t.idx[0], t.idx[1], t.coeff});
    m.coaction.push_back(std::move(terms));
  }
  return m;
}

Comodule tensor_comodule(const Comodule& m, const Comodule& n) {
  if (m.algebra != n.algebra) throw Error(ErrorCode::field_mismatch, "comodules over different algebras");
  const auto& h = *m.algebra;
  Comodule out{m.algebra, m.dim * n.dim, {}, m.label + "*" + n.label};
  out.coaction.resize(out.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < n.dim; ++j) {
      auto& terms = out.coaction[i * n.dim + j];
      for (const auto& a : m.coaction[i])
        for (const auto& b : n.coaction[j]) {
          Scalar c = a.coeff * b.coeff;
          auto p = h.product(a.k, b.k);
          for (std::size_t k = 0; k < h.dim(); ++k)
            if (!p[k].is_zero()) terms.push_back({a.j * n.dim + b.j, k, c * p[k]});
        }
      canonicalize(terms);
    }
  return out;
}

CheckReport verify_comodule(const Comodule& m) {
  const auto& h = *m.algebra;
  const Field f = h.field();
  for (std::size_t i = 0; i < m.dim; ++i) {
    // (rho (x) id) rho  vs  (id (x) Delta) rho, as maps to M (x) H (x) H
    std::map<std::array<std::size_t, 3>, Scalar> l, r;
    auto add = [](auto& acc, std::array<std::size_t, 3> key, const Scalar& c) {
      auto [it, ins] = acc.try_emplace(key, c);
      if (!ins) it->second += c;
    };
    for (const auto& a : m.coaction[i]) {
      for (const auto& b : m.coaction[a.j]) add(l, {b.j, b.k, a.k}, a.coeff * b.coeff);
      for (const auto& t : h.comult(a.k)) add(r, {a.j, t.idx[0], t.idx[1]}, a.coeff * t.coeff);
    }
    std::erase_if(l, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    if (l != r) {
      std::set<std::array<std::size_t, 3>> keys;
      for (auto& kv : l) keys.insert(kv.first);
      for (auto& kv : r) keys.insert(kv.first);
      for (const auto& key : keys) {
        Scalar lv = l.count(key) ? l.at(key) : Scalar::zero(f);
        Scalar rv = r.count(key) ? r.at(key) : Scalar::zero(f);
        if (!(lv == rv))
          return CheckReport::fail("comodule coassociativity",
                                   {{i}, {lv}, {rv},
                                    "component (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                                        std::to_string(key[2]) + ")"});
      }
    }
    std::vector<Scalar> back(m.dim, Scalar::zero(f)), e(m.dim, Scalar::zero(f));
    e[i] = Scalar::one(f);
    for (const auto& a : m.coaction[i]) back[a.j] += a.coeff * h.counit()[a.k];
    if (back != e) return CheckReport::fail("comodule counit", {{i}, back, e, "(id (x) eps) rho"});
  }
  return CheckReport::pass("comodule axioms");
}

bool same_coaction(const Comodule& a, const Comodule& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.dim; ++i) {
    auto x = a.coaction[i], y = b.coaction[i];
    canonicalize(x);
    canonicalize(y);
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].j != y[k].j || x[k].k != y[k].k || !(x[k].coeff == y[k].coeff)) return false;
  }
  return true;
}

}  // namespace hopflab
