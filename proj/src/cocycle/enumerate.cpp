#include "hopflab/cocycle/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hopflab/cocycle/predicates.hpp"
#include "hopflab/error.hpp"
#include "hopflab/exact/enumerate.hpp"

namespace hopflab {

using exact::LinearSystem;
using exact::QuadraticEquation;

namespace {

// unknown index of sigma(e_i, e_j)
std::size_t var(std::size_t i, std::size_t j, std::size_t n) { return i * n + j; }

void add_normalization(LinearSystem& sys, const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  for (std::size_t k = 0; k < n; ++k) {
    LinearSystem::Row left, right;
    for (std::size_t i = 0; i < n; ++i) {
      if (h.unit()[i].is_zero()) continue;
      left.push_back({var(i, k, n), h.unit()[i]});
      right.push_back({var(k, i, n), h.unit()[i]});
    }
    sys.add(left, h.counit()[k]);
    sys.add(right, h.counit()[k]);
  }
}

void add_laziness(LinearSystem& sys, const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // for each output basis vector k: sum sigma(a1,b1) (a2 b2)_k - (a1 b1)_k sigma(a2,b2) = 0
      std::vector<LinearSystem::Row> rows(n);
      for (const auto& x : h.comult(a))
        for (const auto& y : h.comult(b)) {
          Scalar c = x.coeff * y.coeff;
          auto pl = h.product(x.idx[1], y.idx[1]);
          auto pr = h.product(x.idx[0], y.idx[0]);
          for (std::size_t k = 0; k < n; ++k) {
            if (!pl[k].is_zero()) rows[k].push_back({var(x.idx[0], y.idx[0], n), c * pl[k]});
            if (!pr[k].is_zero()) rows[k].push_back({var(x.idx[1], y.idx[1], n), -(c * pr[k])});
          }
        }
      for (auto& r : rows)
        if (!r.empty()) sys.add(r, Scalar::zero(f));
    }
}

std::vector<QuadraticEquation> left_cocycle_equations(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  std::vector<QuadraticEquation> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
        auto add = [&](std::size_t u, std::size_t v, const Scalar& w) {
          auto key = std::minmax(u, v);
          auto [it, ins] = acc.try_emplace({key.first, key.second}, w);
          if (!ins) it->second += w;
        };
        // sigma(a1,b1) sigma(a2 b2, c)
        for (const auto& x : h.comult(a))
          for (const auto& y : h.comult(b)) {
            auto p = h.product(x.idx[1], y.idx[1]);
            for (std::size_t m = 0; m < n; ++m)
              if (!p[m].is_zero()) add(var(x.idx[0], y.idx[0], n), var(m, c, n), x.coeff * y.coeff * p[m]);
          }
        // - sigma(b1,c1) sigma(a, b2 c2)
        for (const auto& y : h.comult(b))
          for (const auto& z : h.comult(c)) {
            auto p = h.product(y.idx[1], z.idx[1]);
            for (std::size_t m = 0; m < n; ++m)
              if (!p[m].is_zero()) add(var(y.idx[0], z.idx[0], n), var(a, m, n), -(y.coeff * z.coeff * p[m]));
          }
        QuadraticEquation eq{{}, {}, Scalar::zero(f)};
        for (auto& [k, w] : acc)
          if (!w.is_zero()) eq.products.push_back({k.first, k.second, w});
        if (!eq.products.empty()) out.push_back(std::move(eq));
      }
  return out;
}

void add_coquasitriangular_commutation(LinearSystem& sys, const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<LinearSystem::Row> rows(n);
      for (const auto& x : h.comult(a))
        for (const auto& y : h.comult(b)) {
          Scalar c = x.coeff * y.coeff;
          auto pl = h.product(x.idx[1], y.idx[1]);
          auto pr = h.product(y.idx[0], x.idx[0]);
          for (std::size_t k = 0; k < n; ++k) {
            if (!pl[k].is_zero()) rows[k].push_back({var(x.idx[0], y.idx[0], n), c * pl[k]});
            if (!pr[k].is_zero()) rows[k].push_back({var(x.idx[1], y.idx[1], n), -(c * pr[k])});
          }
        }
      for (auto& r : rows)
        if (!r.empty()) sys.add(r, Scalar::zero(f));
    }
}

std::vector<QuadraticEquation> coquasitriangular_equations(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field f = h.field();
  std::vector<QuadraticEquation> out;
  auto finish = [&](std::map<std::pair<std::size_t, std::size_t>, Scalar>& quad, std::map<std::size_t, Scalar>& lin) {
    QuadraticEquation eq{{}, {}, Scalar::zero(f)};
    for (auto& [k, w] : quad)
      if (!w.is_zero()) eq.products.push_back({k.first, k.second, w});
    for (auto& [k, w] : lin)
      if (!w.is_zero()) eq.linear.push_back({k, w});
    if (!eq.products.empty() || !eq.linear.empty()) out.push_back(std::move(eq));
  };
  auto add = [](auto& acc, auto key, const Scalar& w) {
    auto [it, ins] = acc.try_emplace(key, w);
    if (!ins) it->second += w;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        // r(ab, c) - r(a, c_1) r(b, c_2)
        std::map<std::pair<std::size_t, std::size_t>, Scalar> quad;
        std::map<std::size_t, Scalar> lin;
        auto p = h.product(a, b);
        for (std::size_t m = 0; m < n; ++m)
          if (!p[m].is_zero()) add(lin, var(m, c, n), p[m]);
        for (const auto& z : h.comult(c)) {
          std::size_t u = var(a, z.idx[0], n), v = var(b, z.idx[1], n);
          add(quad, std::pair{std::min(u, v), std::max(u, v)}, -z.coeff);
        }
        finish(quad, lin);
        // r(a, bc) - r(a_1, c) r(a_2, b)
        quad.clear();
        lin.clear();
        p = h.product(b, c);
        for (std::size_t m = 0; m < n; ++m)
          if (!p[m].is_zero()) add(lin, var(a, m, n), p[m]);
        for (const auto& x : h.comult(a)) {
          std::size_t u = var(x.idx[0], c, n), v = var(x.idx[1], b, n);
          add(quad, std::pair{std::min(u, v), std::max(u, v)}, -x.coeff);
        }
        finish(quad, lin);
      }
  return out;
}

std::vector<std::size_t> grouplike_pairs(const HopfAlgebra& h) {
  std::vector<std::size_t> out;
  for (std::size_t g : h.grouplike_basis())
    for (std::size_t k : h.grouplike_basis()) out.push_back(var(g, k, h.dim()));
  return out;
}

std::vector<LinearForm> element_enumeration(const HopfPtr& h, bool lazy, const EnumerationOptions& opt) {
  const std::size_t n = h->dim();
  const Field f = h->field();
  LinearSystem sys(f, n);
  LinearSystem::Row unit;
  for (std::size_t i = 0; i < n; ++i)
    if (!h->unit()[i].is_zero()) unit.push_back({i, h->unit()[i]});
  sys.add(unit, Scalar::one(f));
  if (lazy)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<LinearSystem::Row> rows(n);
      for (const auto& t : h->comult(i)) {
        rows[t.idx[1]].push_back({t.idx[0], t.coeff});
        rows[t.idx[0]].push_back({t.idx[1], -t.coeff});
      }
      for (auto& r : rows)
        if (!r.empty()) sys.add(r, Scalar::zero(f));
    }
  // grouplike g needs gamma(g) != 0
  auto res = exact::enumerate_points(sys, {}, h->grouplike_basis(), opt.max_affine_dim);
  std::vector<LinearForm> out;
  for (auto& v : res.points) {
    LinearForm g{h, v};
    if (convolution_inverse(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<LinearForm> enumerate_regular_elements(const HopfPtr& h, const EnumerationOptions& opt) {
  return element_enumeration(h, false, opt);
}

std::vector<LinearForm> enumerate_lazy_elements(const HopfPtr& h, const EnumerationOptions& opt) {
  return element_enumeration(h, true, opt);
}

std::vector<BilinearForm> enumerate_lazy_cocycles(const HopfPtr& h, const EnumerationOptions& opt) {
  const std::size_t n = h->dim();
  const Field f = h->field();
  LinearSystem sys(f, n * n);
  add_normalization(sys, *h);
  add_laziness(sys, *h);
  auto res = exact::enumerate_points(sys, left_cocycle_equations(*h), grouplike_pairs(*h), opt.max_affine_dim);
  std::vector<BilinearForm> out;
  for (auto& v : res.points) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[var(i, j, n)];
    BilinearForm s{h, m};
    if (convolution_inverse(s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<BilinearForm> enumerate_coquasitriangular(const HopfPtr& h, const EnumerationOptions& opt) {
  const std::size_t n = h->dim();
  const Field f = h->field();
  LinearSystem sys(f, n * n);
  add_normalization(sys, *h);
  add_coquasitriangular_commutation(sys, *h);
  auto res = exact::enumerate_points(sys, coquasitriangular_equations(*h), grouplike_pairs(*h), opt.max_affine_dim);
  std::vector<BilinearForm> out;
  for (auto& v : res.points) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[var(i, j, n)];
    BilinearForm r{h, m};
    if (convolution_inverse(r)) out.push_back(std::move(r));
  }
  return out;
}

std::string form_key(const LinearForm& g) {
  std::string k;
  for (const auto& c : g.coeffs) k += c.to_string() + ",";
  return k;
}

std::string form_key(const BilinearForm& s) {
  std::string k;
  for (std::size_t i = 0; i < s.coeffs.rows(); ++i)
    for (std::size_t j = 0; j < s.coeffs.cols(); ++j) k += s(i, j).to_string() + ",";
  return k;
}

CocycleClassification classify(const HopfPtr& h, const std::string& label, const EnumerationOptions& opt) {
  CocycleClassification c;
  c.field = h->field();
  c.algebra = label;
  c.lazy = enumerate_lazy_cocycles(h, opt);
  for (const auto& s : c.lazy) {
    if (is_pure(s).passed()) c.pure.push_back(s);
    if (is_neat(s).passed()) c.neat.push_back(s);
  }
  c.lazy_elements = enumerate_lazy_elements(h, opt);
  std::map<std::string, BilinearForm> bs;
  for (const auto& g : c.lazy_elements) {
    auto b = d1(g);
    bs.emplace(form_key(b), b);
  }
  for (auto& [k, b] : bs) c.coboundaries.push_back(b);
  std::sort(c.coboundaries.begin(), c.coboundaries.end(),
            [](const BilinearForm& a, const BilinearForm& b) { return canonical_less(a, b); });

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < c.lazy.size(); ++i) index.emplace(form_key(c.lazy[i]), i);
  std::vector<bool> seen(c.lazy.size(), false);
  for (std::size_t i = 0; i < c.lazy.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> coset;
    for (const auto& b : c.coboundaries) {
      auto it = index.find(form_key(convolve(c.lazy[i], b)));
      if (it == index.end())
        throw Error(ErrorCode::axiom_violation, "sigma * beta left the enumerated lazy cocycles");
      coset.insert(it->second);
    }
    for (auto k : coset) seen[k] = true;
    c.cosets.emplace_back(coset.begin(), coset.end());
  }
  c.h2l_order = c.cosets.size();
  return c;
}

CheckReport check_classification(const CocycleClassification& c) {
  auto keys = [](const std::vector<BilinearForm>& v) {
    std::set<std::string> k;
    for (const auto& s : v) k.insert(form_key(s));
    return k;
  };
  auto lazy = keys(c.lazy), pure = keys(c.pure), neat = keys(c.neat), cob = keys(c.coboundaries);
  auto subset = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto fail = [](const std::string& what, std::size_t l, std::size_t r) {
    return CheckReport::fail("classification", {{}, {Scalar::from_int(Field::rational(), static_cast<long long>(l))},
                                                {Scalar::from_int(Field::rational(), static_cast<long long>(r))}, what});
  };
  if (!subset(neat, pure)) return fail("Z2_NL not inside Z2_PL (sizes)", neat.size(), pure.size());
  if (!subset(pure, lazy)) return fail("Z2_PL not inside Z2_L (sizes)", pure.size(), lazy.size());
  if (!subset(cob, lazy)) return fail("B2_L not inside Z2_L (sizes)", cob.size(), lazy.size());
  for (const auto& coset : c.cosets)
    if (coset.size() != c.coboundaries.size()) return fail("coset size vs |B2_L|", coset.size(), c.coboundaries.size());
  if (c.h2l_order * c.coboundaries.size() != c.lazy.size())
    return fail("h2l_order * |B2_L| vs |Z2_L|", c.h2l_order * c.coboundaries.size(), c.lazy.size());
  return CheckReport::pass("classification");
}

}  // namespace hopflab
