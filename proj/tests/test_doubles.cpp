#include <array>
#include <set>

#include "doctest.h"
#include "hopflab/catalog.hpp"
#include "hopflab/cocycle/enumerate.hpp"
#include "hopflab/doubles/double.hpp"
#include "hopflab/error.hpp"

using namespace hopflab;

namespace {

Scalar s(Field f, long long v) { return Scalar::from_int(f, v); }

Vector random_vector(Field f, std::size_t n, unsigned& seed) {
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    seed = seed * 1103515245u + 12345u;
    v[i] = s(f, (seed >> 16) % 97);
  }
  return v;
}

bool is_grouplike(const HopfAlgebra& h, const Vector& x) {
  if (!(h.counit_of(x) == Scalar::one(h.field()))) return false;
  const std::size_t n = h.dim();
  std::vector<Scalar> lhs(n * n, Scalar::zero(h.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : h.comult(i)) lhs[t.idx[0] * n + t.idx[1]] += x[i] * t.coeff;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(lhs[i * n + j] == x[i] * x[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("harpoons") {
  const Field f = Field::prime(5);
  auto h = cyclic_group_algebra(f, 2);
  Vector d1(f, {s(f, 1), s(f, 0)});
  CHECK(harpoon_left(*h, h->basis(1), d1) == Vector(f, {s(f, 0), s(f, 1)}));
  CHECK(harpoon_right(*h, d1, h->basis(1)) == Vector(f, {s(f, 0), s(f, 1)}));
  unsigned seed = 7;
  for (const auto& name : {"h4", "ks3", "dual-ks3"}) {
    auto a = catalog_algebra(name, f);
    const std::size_t n = a->dim();
    for (int rep = 0; rep < 5; ++rep) {
      Vector p = random_vector(f, n, seed);
      Vector x = random_vector(f, n, seed);
      CHECK(harpoon_left(*a, a->unit(), p) == p);
      CHECK(harpoon_right(*a, p, a->unit()) == p);
      Vector l = harpoon_left(*a, x, p);
      Vector r = harpoon_right(*a, p, x);
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(l[k] == LinearForm(a, p).eval(a->multiply(a->basis(k), x)));
        CHECK(r[k] == LinearForm(a, p).eval(a->multiply(x, a->basis(k))));
      }
    }
  }
  CHECK_THROWS_AS(harpoon_left(*h, Vector(f, 3), d1), Error);
}

TEST_CASE("doubles of catalog algebras") {
  for (auto f : {Field::prime(5), Field::rational()})
    for (const auto& name : {"k", "kz2", "kz3", "h4", "dual-h4", "ks3", "dual-ks3"}) {
      INFO(name << " over " << f.tag());
      auto h = catalog_algebra(name, f);
      auto d = drinfeld_double(h);
      const std::size_t n = h->dim();
      REQUIRE(d->dim() == n * n);
      CHECK(verify_hopf(*d).passed());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          CHECK(d->counit()[a * n + b] == h->unit()[a] * h->counit()[b]);
          CHECK(d->unit()[a * n + b] == h->counit()[a] * h->unit()[b]);
        }
    }
  auto k = trivial_hopf(Field::prime(3));
  CHECK(same_structure_constants(*drinfeld_double(k), *k));
}

TEST_CASE("D(kZ2) is the group algebra of Z2 x Z2") {
  const Field f = Field::prime(5);
  auto d = drinfeld_double(cyclic_group_algebra(f, 2));
  CHECK(verify_hopf(*d).passed());
  std::vector<Vector> g;
  for (int code = 0; code < 625; ++code) {
    Vector x(f, 4);
    int c = code;
    for (std::size_t i = 0; i < 4; ++i, c /= 5) x[i] = s(f, c % 5);
    if (is_grouplike(*d, x)) g.push_back(x);
  }
  REQUIRE(g.size() == 4);
  Matrix m(f, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = g[i][j];
  CHECK(exact::rank(m) == 4);
  std::size_t one = 4;
  for (std::size_t i = 0; i < 4; ++i)
    if (g[i] == d->unit()) one = i;
  REQUIRE(one < 4);
  for (const auto& x : g) {
    CHECK(d->multiply(x, x) == d->unit());
    for (const auto& y : g) {
      CHECK(d->multiply(x, y) == d->multiply(y, x));
      bool closed = false;
      for (const auto& z : g) closed = closed || d->multiply(x, y) == z;
      CHECK(closed);
    }
  }
}

TEST_CASE("cocycle extension to the double") {
  {
    auto h = cyclic_group_algebra(Field::prime(5), 2);
    auto d = drinfeld_double(h);
    const Field f = h->field();
    auto ee = extend_cocycle_to_double(trivial_bilinear(h), d);
    CHECK(ee.sigma == trivial_bilinear(d));
    for (long long beta = 1; beta < 5; ++beta) {
      Matrix m = trivial_bilinear(h).coeffs;
      m(1, 1) = s(f, beta);
      BilinearForm sg{h, m};
      auto e = extend_cocycle_to_double(sg, d);
      CHECK(e.inverse_check.passed());
      CHECK(e.cocycle_check.passed());
      CHECK(e.lazy_check.passed());
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t dd = 0; dd < 2; ++dd)
              CHECK(e.sigma(a * 2 + b, c * 2 + dd) == h->unit()[a] * h->unit()[c] * sg(b, dd));
      CHECK(is_neat(e.sigma).passed());
      CHECK(extension_preserves_pure_neat(sg, d).passed());
    }
  }
  auto h = sweedler_h4(Field::prime(3));
  auto d = drinfeld_double(h);
  auto z = enumerate_lazy_cocycles(h);
  REQUIRE(z.size() == 3);
  std::vector<BilinearForm> bars;
  for (const auto& sg : z) {
    auto e = extend_cocycle_to_double(sg, d);
    CHECK(e.inverse_check.passed());
    CHECK(e.cocycle_check.passed());
    CHECK(e.lazy_check.passed());
    CHECK(e.inverse == require_inverse(e.sigma));
    CHECK(is_neat(e.sigma).passed());
    CHECK(is_pure(e.sigma).passed());
    CHECK(extension_preserves_pure_neat(sg, d).passed());
    bars.push_back(e.sigma);
  }
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      CHECK(extension_formula(convolve(z[i], z[j]), d) == convolve(bars[i], bars[j]));
  // grouplike h: sigma-bar(p (x) g, q (x) l) = p(1) q(1) sigma(g, l)
  const std::size_t g = 1;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t l = 0; l < 4; ++l)
        CHECK(bars[1](a * 4 + g, c * 4 + l) == h->unit()[a] * h->unit()[c] * z[1](g, l));
}

TEST_CASE("extension prerequisites") {
  auto h = sweedler_h4(Field::prime(5));
  auto d = drinfeld_double(h);
  Matrix m = trivial_bilinear(h).coeffs;
  m(2, 2) = Scalar::one(h->field());
  try {
    extend_cocycle_to_double(BilinearForm{h, m}, d);
    FAIL("expected PrereqViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::prereq_violated);
  }
  const Field f = h->field();
  LinearForm bad{h, Vector(f, {s(f, 1), s(f, -1), s(f, 0), s(f, 0)})};
  try {
    extend_element_to_double(bad, d);
    FAIL("expected PrereqViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::prereq_violated);
  }
  CHECK_THROWS_AS(extend_element_to_double(counit_form(cyclic_group_algebra(f, 2)), d), Error);
}

TEST_CASE("element extension") {
  {
    auto h = cyclic_group_algebra(Field::prime(5), 2);
    auto d = drinfeld_double(h);
    const Field f = h->field();
    CHECK(extend_element_to_double(counit_form(h), d).gamma == counit_form(d));
    for (long long c = 1; c < 5; ++c) {
      LinearForm g{h, Vector(f, {s(f, 1), s(f, c)})};
      auto e = extend_element_to_double(g, d);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t i = 0; i < 2; ++i) CHECK(e.gamma(a * 2 + i) == h->unit()[a] * (i == 0 ? s(f, 1) : s(f, c)));
      CHECK(e.lazy_check.passed());
      CHECK(e.pure_check.passed());
      CHECK(e.neat_check.passed());
      CHECK(is_neat_element(e.gamma).passed());
    }
  }
  for (const auto& name : {"h4", "dual-h4", "kz3"}) {
    auto h = catalog_algebra(name, Field::prime(3));
    auto d = drinfeld_double(h);
    for (const auto& g : enumerate_lazy_elements(h)) {
      auto e = extend_element_to_double(g, d);
      CHECK(e.lazy_check.passed());
      CHECK(e.pure_check.passed());
      CHECK(e.neat_check.passed());
    }
  }
}

TEST_CASE("coboundaries extend to coboundaries on small doubles") {
  for (const auto& name : {"kz2", "kz3", "h4"}) {
    auto h = catalog_algebra(name, Field::prime(5));
    auto d = drinfeld_double(h);
    std::set<std::string> b_double;
    if (d->dim() <= 4)
      for (const auto& g : enumerate_lazy_elements(d)) b_double.insert(form_key(d1(g)));
    for (const auto& g : enumerate_lazy_elements(h)) {
      CHECK(coboundary_extension_probe(g, d).passed());
      if (!b_double.empty()) CHECK(b_double.count(form_key(extension_formula(d1(g), d))) == 1);
    }
  }
}
