#include <random>

#include "doctest.h"
#include "hopflab/catalog.hpp"
#include "hopflab/core/comodule.hpp"
#include "hopflab/core/forms.hpp"
#include "hopflab/error.hpp"

using namespace hopflab;

namespace {

Scalar s(Field f, long long v) { return Scalar::from_int(f, v); }

BilinearForm kz2_sigma(const HopfPtr& h, long long beta) {
  Matrix m(h->field(), 2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = Scalar::one(h->field());
  m(1, 1) = s(h->field(), beta);
  return {h, m};
}

template <class Form>
Form random_form(const HopfPtr& h, std::mt19937& rng);

template <>
BilinearForm random_form(const HopfPtr& h, std::mt19937& rng) {
  Matrix m(h->field(), h->dim(), h->dim());
  for (std::size_t i = 0; i < h->dim(); ++i)
    for (std::size_t j = 0; j < h->dim(); ++j) m(i, j) = s(h->field(), static_cast<long long>(rng() % 7));
  return {h, m};
}

template <>
LinearForm random_form(const HopfPtr& h, std::mt19937& rng) {
  Vector v(h->field(), h->dim());
  for (std::size_t i = 0; i < h->dim(); ++i) v[i] = s(h->field(), static_cast<long long>(rng() % 7));
  return {h, v};
}

}  // namespace

TEST_CASE("catalog algebras satisfy the Hopf axioms") {
  for (Field f : {Field::rational(), Field::prime(3), Field::prime(5)})
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::algebra) continue;
      auto h = catalog_algebra(e.name, f);
      INFO(e.name << " over " << f.tag());
      CHECK(verify_hopf(*h).passed());
    }
}

TEST_CASE("H4 matches its presentation") {
  const Field f = Field::rational();
  auto h = sweedler_h4(f);
  Vector one = h->basis(0), g = h->basis(1), x = h->basis(2), xg = h->basis(3);
  CHECK(h->multiply(g, g) == one);
  CHECK(h->multiply(x, x).is_zero());
  CHECK(h->multiply(x, g) == xg);
  CHECK(h->multiply(g, x) == xg.scaled(s(f, -1)));
  CHECK(h->grouplike_basis() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("corrupted antipode is caught at x") {
  const Field f = Field::rational();
  auto t = sweedler_h4(f)->tables();
  t.antipode(2, 3) = Scalar::zero(f);
  t.antipode(2, 2) = Scalar::one(f);
  auto bad = make_hopf(t);
  auto r = verify_hopf(*bad);
  REQUIRE(r.failed());
  CHECK(r.condition == "antipode");
  REQUIRE(r.witness);
  CHECK(r.witness->indices == std::vector<std::size_t>{2});
  // S(x) x_? by hand: S(x) 1 + S(g) x = x + gx = x - xg
  CHECK(r.witness->lhs == std::vector<Scalar>{s(f, 0), s(f, 0), s(f, 1), s(f, -1)});
  CHECK(r.witness->rhs == std::vector<Scalar>{s(f, 0), s(f, 0), s(f, 0), s(f, 0)});
}

TEST_CASE("shape errors") {
  auto t = sweedler_h4(Field::rational())->tables();
  t.mult.pop_back();
  CHECK_THROWS_AS(make_hopf(t), Error);
  auto u = sweedler_h4(Field::rational())->tables();
  u.unit = Vector(Field::prime(3), 4);
  CHECK_THROWS_AS(make_hopf(u), Error);
}

TEST_CASE("sweedler_power") {
  const Field f = Field::rational();
  auto kz2 = cyclic_group_algebra(f, 2);
  auto p = sweedler_power(*kz2, kz2->basis(1), 3);
  REQUIRE(p.size() == 1);
  CHECK(p[0].factors == std::vector<std::size_t>{1, 1, 1});
  CHECK(p[0].coeff.is_one());

  auto h = sweedler_h4(f);
  auto d = sweedler_power(*h, h->basis(2), 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0].factors == std::vector<std::size_t>{1, 2});  // g (x) x
  CHECK(d[1].factors == std::vector<std::size_t>{2, 0});  // x (x) 1
  auto one = sweedler_power(*h, h->basis(3), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].factors == std::vector<std::size_t>{3});

  for (const auto& name : {"h4", "dual-h4", "ks3", "dual-ks3"}) {
    auto a = catalog_algebra(name, Field::prime(5));
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (int r = 1; r <= 5; ++r) {
        auto l = sweedler_power(*a, a->basis(i), r, SplitOrder::first_factor);
        auto m = sweedler_power(*a, a->basis(i), r, SplitOrder::last_factor);
        REQUIRE(l.size() == m.size());
        for (std::size_t k = 0; k < l.size(); ++k) {
          CHECK(l[k].factors == m[k].factors);
          CHECK(l[k].coeff == m[k].coeff);
        }
      }
  }
}

TEST_CASE("convolution on kZ2") {
  const Field f = Field::prime(5);
  auto h = cyclic_group_algebra(f, 2);
  auto e = counit_form(h);
  CHECK(convolve(e, e) == e);
  auto ee = trivial_bilinear(h);
  CHECK(convolve(ee, ee) == ee);
  for (long long b = 1; b < 5; ++b)
    for (long long c = 1; c < 5; ++c) CHECK(convolve(kz2_sigma(h, b), kz2_sigma(h, c)) == kz2_sigma(h, b * c));
  auto inv = convolution_inverse(kz2_sigma(h, 2));
  REQUIRE(inv);
  CHECK(*inv == kz2_sigma(h, 3));
  CHECK(*convolution_inverse(ee) == ee);
  Matrix z(f, 2, 2);
  z(0, 1) = z(1, 0) = z(1, 1) = Scalar::one(f);
  CHECK_FALSE(convolution_inverse(BilinearForm{h, z}));
  CHECK_FALSE(convolution_inverse(kz2_sigma(h, 0)));
}

TEST_CASE("convolution is associative with unit; inverses are two-sided") {
  std::mt19937 rng(3);
  for (const auto& name : {"h4", "dual-h4", "ks3"}) {
    auto h = catalog_algebra(name, Field::prime(7));
    auto e = counit_form(h);
    auto ee = trivial_bilinear(h);
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_form<LinearForm>(h, rng), b = random_form<LinearForm>(h, rng), c = random_form<LinearForm>(h, rng);
      CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
      CHECK(convolve(a, e) == a);
      CHECK(convolve(e, a) == a);
      if (auto ai = convolution_inverse(a)) {
        CHECK(convolve(a, *ai) == e);
        CHECK(convolve(*ai, a) == e);
      }
      auto x = random_form<BilinearForm>(h, rng), y = random_form<BilinearForm>(h, rng), z = random_form<BilinearForm>(h, rng);
      CHECK(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)));
      CHECK(convolve(x, ee) == x);
      CHECK(convolve(ee, x) == x);
      if (auto xi = convolution_inverse(x)) {
        CHECK(convolve(x, *xi) == ee);
        CHECK(convolve(*xi, x) == ee);
      }
    }
  }
}

TEST_CASE("dual Hopf algebras") {
  for (Field f : {Field::rational(), Field::prime(3)}) {
    auto kz2 = cyclic_group_algebra(f, 2);
    auto d = dual_hopf(*kz2);
    CHECK(verify_hopf(*d).passed());
    // functions on Z2: delta_1 and delta_g are orthogonal idempotents
    CHECK(d->multiply(d->basis(0), d->basis(0)) == d->basis(0));
    CHECK(d->multiply(d->basis(0), d->basis(1)).is_zero());
    for (const auto& name : {"kz3", "ks3", "h4"}) {
      auto h = catalog_algebra(name, f);
      CHECK(verify_hopf(*dual_hopf(*h)).passed());
      CHECK(verify_hopf(*dual_hopf(*h, true)).passed());
      CHECK(same_structure_constants(*dual_hopf(*dual_hopf(*h)), *h));
    }
  }
}

TEST_CASE("comodules") {
  for (const auto& name : {"kz2", "h4", "dual-ks3"}) {
    auto h = catalog_algebra(name, Field::prime(5));
    auto r = regular_comodule(h);
    CHECK(verify_comodule(r).passed());
    auto rr = tensor_comodule(r, r);
    CHECK(rr.dim == h->dim() * h->dim());
    CHECK(verify_comodule(rr).passed());
    auto t = trivial_comodule(h);
    CHECK(same_coaction(tensor_comodule(r, t), r));
    CHECK(same_coaction(tensor_comodule(t, r), r));
  }
  auto h = sweedler_h4(Field::prime(5));
  Comodule broken = regular_comodule(h);
  broken.coaction[2] = {{2, 0, Scalar::one(h->field())}};
  broken.coaction[2].push_back({0, 2, Scalar::one(h->field())});
  broken.coaction[2].push_back({0, 0, Scalar::one(h->field())});
  CHECK(verify_comodule(broken).failed());
}
