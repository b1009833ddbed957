#include <map>
#include <set>

#include "doctest.h"
#include "hopflab/catalog.hpp"
#include "hopflab/cocycle/enumerate.hpp"
#include "hopflab/cocycle/predicates.hpp"
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

LinearForm kz2_gamma(const HopfPtr& h, long long c) {
  return {h, Vector(h->field(), {Scalar::one(h->field()), s(h->field(), c)})};
}

std::set<std::string> keys(const std::vector<BilinearForm>& v) {
  std::set<std::string> out;
  for (const auto& x : v) out.insert(form_key(x));
  return out;
}

// Independent oracle: every normalized form on H4 over F_3 (nine free entries),
// tested directly against the defining identities.
std::set<std::string> brute_force_h4_lazy_cocycles(const HopfPtr& h) {
  const Field f = h->field();
  std::set<std::string> out;
  for (int code = 0; code < 19683; ++code) {
    Matrix m(f, 4, 4);
    m(0, 0) = m(0, 1) = m(1, 0) = Scalar::one(f);
    int c = code;
    for (std::size_t i = 1; i < 4; ++i)
      for (std::size_t j = 1; j < 4; ++j) {
        m(i, j) = s(f, c % 3);
        c /= 3;
      }
    BilinearForm sg{h, m};
    if (!is_lazy_cocycle_condition(sg).passed()) continue;
    if (!is_left_2cocycle(sg).passed()) continue;
    if (!convolution_inverse(sg)) continue;
    out.insert(form_key(sg));
  }
  return out;
}

}  // namespace

TEST_CASE("cocycle predicates on trivial and group-algebra forms") {
  for (const auto& name : {"k", "kz2", "h4", "ks3", "dual-ks3"}) {
    auto h = catalog_algebra(name, Field::prime(5));
    auto ee = trivial_bilinear(h);
    auto e = counit_form(h);
    CHECK(is_left_2cocycle(ee).passed());
    CHECK(is_right_2cocycle(ee).passed());
    CHECK(is_lazy_cocycle_condition(ee).passed());
    CHECK(is_pure(ee).passed());
    CHECK(is_neat(ee).passed());
    CHECK(is_lazy_element(e).passed());
    CHECK(is_pure_element(e).passed());
    CHECK(is_neat_element(e).passed());
    CHECK(is_strongly_neat_element(e).passed());
    CHECK(d1(e) == ee);
    CHECK(left_right_inverse_check(ee).passed());
    CHECK(twisted_algebra(ee, Side::left) == algebra_table(*h));
  }
  auto h = cyclic_group_algebra(Field::prime(5), 2);
  for (long long b = 1; b < 5; ++b) {
    auto sg = kz2_sigma(h, b);
    CHECK(is_left_2cocycle(sg).passed());
    CHECK(is_pure(sg).passed());
    CHECK(is_neat(sg).passed());
    CHECK(left_right_inverse_check(sg).passed());
    auto t = twisted_algebra(sg, Side::left);
    CHECK(t.at(1, 1, 0) == s(h->field(), b));
    CHECK(t.at(1, 1, 1).is_zero());
    auto g = kz2_gamma(h, b);
    CHECK(is_neat_element(g).passed());
    CHECK(is_strongly_neat_element(g).passed());
    CHECK(d1(g)(1, 1) == s(h->field(), b * b));
  }
  // any normalized form on a group algebra is lazy and neat
  auto s3 = symmetric_group_s3(Field::prime(7));
  Matrix m(s3->field(), 6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = (i == 0 || j == 0) ? Scalar::one(s3->field()) : s(s3->field(), static_cast<long long>(i * 3 + j));
  BilinearForm any{s3, m};
  CHECK(is_lazy_cocycle_condition(any).passed());
  CHECK(is_neat(any).passed());
}

TEST_CASE("the H4 form with gamma(g) = -1 is not lazy") {
  auto h = sweedler_h4(Field::prime(5));
  const Field f = h->field();
  LinearForm g{h, Vector(f, {s(f, 1), s(f, -1), s(f, 0), s(f, 0)})};
  auto r = is_lazy_element(g);
  REQUIRE(r.failed());
  CHECK(r.witness->indices == std::vector<std::size_t>{2});
  // gamma(x_1) x_2 = gamma(x) 1 + gamma(g) x = -x ; x_1 gamma(x_2) = x gamma(1) + g gamma(x) = x
  CHECK(r.witness->lhs == std::vector<Scalar>{s(f, 0), s(f, 0), s(f, -1), s(f, 0)});
  CHECK(r.witness->rhs == std::vector<Scalar>{s(f, 0), s(f, 0), s(f, 1), s(f, 0)});
  auto lazy = enumerate_lazy_elements(h);
  REQUIRE(lazy.size() == 1);
  CHECK(lazy[0] == counit_form(h));
}

TEST_CASE("non-invertible inputs") {
  auto h = cyclic_group_algebra(Field::prime(5), 2);
  CHECK_THROWS_AS(is_pure(kz2_sigma(h, 0)), Error);
  CHECK_THROWS_AS(d1(kz2_gamma(h, 0)), Error);
  CHECK_THROWS_AS(is_pure_element(kz2_gamma(h, 0)), Error);
  CHECK_THROWS_AS(left_right_inverse_check(kz2_sigma(h, 0)), Error);
}

TEST_CASE("twisted algebra rejects non-cocycles") {
  auto h = sweedler_h4(Field::prime(5));
  Matrix m = trivial_bilinear(h).coeffs;
  m(2, 2) = Scalar::one(h->field());  // sigma(x, x) = 1 alone breaks the cocycle identity
  BilinearForm bad{h, m};
  CHECK(is_left_2cocycle(bad).failed());
  CHECK_THROWS_AS(twisted_algebra(bad, Side::left), Error);
}

TEST_CASE("enumeration on kZ2 and the cap") {
  auto h = cyclic_group_algebra(Field::prime(5), 2);
  auto z = enumerate_lazy_cocycles(h);
  REQUIRE(z.size() == 4);
  for (long long b = 1; b < 5; ++b) CHECK(z[static_cast<std::size_t>(b - 1)] == kz2_sigma(h, b));
  auto g3 = enumerate_lazy_elements(cyclic_group_algebra(Field::prime(3), 2));
  REQUIRE(g3.size() == 2);
  CHECK(g3[0](1) == s(Field::prime(3), 1));
  CHECK(g3[1](1) == s(Field::prime(3), 2));
  EnumerationOptions tight;
  tight.max_affine_dim = 3;
  try {
    enumerate_lazy_cocycles(symmetric_group_s3(Field::prime(3)), tight);
    FAIL("expected EnumerationTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::enumeration_too_large);
    CHECK(std::string(e.what()).find("25") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_lazy_cocycles(cyclic_group_algebra(Field::rational(), 2)), Error);
}

TEST_CASE("H4 enumeration agrees with brute force over F3") {
  auto h = sweedler_h4(Field::prime(3));
  auto z = enumerate_lazy_cocycles(h);
  CHECK(z.size() == 3);
  CHECK(keys(z) == brute_force_h4_lazy_cocycles(h));
  CHECK(enumerate_lazy_cocycles(sweedler_h4(Field::prime(5))).size() == 5);
  for (const auto& sg : z) {
    CHECK(is_left_2cocycle(sg).passed());
    CHECK(is_right_2cocycle(sg).passed());
    CHECK(is_neat(sg).passed());
    CHECK(is_pure(sg).passed());
    CHECK(left_right_inverse_check(sg).passed());
    CHECK(twisted_algebra(sg, Side::left) == twisted_algebra(sg, Side::right));
  }
}

TEST_CASE("group 2-cocycle counts on kS3") {
  // normalized cocycles = |B^2| |H^2| with |B^2| = (q-1)^5 / |Hom(S3, k^x)| and H^2(S3, k^x) = Z2
  for (unsigned p : {3u, 5u}) {
    EnumerationOptions wide;
    wide.max_affine_dim = 25;
    auto h = symmetric_group_s3(Field::prime(p));
    auto z = enumerate_lazy_cocycles(h, wide);
    std::size_t units5 = 1;
    for (int i = 0; i < 5; ++i) units5 *= p - 1;
    CHECK(z.size() == units5 / 2 * 2);
  }
}

TEST_CASE("classification invariants") {
  {
    auto h = cyclic_group_algebra(Field::prime(5), 2);
    auto c = classify(h, "kz2");
    CHECK(c.lazy.size() == 4);
    CHECK(c.pure.size() == 4);
    CHECK(c.neat.size() == 4);
    REQUIRE(c.coboundaries.size() == 2);
    CHECK(c.coboundaries[0] == kz2_sigma(h, 1));
    CHECK(c.coboundaries[1] == kz2_sigma(h, 4));
    CHECK(c.h2l_order == 2);
    CHECK(check_classification(c).passed());
  }
  for (unsigned p : {2u, 3u, 5u}) {
    auto c = classify(trivial_hopf(Field::prime(p)), "k");
    CHECK(c.lazy.size() == 1);
    CHECK(c.coboundaries.size() == 1);
    CHECK(c.h2l_order == 1);
  }
  for (unsigned p : {3u, 5u}) {
    auto c = classify(sweedler_h4(Field::prime(p)), "h4");
    CHECK(!c.lazy.empty());
    CHECK(keys(c.neat) == keys(c.lazy));
    CHECK(keys(c.pure) == keys(c.lazy));
    CHECK(check_classification(c).passed());
  }
}

TEST_CASE("group laws on enumerated sets") {
  EnumerationOptions wide;
  wide.max_affine_dim = 25;
  for (const auto& name : {"kz4", "h4", "dual-h4", "dual-ks3", "ks3"}) {
    auto h = catalog_algebra(name, Field::prime(3));
    INFO(name);
    auto z = enumerate_lazy_cocycles(h, wide);
    auto zk = keys(z);
    CHECK(zk.count(form_key(trivial_bilinear(h))) == 1);
    for (const auto& a : z) {
      CHECK(zk.count(form_key(require_inverse(a))) == 1);
      for (const auto& b : z) CHECK(zk.count(form_key(convolve(a, b))) == 1);
    }
    auto lazy = enumerate_lazy_elements(h, wide);
    std::vector<BilinearForm> bl;
    for (const auto& g : lazy) bl.push_back(d1(g));
    for (const auto& a : z)
      for (const auto& b : bl) CHECK(convolve(a, b) == convolve(b, a));
    for (const auto& g : lazy)
      for (const auto& k : lazy) CHECK(d1(convolve(g, k)) == convolve(d1(g), d1(k)));
    auto reg = enumerate_regular_elements(h, wide);
    for (const auto& g : lazy)
      for (const auto& r : reg) CHECK(convolve(g, r) == convolve(r, g));
    for (const auto& a : z)
      if (is_neat(a).passed()) CHECK(is_pure(a).passed());
    for (const auto& a : z) CHECK(twisted_table(a, Side::left) == twisted_table(a, Side::right));
  }
}

TEST_CASE("element conditions over enumerations") {
  for (const auto& name : {"h4", "kz3", "dual-ks3"}) {
    auto h = catalog_algebra(name, Field::prime(3));
    for (const auto& g : enumerate_regular_elements(h)) {
      if (is_strongly_neat_element(g).passed()) {
        CHECK(is_lazy_element(g).passed());
        CHECK(is_neat_element(g).passed());
      }
      if (is_lazy_element(g).passed() && is_neat_element(g).passed()) {
        CHECK(is_pure_element(g).passed());
        auto b = d1(g);
        CHECK(is_lazy_cocycle_condition(b).passed());
        CHECK(is_neat(b).passed());
      }
      if (is_lazy_element(g).passed()) {
        auto b = d1(g);
        CHECK(is_left_2cocycle(b).passed());
        CHECK(is_lazy_cocycle_condition(b).passed());
      }
    }
  }
}
