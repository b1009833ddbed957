#include <random>

#include "doctest.h"
#include "hopflab/error.hpp"
#include "hopflab/exact/matrix.hpp"

using namespace hopflab;
using namespace hopflab::exact;

namespace {

Scalar random_scalar(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 12);
  return f.is_rational() ? Scalar::from_fraction(f, num(rng), den(rng)) : Scalar::from_int(f, num(rng));
}

}  // namespace

TEST_CASE("rational and residue arithmetic") {
  const Field q = Field::rational();
  CHECK(Scalar::from_fraction(q, 1, 2) + Scalar::from_fraction(q, 1, 3) == Scalar::from_fraction(q, 5, 6));
  CHECK((Scalar::from_fraction(q, 1, 2) + Scalar::from_fraction(q, 1, 3)).to_string() == "5/6");
  CHECK(Scalar::from_fraction(q, 4, -6).to_string() == "-2/3");
  const Field f5 = Field::prime(5);
  CHECK(Scalar::from_int(f5, 2).inverse() == Scalar::from_int(f5, 3));
  CHECK(Scalar::from_int(f5, -1).to_string() == "4");
  CHECK_THROWS_AS(Scalar::zero(f5).inverse(), Error);
  try {
    (void)Scalar::zero(q).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
  }
  try {
    (void)(Scalar::one(q) + Scalar::one(f5));
    FAIL("mixed fields must throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::field_mismatch);
  }
}

TEST_CASE("field tags and parsing") {
  CHECK(Field::parse("rational") == Field::rational());
  CHECK(Field::parse("fp:7") == Field::prime(7));
  CHECK_THROWS_AS(Field::parse("fp:6"), Error);
  CHECK(Field::prime(7).tag() == "fp:7");
  CHECK(Scalar::parse(Field::rational(), "-3/9").to_string() == "-1/3");
  CHECK(Scalar::parse(Field::prime(7), "10") == Scalar::from_int(Field::prime(7), 3));
}

TEST_CASE("field axioms on sampled scalars") {
  std::mt19937 rng(17);
  for (Field f : {Field::rational(), Field::prime(3), Field::prime(5), Field::prime(101)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("solve_linear and kernel_basis") {
  const Field q = Field::rational();
  auto id = Matrix::identity(q, 2);
  Vector b(q, {Scalar::from_int(q, 1), Scalar::from_int(q, 2)});
  auto x = solve_linear(id, b);
  REQUIRE(x);
  CHECK(*x == b);

  const Field f3 = Field::prime(3);
  auto k = kernel_basis(Matrix::from_rows(f3, {{Scalar::one(f3), Scalar::one(f3)}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector(f3, {Scalar::from_int(f3, 1), Scalar::from_int(f3, 2)}));

  auto singular = Matrix::from_rows(q, {{Scalar::one(q), Scalar::one(q)}, {Scalar::one(q), Scalar::one(q)}});
  CHECK_FALSE(solve_linear(singular, Vector(q, {Scalar::one(q), Scalar::zero(q)})));
  CHECK_THROWS_AS(solve_linear(singular, Vector(q, 3)), Error);
}

TEST_CASE("random systems: solutions and kernels verify exactly") {
  std::mt19937 rng(5);
  for (Field f : {Field::rational(), Field::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Matrix a(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a(i, j) = rng() % 3 == 0 ? Scalar::zero(f) : random_scalar(f, rng);
      Vector b(f, r);
      for (std::size_t i = 0; i < r; ++i) b[i] = random_scalar(f, rng);
      if (auto x = solve_linear(a, b)) CHECK(a * *x == b);
      auto kernel = kernel_basis(a);
      CHECK(kernel.size() + rank(a) == c);
      for (const auto& v : kernel) CHECK((a * v).is_zero());
      if (r == c) {
        auto inv = inverse(a);
        CHECK(inv.has_value() == !determinant(a).is_zero());
        if (inv) CHECK(a * *inv == Matrix::identity(f, r));
      }
    }
  }
}

TEST_CASE("LinearSystem parametrizes the solution set") {
  const Field f = Field::prime(5);
  LinearSystem sys(f, 3);
  sys.add({{0, Scalar::one(f)}, {1, Scalar::one(f)}}, Scalar::from_int(f, 2));
  sys.add({{0, Scalar::from_int(f, 2)}, {1, Scalar::from_int(f, 2)}}, Scalar::from_int(f, 4));
  REQUIRE(sys.consistent());
  CHECK(sys.rank() == 1);
  auto space = sys.solve();
  REQUIRE(space);
  CHECK(space->dimension() == 2);
  for (long long s = 0; s < 5; ++s)
    for (long long t = 0; t < 5; ++t) {
      std::vector<Scalar> params = {Scalar::from_int(f, s), Scalar::from_int(f, t)};
      Vector p = space->point(params);
      CHECK(p[0] + p[1] == Scalar::from_int(f, 2));
      for (std::size_t i = 0; i < 2; ++i) CHECK(p[space->free_columns[i]] == params[i]);
    }
  sys.add({{0, Scalar::one(f)}, {1, Scalar::one(f)}}, Scalar::from_int(f, 3));
  CHECK_FALSE(sys.consistent());
  CHECK_FALSE(sys.solve());
}

TEST_CASE("tensor_index is a bijection") {
  CHECK(tensor_index(1, 2, 4) == 6);
  CHECK(tensor_index(0, 0, 7) == 0);
  CHECK(tensor_unindex(15, 4) == std::pair<std::size_t, std::size_t>{3, 3});
  for (std::size_t n = 1; n < 6; ++n)
    for (std::size_t flat = 0; flat < n * n; ++flat) {
      auto [i, j] = tensor_unindex(flat, n);
      CHECK(tensor_index(i, j, n) == flat);
    }
  CHECK_THROWS_AS(tensor_index(4, 0, 4), Error);
  CHECK_THROWS_AS(tensor_unindex(16, 4), Error);
}
