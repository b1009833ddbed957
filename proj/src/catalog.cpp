#include "hopflab/catalog.hpp"

#include <array>

#include "hopflab/error.hpp"

namespace hopflab {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"k", CatalogKind::algebra, "the one-dimensional Hopf algebra"},
      {"kz2", CatalogKind::algebra, "group algebra of Z/2"},
      {"kz3", CatalogKind::algebra, "group algebra of Z/3"},
      {"kz4", CatalogKind::algebra, "group algebra of Z/4"},
      {"ks3", CatalogKind::algebra, "group algebra of S3"},
      {"dual-ks3", CatalogKind::algebra, "functions on S3"},
      {"h4", CatalogKind::algebra, "Sweedler's four-dimensional Hopf algebra, basis 1, g, x, xg"},
      {"dual-h4", CatalogKind::algebra, "dual of H4"},
      {"sweedler-pair", CatalogKind::pair, "H = kZ2 acting on k[x]/(x^2) by g.x = -x, coaction x -> g (x) x"},
  };
  return entries;
}

HopfPtr group_algebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  HopfTables t;
  t.field = f;
  t.dim = n;
  t.labels = std::move(labels);
  t.mult.assign(n * n * n, Scalar::zero(f));
  t.antipode = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.mult[(a * n + b) * n + table[a][b]] = Scalar::one(f);
      if (table[a][b] == 0) t.antipode(a, b) = Scalar::one(f);
    }
  t.unit = Vector::unit(f, n, 0);
  t.counit = Vector(f, std::vector<Scalar>(n, Scalar::one(f)));
  t.comult.resize(n);
  for (std::size_t a = 0; a < n; ++a) t.comult[a].push_back({{a, a}, Scalar::one(f)});
  return make_hopf(std::move(t));
}

HopfPtr cyclic_group_algebra(Field f, std::size_t order) {
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
    for (std::size_t b = 0; b < order; ++b) table[a][b] = (a + b) % order;
  }
  return group_algebra(f, table, labels);
}

HopfPtr symmetric_group_s3(Field f) {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> elems = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int i = 0; i < 3; ++i) c[i] = elems[a][elems[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (elems[k] == c) table[a][b] = k;
    }
  return group_algebra(f, table, labels);
}

HopfPtr trivial_hopf(Field f) { return group_algebra(f, {{0}}, {"1"}); }

HopfPtr sweedler_h4(Field f) {
  enum { one, g, x, xg };
  const std::size_t n = 4;
  HopfTables t;
  t.field = f;
  t.dim = n;
  t.labels = {"1", "g", "x", "xg"};
  t.mult.assign(n * n * n, Scalar::zero(f));
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, long long v) {
    t.mult[(a * n + b) * n + c] = Scalar::from_int(f, v);
  };
  for (std::size_t a = 0; a < n; ++a) {
    set(one, a, a, 1);
    set(a, one, a, 1);
  }
  set(g, g, one, 1);
  set(x, g, xg, 1);
  set(g, x, xg, -1);
  set(xg, g, x, 1);
  set(g, xg, x, -1);
  t.unit = Vector::unit(f, n, one);
  t.counit = Vector(f, {Scalar::one(f), Scalar::one(f), Scalar::zero(f), Scalar::zero(f)});
  const Scalar u = Scalar::one(f);
  t.comult = {{{{one, one}, u}},
              {{{g, g}, u}},
              {{{x, one}, u}, {{g, x}, u}},
              {{{xg, g}, u}, {{one, xg}, u}}};
  t.antipode = Matrix(f, n, n);
  t.antipode(one, one) = u;
  t.antipode(g, g) = u;
  t.antipode(x, xg) = u;
  t.antipode(xg, x) = -u;
  return make_hopf(std::move(t));
}

HopfPtr catalog_algebra(const std::string& name, Field f, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& w) {
    if (warnings) warnings->push_back(w);
  };
  if (name == "k") return trivial_hopf(f);
  if (name == "kz2") return cyclic_group_algebra(f, 2);
  if (name == "kz3") return cyclic_group_algebra(f, 3);
  if (name == "kz4") return cyclic_group_algebra(f, 4);
  if (name == "ks3") return symmetric_group_s3(f);
  if (name == "dual-ks3") return dual_hopf(*symmetric_group_s3(f));
  if (name == "h4" || name == "dual-h4") {
    if (f.characteristic() == 2) warn("H4 over characteristic 2 is degenerate: -1 = 1, so xg = gx and H4 is commutative");
    auto h = sweedler_h4(f);
    return name == "h4" ? h : dual_hopf(*h);
  }
  throw Error(ErrorCode::out_of_range, "unknown catalog algebra " + name);
}

}  // namespace hopflab
