#include "hopflab/exact/enumerate.hpp"

#include <map>

namespace hopflab::exact {

namespace {

using i64 = std::int64_t;

// Polynomial in the affine parameters t, of degree <= 2.
struct ParamPoly {
  i64 constant = 0;
  std::vector<std::pair<std::size_t, i64>> linear;
  std::vector<std::tuple<std::size_t, std::size_t, i64>> quad;
  long level = -1;  // largest parameter index present
};

struct Search {
  i64 p;
  std::size_t dim;
  std::vector<std::vector<ParamPoly>> checks_at;  // equations that become decidable at each level
  std::vector<std::vector<ParamPoly>> nonzero_at;
  std::vector<i64> t;
  std::vector<std::vector<i64>> found;

  i64 eval(const ParamPoly& q) const {
    i64 s = q.constant;
    for (const auto& [i, c] : q.linear) s = (s + c * t[i]) % p;
    for (const auto& [i, j, c] : q.quad) s = (s + c * (t[i] * t[j] % p)) % p;
    return s;
  }

  void run(std::size_t level) {
    if (level == dim) {
      found.push_back(t);
      return;
    }
    for (i64 v = 0; v < p; ++v) {
      t[level] = v;
      bool ok = true;
      for (const auto& q : nonzero_at[level])
        if (eval(q) == 0) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto& q : checks_at[level])
          if (eval(q) != 0) {
            ok = false;
            break;
          }
      if (ok) run(level + 1);
    }
    t[level] = 0;
  }
};

}  // namespace

EnumerationOutcome enumerate_points(const LinearSystem& linear, const std::vector<QuadraticEquation>& quadratic,
                                    const std::vector<std::size_t>& nonzero, std::size_t max_dim) {
  const Field f = linear.field();
  if (!f.is_prime()) throw Error(ErrorCode::unsupported_field, "enumeration needs a prime field");
  auto space = linear.solve();
  if (!space) return {AffineSpace{Vector(f, linear.unknowns()), {}, {}}, {}};
  const std::size_t d = space->dimension();
  if (d > max_dim)
    throw Error(ErrorCode::enumeration_too_large,
                "affine dimension " + std::to_string(d) + " exceeds cap " + std::to_string(max_dim));
  const i64 p = f.modulus();
  const std::size_t n = linear.unknowns();

  // x_e = base_e + sum_i dir[i]_e t_i
  std::vector<i64> base(n);
  std::vector<std::vector<std::pair<std::size_t, i64>>> dep(n);
  for (std::size_t e = 0; e < n; ++e) {
    base[e] = space->base[e].residue();
    for (std::size_t i = 0; i < d; ++i) {
      i64 c = space->directions[i][e].residue();
      if (c) dep[e].push_back({i, c});
    }
  }

  Search s{p, d, std::vector<std::vector<ParamPoly>>(d), std::vector<std::vector<ParamPoly>>(d), std::vector<i64>(d, 0), {}};
  bool infeasible = false;

  auto finish = [&](std::map<std::size_t, i64>& lin, std::map<std::pair<std::size_t, std::size_t>, i64>& quad, i64 constant) {
    ParamPoly q;
    q.constant = ((constant % p) + p) % p;
    for (auto& [i, c] : lin)
      if (c % p) {
        q.linear.push_back({i, c % p});
        q.level = std::max(q.level, static_cast<long>(i));
      }
    for (auto& [ij, c] : quad)
      if (c % p) {
        q.quad.push_back({ij.first, ij.second, c % p});
        q.level = std::max(q.level, static_cast<long>(std::max(ij.first, ij.second)));
      }
    return q;
  };

  for (const auto& eq : quadratic) {
    std::map<std::size_t, i64> lin;
    std::map<std::pair<std::size_t, std::size_t>, i64> quad;
    i64 constant = eq.constant.residue();
    for (const auto& [e, c0] : eq.linear) {
      i64 c = c0.residue();
      constant = (constant + c * base[e]) % p;
      for (const auto& [i, a] : dep[e]) lin[i] = (lin[i] + c * a) % p;
    }
    for (const auto& [e1, e2, c0] : eq.products) {
      i64 c = c0.residue();
      constant = (constant + c * (base[e1] * base[e2] % p)) % p;
      for (const auto& [i, a] : dep[e2]) lin[i] = (lin[i] + c * (base[e1] * a % p)) % p;
      for (const auto& [i, a] : dep[e1]) lin[i] = (lin[i] + c * (base[e2] * a % p)) % p;
      for (const auto& [i, a] : dep[e1])
        for (const auto& [j, b] : dep[e2]) {
          auto key = std::minmax(i, j);
          quad[{key.first, key.second}] = (quad[{key.first, key.second}] + c * (a * b % p)) % p;
        }
    }
    ParamPoly q = finish(lin, quad, constant);
    if (q.level < 0) {
      if (q.constant != 0) infeasible = true;
    } else {
      s.checks_at[static_cast<std::size_t>(q.level)].push_back(std::move(q));
    }
  }
  for (std::size_t e : nonzero) {
    std::map<std::size_t, i64> lin;
    std::map<std::pair<std::size_t, std::size_t>, i64> quad;
    for (const auto& [i, a] : dep[e]) lin[i] = a;
    ParamPoly q = finish(lin, quad, base[e]);
    if (q.level < 0) {
      if (q.constant == 0) infeasible = true;
    } else {
      s.nonzero_at[static_cast<std::size_t>(q.level)].push_back(std::move(q));
    }
  }

  EnumerationOutcome out{*space, {}};
  if (infeasible) return out;
  if (d == 0) {
    out.points.push_back(space->base);
    return out;
  }
  s.run(0);
  for (const auto& params : s.found) {
    std::vector<Scalar> ps;
    ps.reserve(d);
    for (i64 v : params) ps.push_back(Scalar::from_int(f, v));
    out.points.push_back(space->point(ps));
  }
  return out;
}

}  // namespace hopflab::exact
