#pragma once

// Brute-force evaluation of the defining identities straight from structure
// constants. Nothing here calls the library's checkers or solvers; library
// objects are only read for their tables.

#include <gmpxx.h>

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "hopflab/biproducts/yd_pair.hpp"
#include "hopflab/core/hopf_algebra.hpp"

namespace oracle {

struct Fp {
  using T = long long;
  long long p;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const { return (a + b) % p; }
  T mul(T a, T b) const { return a * b % p; }
  bool eq(T a, T b) const { return a == b; }
  bool is_zero(T a) const { return a == 0; }
  T from(const hopflab::Scalar& s) const { return s.residue(); }
};

struct Q {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& a, const T& b) const { return a + b; }
  T mul(const T& a, const T& b) const { return a * b; }
  bool eq(const T& a, const T& b) const { return a == b; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T from(const hopflab::Scalar& s) const { return s.rational(); }
};

template <class K>
struct Alg {
  using T = typename K::T;
  struct Nz {
    std::size_t k;
    T c;
  };
  struct Nz2 {
    std::size_t a, b;
    T c;
  };
  K k;
  std::size_t n = 0;
  std::vector<std::vector<Nz>> m;  // m[i*n+j]: e_i e_j
  std::vector<std::vector<Nz2>> d;  // d[i]: Delta(e_i)
  std::vector<T> u, e;
  std::vector<std::vector<Nz>> s;  // s[i]: S(e_i)
  std::vector<std::vector<Nz>> sinv;

  using Vec = std::vector<T>;
  Vec zero_vec() const { return Vec(n, k.zero()); }
  Vec mul(const Vec& x, const Vec& y) const {
    Vec r = zero_vec();
    for (std::size_t i = 0; i < n; ++i) {
      if (k.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (k.is_zero(y[j])) continue;
        T c = k.mul(x[i], y[j]);
        for (const auto& t : m[i * n + j]) r[t.k] = k.add(r[t.k], k.mul(c, t.c));
      }
    }
    return r;
  }
  Vec basis(std::size_t i) const {
    Vec r = zero_vec();
    r[i] = k.one();
    return r;
  }
  Vec apply(const std::vector<std::vector<Nz>>& map, const Vec& x) const {
    Vec r = zero_vec();
    for (std::size_t i = 0; i < n; ++i)
      if (!k.is_zero(x[i]))
        for (const auto& t : map[i]) r[t.k] = k.add(r[t.k], k.mul(x[i], t.c));
    return r;
  }
  // Delta^{(r-1)}(e_i) as (coefficient, factors) lists.
  std::vector<std::pair<T, std::vector<std::size_t>>> split(std::size_t i, int r) const {
    std::vector<std::pair<T, std::vector<std::size_t>>> cur{{k.one(), {i}}};
    for (int step = 1; step < r; ++step) {
      std::vector<std::pair<T, std::vector<std::size_t>>> next;
      for (const auto& [c, f] : cur)
        for (const auto& t : d[f.back()]) {
          auto g = f;
          g.back() = t.a;
          g.push_back(t.b);
          next.push_back({k.mul(c, t.c), g});
        }
      cur = std::move(next);
    }
    return cur;
  }
};

template <class K>
Alg<K> load(const hopflab::HopfAlgebra& h, K k) {
  Alg<K> a{k};
  const auto& t = h.tables();
  a.n = t.dim;
  a.m.resize(a.n * a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      for (std::size_t l = 0; l < a.n; ++l) {
        auto c = k.from(t.mult[(i * a.n + j) * a.n + l]);
        if (!k.is_zero(c)) a.m[i * a.n + j].push_back({l, c});
      }
  a.d.resize(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (const auto& term : t.comult[i]) a.d[i].push_back({term.idx[0], term.idx[1], k.from(term.coeff)});
  for (std::size_t i = 0; i < a.n; ++i) {
    a.u.push_back(k.from(t.unit[i]));
    a.e.push_back(k.from(t.counit[i]));
  }
  a.s.resize(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) {
      auto c = k.from(t.antipode(i, j));
      if (!k.is_zero(c)) a.s[i].push_back({j, c});
    }
  if (h.antipode_inverse()) {
    a.sinv.resize(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t j = 0; j < a.n; ++j) {
        auto c = k.from((*h.antipode_inverse())(i, j));
        if (!k.is_zero(c)) a.sinv[i].push_back({j, c});
      }
  }
  return a;
}

// First violated Hopf axiom, or empty.
template <class K>
std::string hopf_violation(const Alg<K>& a) {
  const auto& k = a.k;
  std::size_t n = a.n;
  auto same = [&](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!k.eq(x[i], y[i])) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto ij = a.mul(a.basis(i), a.basis(j));
      for (std::size_t l = 0; l < n; ++l)
        if (!same(a.mul(ij, a.basis(l)), a.mul(a.basis(i), a.mul(a.basis(j), a.basis(l))))) return "associativity";
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!same(a.mul(a.u, a.basis(i)), a.basis(i)) || !same(a.mul(a.basis(i), a.u), a.basis(i))) return "unit";

  // coalgebra side as dense tensors
  using T = typename K::T;
  auto delta = [&](const std::vector<T>& x) {
    std::vector<T> r(n * n, k.zero());
    for (std::size_t i = 0; i < n; ++i)
      if (!k.is_zero(x[i]))
        for (const auto& t : a.d[i]) r[t.a * n + t.b] = k.add(r[t.a * n + t.b], k.mul(x[i], t.c));
    return r;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> left(n * n * n, k.zero()), right(n * n * n, k.zero());
    for (const auto& t : a.d[i]) {
      for (const auto& s : a.d[t.a]) {
        auto& x = left[(s.a * n + s.b) * n + t.b];
        x = k.add(x, k.mul(t.c, s.c));
      }
      for (const auto& s : a.d[t.b]) {
        auto& x = right[(t.a * n + s.a) * n + s.b];
        x = k.add(x, k.mul(t.c, s.c));
      }
    }
    if (!same(left, right)) return "coassociativity";
    std::vector<T> l1 = a.zero_vec(), r1 = a.zero_vec();
    for (const auto& t : a.d[i]) {
      l1[t.b] = k.add(l1[t.b], k.mul(t.c, a.e[t.a]));
      r1[t.a] = k.add(r1[t.a], k.mul(t.c, a.e[t.b]));
    }
    if (!same(l1, a.basis(i)) || !same(r1, a.basis(i))) return "counit";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs = delta(a.mul(a.basis(i), a.basis(j)));
      std::vector<T> rhs(n * n, k.zero());
      for (const auto& t : a.d[i])
        for (const auto& s : a.d[j]) {
          T c = k.mul(t.c, s.c);
          for (const auto& x : a.m[t.a * n + s.a])
            for (const auto& y : a.m[t.b * n + s.b]) {
              auto& z = rhs[x.k * n + y.k];
              z = k.add(z, k.mul(c, k.mul(x.c, y.c)));
            }
        }
      if (!same(lhs, rhs)) return "comultiplication is multiplicative";
      T eij = k.zero();
      for (const auto& x : a.m[i * n + j]) eij = k.add(eij, k.mul(x.c, a.e[x.k]));
      if (!k.eq(eij, k.mul(a.e[i], a.e[j]))) return "counit is multiplicative";
    }
  std::vector<T> uu(n * n, k.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) uu[i * n + j] = k.mul(a.u[i], a.u[j]);
  if (!same(delta(a.u), uu)) return "comultiplication of 1";
  T eu = k.zero();
  for (std::size_t i = 0; i < n; ++i) eu = k.add(eu, k.mul(a.u[i], a.e[i]));
  if (!k.eq(eu, k.one())) return "counit of 1";
  for (std::size_t i = 0; i < n; ++i) {
    auto l = a.zero_vec(), r = a.zero_vec();
    for (const auto& t : a.d[i]) {
      auto sl = a.mul(a.apply(a.s, a.basis(t.a)), a.basis(t.b));
      auto sr = a.mul(a.basis(t.a), a.apply(a.s, a.basis(t.b)));
      for (std::size_t x = 0; x < n; ++x) {
        l[x] = k.add(l[x], k.mul(t.c, sl[x]));
        r[x] = k.add(r[x], k.mul(t.c, sr[x]));
      }
    }
    auto want = a.zero_vec();
    for (std::size_t x = 0; x < n; ++x) want[x] = k.mul(a.e[i], a.u[x]);
    if (!same(l, want) || !same(r, want)) return "antipode";
  }
  return {};
}

// ---------------------------------------------------------------------------
// forms over a prime field; sigma[i*n+j] = sigma(e_i, e_j), gamma[i] = gamma(e_i)

using Form = std::vector<long long>;

inline Form bilinear(const hopflab::Matrix& m, const Fp& k) {
  Form f;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f.push_back(k.from(m(i, j)));
  return f;
}

inline Form linear(const hopflab::Vector& v, const Fp& k) {
  Form f;
  for (std::size_t i = 0; i < v.size(); ++i) f.push_back(k.from(v[i]));
  return f;
}

using A = Alg<Fp>;

// sigma(x, y) for vectors x, y
inline long long eval2(const A& a, const Form& s, const std::vector<long long>& x, const std::vector<long long>& y) {
  long long r = 0;
  for (std::size_t i = 0; i < a.n; ++i)
    if (x[i])
      for (std::size_t j = 0; j < a.n; ++j)
        if (y[j]) r = a.k.add(r, a.k.mul(a.k.mul(x[i], y[j]), s[i * a.n + j]));
  return r;
}
inline long long eval1(const A& a, const Form& g, const std::vector<long long>& x) {
  long long r = 0;
  for (std::size_t i = 0; i < a.n; ++i) r = a.k.add(r, a.k.mul(x[i], g[i]));
  return r;
}

inline Form convolve2(const A& a, const Form& s, const Form& t) {
  std::size_t n = a.n;
  Form r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : a.d[i])
        for (const auto& y : a.d[j])
          r[i * n + j] = a.k.add(r[i * n + j], a.k.mul(a.k.mul(x.c, y.c), a.k.mul(s[x.a * n + y.a], t[x.b * n + y.b])));
  return r;
}

inline Form convolve1(const A& a, const Form& g, const Form& h) {
  Form r(a.n, 0);
  for (std::size_t i = 0; i < a.n; ++i)
    for (const auto& x : a.d[i]) r[i] = a.k.add(r[i], a.k.mul(x.c, a.k.mul(g[x.a], h[x.b])));
  return r;
}

inline Form counit2(const A& a) {
  Form r(a.n * a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) r[i * a.n + j] = a.k.mul(a.e[i], a.e[j]);
  return r;
}

inline bool inverse_pair2(const A& a, const Form& s, const Form& t) {
  return convolve2(a, s, t) == counit2(a) && convolve2(a, t, s) == counit2(a);
}
inline bool inverse_pair1(const A& a, const Form& g, const Form& h) {
  return convolve1(a, g, h) == a.e && convolve1(a, h, g) == a.e;
}

// sigma(h_1, h'_1) h_2 h'_2 = h_1 h'_1 sigma(h_2, h'_2)
inline bool lazy2(const A& a, const Form& s) {
  std::size_t n = a.n;
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      auto l = a.zero_vec(), r = a.zero_vec();
      for (const auto& x : a.d[h])
        for (const auto& y : a.d[g]) {
          long long c = a.k.mul(x.c, y.c);
          long long sl = a.k.mul(c, s[x.a * n + y.a]);
          if (sl)
            for (const auto& p : a.m[x.b * n + y.b]) l[p.k] = a.k.add(l[p.k], a.k.mul(sl, p.c));
          long long sr = a.k.mul(c, s[x.b * n + y.b]);
          if (sr)
            for (const auto& p : a.m[x.a * n + y.a]) r[p.k] = a.k.add(r[p.k], a.k.mul(sr, p.c));
        }
      if (l != r) return false;
    }
  return true;
}

// gamma(h_1) h_2 = h_1 gamma(h_2)
inline bool lazy1(const A& a, const Form& g) {
  for (std::size_t h = 0; h < a.n; ++h) {
    auto l = a.zero_vec(), r = a.zero_vec();
    for (const auto& x : a.d[h]) {
      l[x.b] = a.k.add(l[x.b], a.k.mul(x.c, g[x.a]));
      r[x.a] = a.k.add(r[x.a], a.k.mul(x.c, g[x.b]));
    }
    if (l != r) return false;
  }
  return true;
}

// sigma(a_1, b_1) sigma(a_2 b_2, c) = sigma(b_1, c_1) sigma(a, b_2 c_2)
inline bool left_cocycle(const A& a, const Form& s) {
  std::size_t n = a.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        long long l = 0, r = 0;
        for (const auto& p : a.d[x])
          for (const auto& q : a.d[y]) {
            long long c = a.k.mul(a.k.mul(p.c, q.c), s[p.a * n + q.a]);
            if (c)
              for (const auto& t : a.m[p.b * n + q.b]) l = a.k.add(l, a.k.mul(c, a.k.mul(t.c, s[t.k * n + z])));
          }
        for (const auto& q : a.d[y])
          for (const auto& t : a.d[z]) {
            long long c = a.k.mul(a.k.mul(q.c, t.c), s[q.a * n + t.a]);
            if (c)
              for (const auto& w : a.m[q.b * n + t.b]) r = a.k.add(r, a.k.mul(c, a.k.mul(w.c, s[x * n + w.k])));
          }
        if (l != r) return false;
      }
  return true;
}

// sigma(a, b_1) sigma(b_2, c) = sigma(b_1, c) sigma(a, b_2)
inline bool neat(const A& a, const Form& s) {
  std::size_t n = a.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        long long l = 0, r = 0;
        for (const auto& p : a.d[y]) {
          l = a.k.add(l, a.k.mul(p.c, a.k.mul(s[x * n + p.a], s[p.b * n + z])));
          r = a.k.add(r, a.k.mul(p.c, a.k.mul(s[p.a * n + z], s[x * n + p.b])));
        }
        if (l != r) return false;
      }
  return true;
}

// sigma(ab_1, c_1) sigma^-1(b_2, c_2) sigma(b_3, c_3 d) = sigma(b_1, c_1 d) sigma^-1(b_2, c_2) sigma(ab_3, c_3)
inline bool pure(const A& a, const Form& s, const Form& inv) {
  std::size_t n = a.n;
  std::vector<std::vector<std::pair<long long, std::vector<std::size_t>>>> d3(n);
  for (std::size_t i = 0; i < n; ++i) d3[i] = a.split(i, 3);
  auto prod = [&](std::size_t i, std::size_t j) {
    auto v = a.zero_vec();
    for (const auto& t : a.m[i * n + j]) v[t.k] = t.c;
    return v;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          long long l = 0, r = 0;
          for (const auto& [cb, b] : d3[y])
            for (const auto& [cc, c] : d3[z]) {
              long long coef = a.k.mul(cb, cc);
              long long mid = inv[b[1] * n + c[1]];
              if (!coef || !mid) continue;
              coef = a.k.mul(coef, mid);
              auto ab1 = prod(x, b[0]), ab3 = prod(x, b[2]);
              auto c3d = prod(c[2], w), c1d = prod(c[0], w);
              l = a.k.add(l, a.k.mul(coef, a.k.mul(eval2(a, s, ab1, a.basis(c[0])), eval2(a, s, a.basis(b[2]), c3d))));
              r = a.k.add(r, a.k.mul(coef, a.k.mul(eval2(a, s, a.basis(b[0]), c1d), eval2(a, s, ab3, a.basis(c[2])))));
            }
          if (l != r) return false;
        }
  return true;
}

// gamma(ab_1) gamma(b_2 c) = gamma(b_1 c) gamma(ab_2)
inline bool neat_element(const A& a, const Form& g) {
  std::size_t n = a.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        long long l = 0, r = 0;
        for (const auto& p : a.d[y]) {
          auto ab1 = a.mul(a.basis(x), a.basis(p.a)), b2c = a.mul(a.basis(p.b), a.basis(z));
          auto b1c = a.mul(a.basis(p.a), a.basis(z)), ab2 = a.mul(a.basis(x), a.basis(p.b));
          l = a.k.add(l, a.k.mul(p.c, a.k.mul(eval1(a, g, ab1), eval1(a, g, b2c))));
          r = a.k.add(r, a.k.mul(p.c, a.k.mul(eval1(a, g, b1c), eval1(a, g, ab2))));
        }
        if (l != r) return false;
      }
  return true;
}

// D^1(gamma)(h, h') = gamma(h_1) gamma(h'_1) gamma^-1(h_2 h'_2)
inline Form d1(const A& a, const Form& g, const Form& ginv) {
  std::size_t n = a.n;
  Form r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : a.d[i])
        for (const auto& y : a.d[j]) {
          long long c = a.k.mul(a.k.mul(x.c, y.c), a.k.mul(g[x.a], g[y.a]));
          if (c) r[i * n + j] = a.k.add(r[i * n + j], a.k.mul(c, eval1(a, ginv, a.mul(a.basis(x.b), a.basis(y.b)))));
        }
  return r;
}

// Left Doi twist: x . y = sigma(x_1, y_1) x_2 y_2, as table[(i*n+j)*n+k].
inline std::vector<long long> twisted_product(const A& a, const Form& s) {
  std::size_t n = a.n;
  std::vector<long long> t(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : a.d[i])
        for (const auto& y : a.d[j]) {
          long long c = a.k.mul(a.k.mul(x.c, y.c), s[x.a * n + y.a]);
          if (c)
            for (const auto& p : a.m[x.b * n + y.b]) {
              auto& z = t[(i * n + j) * n + p.k];
              z = a.k.add(z, a.k.mul(c, p.c));
            }
        }
  return t;
}

// T_{R,R}(e_a (x) e_b) = sigma(a_2, b_2) a_1 (x) b_1 on the regular comodule;
// column a*n+b, row a_1*n+b_1.
inline std::vector<std::tuple<std::size_t, std::size_t, long long>> regular_twine(const A& a, const Form& s) {
  std::size_t n = a.n;
  std::vector<long long> dense(n * n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : a.d[i])
        for (const auto& y : a.d[j]) {
          auto& z = dense[(x.a * n + y.a) * n * n + i * n + j];
          z = a.k.add(z, a.k.mul(a.k.mul(x.c, y.c), s[x.b * n + y.b]));
        }
  std::vector<std::tuple<std::size_t, std::size_t, long long>> out;
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c)
      if (dense[r * n * n + c]) out.emplace_back(r, c, dense[r * n * n + c]);
  return out;
}

}  // namespace oracle
