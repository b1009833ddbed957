#include "hopflab/twines/twines.hpp"

#include <set>
#include <functional>

#include "hopflab/cocycle/predicates.hpp"
#include "hopflab/error.hpp"

namespace hopflab {

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// --- category -------------------------------------------------------------

ComoduleCategory::ComoduleCategory(HopfPtr h, std::vector<Comodule> atoms) : algebra_(std::move(h)), atoms_(std::move(atoms)) {
  const Comodule unit = trivial_comodule(algebra_);
  for (const auto& m : atoms_) {
    if (m.algebra != algebra_) throw Error(ErrorCode::prereq_violated, "comodule '" + m.label + "' is over another algebra");
    if (auto r = verify_comodule(m); !r.passed())
      throw Error(ErrorCode::axiom_violation, "comodule '" + m.label + "': " + r.summary());
    if (m.dim == 1 && same_coaction(m, unit))
      throw Error(ErrorCode::prereq_violated, "the trivial comodule is the unit object, the empty word");
  }
}

CategoryPtr ComoduleCategory::regular(const HopfPtr& h) {
  return std::make_shared<const ComoduleCategory>(h, std::vector<Comodule>{regular_comodule(h)});
}

std::size_t ComoduleCategory::dim(const Word& w) const {
  std::size_t d = 1;
  for (auto a : w) d *= atoms_.at(a).dim;
  return d;
}

const Comodule& ComoduleCategory::comodule(const Word& w) const {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  for (auto a : w)
    if (a >= atoms_.size()) throw Error(ErrorCode::out_of_range, "unknown comodule index " + std::to_string(a));
  Comodule c = w.empty() ? trivial_comodule(algebra_) : atoms_[w[0]];
  for (std::size_t i = 1; i < w.size(); ++i) c = tensor_comodule(c, atoms_[w[i]]);
  return cache_.emplace(w, std::move(c)).first->second;
}

std::string ComoduleCategory::label(const Word& w) const {
  if (w.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + atoms_.at(w[i]).label;
  return s;
}

Word ComoduleCategory::parse(std::string_view text) const {
  if (text == "I" || text == "trivial") return {};
  Word w;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('*', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    std::size_t k = 0;
    while (k < atoms_.size() && atoms_[k].label != token) ++k;
    if (k == atoms_.size()) throw Error(ErrorCode::parse_error, "unknown comodule '" + std::string(token) + "'");
    w.push_back(k);
    start = end + 1;
  }
  return w;
}

CheckScope default_scope() { return {{{}, {0}, {0, 0}}, 4096}; }

// --- family plumbing ------------------------------------------------------

const SparseMatrix& PairMapFamily::at(const Word& x, const Word& y) const {
  auto key = std::make_pair(x, y);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  return cache_.emplace(key, compute(x, y)).first->second;
}

const SparseMatrix& PairMapFamily::inverse_at(const Word& x, const Word& y) const {
  auto key = std::make_pair(x, y);
  if (auto it = inverse_cache_.find(key); it != inverse_cache_.end()) return it->second;
  return inverse_cache_.emplace(key, compute_inverse(x, y)).first->second;
}

const SparseMatrix& TripleMapFamily::get(Which w, const Word& x, const Word& y, const Word& z) const {
  auto key = std::make_tuple(static_cast<int>(w), x, y, z);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  return cache_.emplace(key, compute(w, x, y, z)).first->second;
}

const SparseMatrix& TripleMapFamily::a(const Word& x, const Word& y, const Word& z) const { return get(Which::a, x, y, z); }
const SparseMatrix& TripleMapFamily::a_inverse(const Word& x, const Word& y, const Word& z) const {
  return get(Which::a_inverse, x, y, z);
}
const SparseMatrix& TripleMapFamily::b(const Word& x, const Word& y, const Word& z) const { return get(Which::b, x, y, z); }
const SparseMatrix& TripleMapFamily::b_inverse(const Word& x, const Word& y, const Word& z) const {
  return get(Which::b_inverse, x, y, z);
}

const SparseMatrix& ObjectMapFamily::at(const Word& x) const {
  if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  return cache_.emplace(x, compute(x)).first->second;
}

const SparseMatrix& ObjectMapFamily::inverse_at(const Word& x) const {
  if (auto it = inverse_cache_.find(x); it != inverse_cache_.end()) return it->second;
  return inverse_cache_.emplace(x, compute_inverse(x)).first->second;
}

// --- generated families ---------------------------------------------------

SparseMatrix cocycle_matrix(const BilinearForm& sigma, const Comodule& m, const Comodule& n) {
  const Field f = sigma.algebra->field();
  SparseMatrix out(f, m.dim * n.dim, m.dim * n.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < n.dim; ++j) {
      std::vector<SparseMatrix::Entry> col;
      for (const auto& a : m.coaction[i])
        for (const auto& b : n.coaction[j]) {
          const Scalar& s = sigma(a.k, b.k);
          if (!s.is_zero()) col.push_back({a.j * n.dim + b.j, a.coeff * b.coeff * s});
        }
      out.set_column(i * n.dim + j, std::move(col));
    }
  return out;
}

SparseMatrix element_matrix(const LinearForm& gamma, const Comodule& m) {
  SparseMatrix out(gamma.algebra->field(), m.dim, m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    std::vector<SparseMatrix::Entry> col;
    for (const auto& a : m.coaction[i])
      if (!gamma(a.k).is_zero()) col.push_back({a.j, a.coeff * gamma(a.k)});
    out.set_column(i, std::move(col));
  }
  return out;
}

namespace {

void require_category(const HopfPtr& h, const ComoduleCategory& cat) {
  if (h != cat.algebra()) throw Error(ErrorCode::prereq_violated, "form and comodules are over different algebras");
}

class CocycleFamily final : public PairMapFamily {
 public:
  CocycleFamily(CategoryPtr cat, BilinearForm s, BilinearForm inv)
      : PairMapFamily(std::move(cat)), sigma_(std::move(s)), inverse_(std::move(inv)) {}

 protected:
  SparseMatrix compute(const Word& x, const Word& y) const override {
    return cocycle_matrix(sigma_, category().comodule(x), category().comodule(y));
  }
  SparseMatrix compute_inverse(const Word& x, const Word& y) const override {
    return cocycle_matrix(inverse_, category().comodule(x), category().comodule(y));
  }

 private:
  BilinearForm sigma_, inverse_;
};

class ElementFamily final : public ObjectMapFamily {
 public:
  ElementFamily(CategoryPtr cat, LinearForm g, LinearForm inv)
      : ObjectMapFamily(std::move(cat)), gamma_(std::move(g)), inverse_(std::move(inv)) {}

 protected:
  SparseMatrix compute(const Word& x) const override { return element_matrix(gamma_, category().comodule(x)); }
  SparseMatrix compute_inverse(const Word& x) const override { return element_matrix(inverse_, category().comodule(x)); }

 private:
  LinearForm gamma_, inverse_;
};

std::string pair_name(const ComoduleCategory& c, const Word& x, const Word& y) {
  return "(" + c.label(x) + ", " + c.label(y) + ")";
}

std::string triple_name(const ComoduleCategory& c, const Word& x, const Word& y, const Word& z) {
  return "(" + c.label(x) + ", " + c.label(y) + ", " + c.label(z) + ")";
}

SparseMatrix checked_inverse(const SparseMatrix& m, const std::string& where) {
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::not_invertible, "matrix at " + where + " is singular");
  return *inv;
}

void require_square(const SparseMatrix& m, std::size_t n, const std::string& where) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::dimension_mismatch, "matrix at " + where + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

class ExplicitPairFamily final : public PairMapFamily {
 public:
  ExplicitPairFamily(CategoryPtr cat, PairTable table) : PairMapFamily(std::move(cat)), table_(std::move(table)) {
    for (const auto& [key, m] : table_) {
      auto where = pair_name(category(), key.first, key.second);
      require_square(m, category().dim(key.first) * category().dim(key.second), where);
      inverses_.emplace(key, checked_inverse(m, where));
    }
  }

 protected:
  SparseMatrix compute(const Word& x, const Word& y) const override { return find(table_, x, y); }
  SparseMatrix compute_inverse(const Word& x, const Word& y) const override { return find(inverses_, x, y); }

 private:
  const SparseMatrix& find(const PairTable& t, const Word& x, const Word& y) const {
    auto it = t.find({x, y});
    if (it == t.end()) throw Error(ErrorCode::missing_matrix, "no matrix for the pair " + pair_name(category(), x, y));
    return it->second;
  }
  PairTable table_, inverses_;
};

class ExplicitTripleFamily final : public TripleMapFamily {
 public:
  ExplicitTripleFamily(CategoryPtr cat, TripleTable table) : TripleMapFamily(std::move(cat)), table_(std::move(table)) {
    for (const auto& [key, ab] : table_) {
      const auto& [x, y, z] = key;
      auto where = triple_name(category(), x, y, z);
      const std::size_t n = category().dim(x) * category().dim(y) * category().dim(z);
      require_square(ab.first, n, where);
      require_square(ab.second, n, where);
      inverses_.emplace(key, std::make_pair(checked_inverse(ab.first, "A" + where), checked_inverse(ab.second, "B" + where)));
    }
  }

 protected:
  SparseMatrix compute(Which w, const Word& x, const Word& y, const Word& z) const override {
    const auto& t = (w == Which::a || w == Which::b) ? table_ : inverses_;
    auto it = t.find({x, y, z});
    if (it == t.end()) throw Error(ErrorCode::missing_matrix, "no matrices for the triple " + triple_name(category(), x, y, z));
    return (w == Which::a || w == Which::a_inverse) ? it->second.first : it->second.second;
  }

 private:
  TripleTable table_, inverses_;
};

class ExplicitObjectFamily final : public ObjectMapFamily {
 public:
  ExplicitObjectFamily(CategoryPtr cat, ObjectTable table) : ObjectMapFamily(std::move(cat)), table_(std::move(table)) {
    for (const auto& [x, m] : table_) {
      require_square(m, category().dim(x), category().label(x));
      inverses_.emplace(x, checked_inverse(m, category().label(x)));
    }
  }

 protected:
  SparseMatrix compute(const Word& x) const override { return find(table_, x); }
  SparseMatrix compute_inverse(const Word& x) const override { return find(inverses_, x); }

 private:
  const SparseMatrix& find(const ObjectTable& t, const Word& x) const {
    auto it = t.find(x);
    if (it == t.end()) throw Error(ErrorCode::missing_matrix, "no matrix for the object " + category().label(x));
    return it->second;
  }
  ObjectTable table_, inverses_;
};

class ScaledFamily final : public PairMapFamily {
 public:
  ScaledFamily(PairFamilyPtr base, Word x, Word y, Scalar c)
      : PairMapFamily(base->category_ptr()), base_(std::move(base)), x_(std::move(x)), y_(std::move(y)), c_(std::move(c)) {
    if (c_.is_zero()) throw Error(ErrorCode::not_invertible, "scaling by zero");
  }

 protected:
  SparseMatrix compute(const Word& x, const Word& y) const override {
    const auto& m = base_->at(x, y);
    return x == x_ && y == y_ ? m.scaled(c_) : m;
  }
  SparseMatrix compute_inverse(const Word& x, const Word& y) const override {
    const auto& m = base_->inverse_at(x, y);
    return x == x_ && y == y_ ? m.scaled(c_.inverse()) : m;
  }

 private:
  PairFamilyPtr base_;
  Word x_, y_;
  Scalar c_;
};

class ScaledTripleFamily final : public TripleMapFamily {
 public:
  ScaledTripleFamily(TripleFamilyPtr base, bool scale_a, Word x, Word y, Word z, Scalar c)
      : TripleMapFamily(base->category_ptr()), base_(std::move(base)), scale_a_(scale_a), key_{std::move(x), std::move(y), std::move(z)},
        c_(std::move(c)) {
    if (c_.is_zero()) throw Error(ErrorCode::not_invertible, "scaling by zero");
  }

 protected:
  SparseMatrix compute(Which w, const Word& x, const Word& y, const Word& z) const override {
    const bool is_a = w == Which::a || w == Which::a_inverse;
    const bool inv = w == Which::a_inverse || w == Which::b_inverse;
    const SparseMatrix& m = is_a ? (inv ? base_->a_inverse(x, y, z) : base_->a(x, y, z))
                                 : (inv ? base_->b_inverse(x, y, z) : base_->b(x, y, z));
    if (is_a != scale_a_ || std::tie(x, y, z) != std::tie(std::get<0>(key_), std::get<1>(key_), std::get<2>(key_))) return m;
    return m.scaled(inv ? c_.inverse() : c_);
  }

 private:
  TripleFamilyPtr base_;
  bool scale_a_;
  std::tuple<Word, Word, Word> key_;
  Scalar c_;
};

class FormulaTriples final : public TripleMapFamily {
 public:
  explicit FormulaTriples(PairFamilyPtr d) : TripleMapFamily(d->category_ptr()), d_(std::move(d)) {}

 protected:
  SparseMatrix compute(Which w, const Word& x, const Word& y, const Word& z) const override {
    const std::size_t dx = category().dim(x);
    const Word xy = concat(x, y);
    switch (w) {
      case Which::a:
        return d_->at(xy, z) * d_->inverse_at(y, z).embedded(dx, 1);
      case Which::a_inverse:
        return d_->at(y, z).embedded(dx, 1) * d_->inverse_at(xy, z);
      case Which::b:
        return d_->inverse_at(y, z).embedded(dx, 1) * d_->at(xy, z);
      case Which::b_inverse:
        break;
    }
    return d_->inverse_at(xy, z) * d_->at(y, z).embedded(dx, 1);
  }

 private:
  PairFamilyPtr d_;
};

class TwineFromTriples final : public PairMapFamily {
 public:
  explicit TwineFromTriples(TripleFamilyPtr f) : PairMapFamily(f->category_ptr()), f_(std::move(f)) {}

 protected:
  SparseMatrix compute(const Word& x, const Word& y) const override { return f_->a(x, {}, y); }
  SparseMatrix compute_inverse(const Word& x, const Word& y) const override { return f_->a_inverse(x, {}, y); }

 private:
  TripleFamilyPtr f_;
};

class D1Family final : public PairMapFamily {
 public:
  explicit D1Family(ObjectFamilyPtr r) : PairMapFamily(r->category_ptr()), r_(std::move(r)) {}

 protected:
  SparseMatrix compute(const Word& x, const Word& y) const override {
    SparseMatrix rr = kron(r_->at(x), r_->at(y));
    const SparseMatrix& inv = r_->inverse_at(concat(x, y));
    SparseMatrix left = rr * inv;
    if (!(left == inv * rr))
      throw Error(ErrorCode::axiom_violation, "(R (x) R) R^-1 and R^-1 (R (x) R) differ at " + pair_name(category(), x, y));
    return left;
  }
  SparseMatrix compute_inverse(const Word& x, const Word& y) const override {
    return r_->at(concat(x, y)) * kron(r_->inverse_at(x), r_->inverse_at(y));
  }

 private:
  ObjectFamilyPtr r_;
};

}  // namespace

PairFamilyPtr twine_from_cocycle(const BilinearForm& sigma, CategoryPtr cat) {
  require_category(sigma.algebra, *cat);
  if (!is_lazy_cocycle_condition(sigma).passed()) throw Error(ErrorCode::prereq_violated, "sigma is not lazy");
  auto inv = convolution_inverse(sigma);
  if (!inv) throw Error(ErrorCode::not_invertible, "sigma has no convolution inverse");
  return std::make_shared<CocycleFamily>(std::move(cat), sigma, *inv);
}

ObjectFamilyPtr d_structure_from_element(const LinearForm& gamma, CategoryPtr cat) {
  require_category(gamma.algebra, *cat);
  if (!is_lazy_element(gamma).passed()) throw Error(ErrorCode::prereq_violated, "gamma is not lazy");
  auto inv = convolution_inverse(gamma);
  if (!inv) throw Error(ErrorCode::not_invertible, "gamma has no convolution inverse");
  return std::make_shared<ElementFamily>(std::move(cat), gamma, *inv);
}

PairFamilyPtr explicit_pair_family(CategoryPtr cat, PairTable table) {
  return std::make_shared<ExplicitPairFamily>(std::move(cat), std::move(table));
}
TripleFamilyPtr explicit_triple_family(CategoryPtr cat, TripleTable table) {
  return std::make_shared<ExplicitTripleFamily>(std::move(cat), std::move(table));
}
ObjectFamilyPtr explicit_object_family(CategoryPtr cat, ObjectTable table) {
  return std::make_shared<ExplicitObjectFamily>(std::move(cat), std::move(table));
}

PairFamilyPtr scaled_family(PairFamilyPtr base, Word x, Word y, Scalar c) {
  return std::make_shared<ScaledFamily>(std::move(base), std::move(x), std::move(y), std::move(c));
}

TripleFamilyPtr scaled_triple_family(TripleFamilyPtr base, bool scale_a, Word x, Word y, Word z, Scalar c) {
  return std::make_shared<ScaledTripleFamily>(std::move(base), scale_a, std::move(x), std::move(y), std::move(z), std::move(c));
}

TripleFamilyPtr triple_formulas(PairFamilyPtr d) { return std::make_shared<FormulaTriples>(std::move(d)); }

TripleFamilyPtr pure_braided_from_twine(PairFamilyPtr d, const CheckScope& scope) {
  if (auto r = check_twine(*d, scope); r.failed()) throw Error(ErrorCode::axiom_violation, "input is not a twine: " + r.summary());
  return triple_formulas(std::move(d));
}

PairFamilyPtr twine_from_pure_braided(TripleFamilyPtr f, const CheckScope& scope) {
  if (auto r = check_pure_braided(*f, scope); r.failed())
    throw Error(ErrorCode::axiom_violation, "input is not pure-braided: " + r.summary());
  return std::make_shared<TwineFromTriples>(std::move(f));
}

PairFamilyPtr d1_of_R(ObjectFamilyPtr r) { return std::make_shared<D1Family>(std::move(r)); }

// --- checks ---------------------------------------------------------------

namespace {

using Tuple = std::vector<Word>;

struct Runner {
  const ComoduleCategory& cat;
  const CheckScope& scope;
  std::size_t skipped = 0;

  std::size_t dim(const Word& w) const { return cat.dim(w); }

  // Visits scope tuples in lexicographic order of positions; stops at the
  // first failure.
  std::optional<CheckReport> each(std::size_t arity, const std::function<std::optional<CheckReport>(const std::vector<std::size_t>&, const Tuple&)>& f) {
    const std::size_t n = scope.objects.size();
    if (n == 0) return std::nullopt;
    std::vector<std::size_t> pos(arity, 0);
    while (true) {
      Tuple t;
      std::size_t total = 1;
      for (auto p : pos) {
        t.push_back(scope.objects[p]);
        total *= dim(scope.objects[p]);
      }
      if (total > scope.budget) {
        ++skipped;
      } else if (auto r = f(pos, t)) {
        return r;
      }
      std::size_t k = arity;
      while (k > 0 && ++pos[k - 1] == n) pos[--k] = 0;
      if (k == 0) return std::nullopt;
    }
  }

  std::optional<CheckReport> compare(const std::string& label, const std::string& names, const std::vector<std::size_t>& pos,
                                     const Tuple& t, const SparseMatrix& l, const SparseMatrix& r) const {
    auto d = l.first_difference(r);
    if (!d) return std::nullopt;
    Witness w;
    w.indices = pos;
    w.indices.push_back(d->first);
    w.indices.push_back(d->second);
    w.lhs = {l.at(d->first, d->second)};
    w.rhs = {r.at(d->first, d->second)};
    for (std::size_t i = 0; i < t.size(); ++i) w.context += std::string(i ? ", " : "") + names[i] + "=" + cat.label(t[i]);
    w.context += "; entry (" + std::to_string(d->first) + ", " + std::to_string(d->second) + ")";
    return CheckReport::fail(label, std::move(w));
  }

  std::optional<CheckReport> identity(const std::string& label, const std::string& names, const std::vector<std::size_t>& pos,
                                      const Tuple& t, const SparseMatrix& m) const {
    return compare(label, names, pos, t, m, SparseMatrix::identity(cat.field(), m.rows()));
  }

  CheckReport finish(std::string label) const {
    auto r = CheckReport::pass(std::move(label));
    std::string objs;
    for (const auto& o : scope.objects) objs += (objs.empty() ? "" : ", ") + cat.label(o);
    r.note("realized on the comodules {" + objs + "}");
    if (skipped) r.note(std::to_string(skipped) + " instances above the dimension budget " + std::to_string(scope.budget) + " skipped");
    return r;
  }
};

SparseMatrix id(const ComoduleCategory& c, std::size_t n) { return SparseMatrix::identity(c.field(), n); }

std::optional<CheckReport> fusion(Runner& run, const PairMapFamily& d, const std::string& label) {
  return run.each(3, [&](const auto& pos, const Tuple& t) {
    const auto &x = t[0], &y = t[1], &z = t[2];
    auto l = d.at(x, y).embedded(1, run.dim(z)) * d.at(concat(x, y), z);
    auto r = d.at(y, z).embedded(run.dim(x), 1) * d.at(x, concat(y, z));
    return run.compare(label, "XYZ", pos, t, l, r);
  });
}

std::optional<CheckReport> unit_pair(Runner& run, const PairMapFamily& d, const std::string& label) {
  if (auto r = run.identity(label, "", {}, {}, d.at({}, {}))) return r;
  return run.each(1, [&](const auto& pos, const Tuple& t) -> std::optional<CheckReport> {
    if (auto r = run.identity(label, "X", pos, t, d.at(t[0], {}))) return r;
    return run.identity(label, "X", pos, t, d.at({}, t[0]));
  });
}

}  // namespace

CheckReport check_twine(const PairMapFamily& d, const CheckScope& scope) {
  Runner run{d.category(), scope};
  if (auto r = run.identity("(db0)", "", {}, {}, d.at({}, {}))) return *r;
  if (auto r = unit_pair(run, d, "(re1)")) return *r;
  if (auto r = fusion(run, d, "(db1)")) return *r;
  auto r = run.each(4, [&](const auto& pos, const Tuple& t) {
    const auto &x = t[0], &y = t[1], &z = t[2], &w = t[3];
    const std::size_t dx = run.dim(x), dw = run.dim(w);
    auto a = d.at(concat(x, y), z).embedded(1, dw);
    auto b = d.inverse_at(y, z).embedded(dx, dw);
    auto c = d.at(y, concat(z, w)).embedded(dx, 1);
    return run.compare("(db2)", "XYZT", pos, t, a * b * c, c * b * a);
  });
  if (r) return *r;
  return run.finish("twine");
}

CheckReport check_strong_twine(const PairMapFamily& t, const CheckScope& scope) {
  Runner run{t.category(), scope};
  if (auto r = run.identity("(st1)", "", {}, {}, t.at({}, {}))) return *r;
  if (auto r = fusion(run, t, "(st2)")) return *r;
  auto r = run.each(3, [&](const auto& pos, const Tuple& w) {
    auto a = t.at(w[0], w[1]).embedded(1, run.dim(w[2]));
    auto b = t.at(w[1], w[2]).embedded(run.dim(w[0]), 1);
    return run.compare("(st3)", "UVW", pos, w, a * b, b * a);
  });
  if (r) return *r;
  return run.finish("strong twine");
}

CheckReport check_inter(const PairMapFamily& d, const CheckScope& scope) {
  Runner run{d.category(), scope};
  if (auto r = unit_pair(run, d, "(inter1)")) return *r;
  auto r = run.each(4, [&](const auto& pos, const Tuple& t) {
    const auto &x = t[0], &y = t[1], &z = t[2], &w = t[3];
    const std::size_t dx = run.dim(x), dy = run.dim(y), dz = run.dim(z), dw = run.dim(w);
    auto l = d.at(x, y).embedded(1, dz * dw) * d.at(concat(y, z), w).embedded(dx, 1) * d.at(concat(x, y), z).embedded(1, dw);
    auto rr = d.at(z, w).embedded(dx * dy, 1) * d.at(x, concat(y, z)).embedded(1, dw) * d.at(y, concat(z, w)).embedded(dx, 1);
    return run.compare("(inter2)", "XYZT", pos, t, l, rr);
  });
  if (r) return *r;
  return run.finish("inter");
}

CheckReport check_naturality_commutations(const PairMapFamily& d, const CheckScope& scope) {
  Runner run{d.category(), scope};
  auto r = run.each(3, [&](const auto& pos, const Tuple& t) -> std::optional<CheckReport> {
    const auto &x = t[0], &y = t[1], &z = t[2];
    auto a = d.at(x, y).embedded(1, run.dim(z));
    const auto& b = d.at(concat(x, y), z);
    if (auto f = run.compare("(lac1)", "XYZ", pos, t, a * b, b * a)) return f;
    auto c = d.at(y, z).embedded(run.dim(x), 1);
    const auto& e = d.at(x, concat(y, z));
    return run.compare("(lac2)", "XYZ", pos, t, c * e, e * c);
  });
  if (r) return *r;
  return run.finish("naturality commutations");
}

CheckReport check_pure_braided(const TripleMapFamily& f, const CheckScope& scope) {
  Runner run{f.category(), scope};
  using Fn = std::function<std::optional<CheckReport>(const std::vector<std::size_t>&, const Tuple&)>;
  const std::vector<std::pair<std::size_t, Fn>> axioms = {
      {4,
       [&](const auto& pos, const Tuple& t) {
         const auto &u = t[0], &v = t[1], &w = t[2], &x = t[3];
         auto r = f.a(u, concat(v, w), x) * f.a(v, w, x).embedded(run.dim(u), 1);
         return run.compare("(a1)", "UVWX", pos, t, f.a(concat(u, v), w, x), r);
       }},
      {4,
       [&](const auto& pos, const Tuple& t) {
         const auto &u = t[0], &v = t[1], &w = t[2], &x = t[3];
         auto r = f.a(u, v, w).embedded(1, run.dim(x)) * f.a(u, concat(v, w), x);
         return run.compare("(a2)", "UVWX", pos, t, f.a(u, v, concat(w, x)), r);
       }},
      {4,
       [&](const auto& pos, const Tuple& t) {
         const auto &u = t[0], &v = t[1], &w = t[2], &x = t[3];
         auto r = f.b(v, w, x).embedded(run.dim(u), 1) * f.b(u, concat(v, w), x);
         return run.compare("(baba)", "UVWX", pos, t, f.b(concat(u, v), w, x), r);
       }},
      {4,
       [&](const auto& pos, const Tuple& t) {
         const auto &u = t[0], &v = t[1], &w = t[2], &x = t[3];
         auto r = f.b(u, concat(v, w), x) * f.b(u, v, w).embedded(1, run.dim(x));
         return run.compare("(b2)", "UVWX", pos, t, f.b(u, v, concat(w, x)), r);
       }},
      {4,
       [&](const auto& pos, const Tuple& t) {
         const auto &u = t[0], &v = t[1], &w = t[2], &x = t[3];
         auto a = f.a(u, v, w).embedded(1, run.dim(x));
         auto b = f.b(v, w, x).embedded(run.dim(u), 1);
         return run.compare("(cab)", "UVWX", pos, t, a * b, b * a);
       }},
      {2, [&](const auto& pos, const Tuple& t) { return run.compare("(t1t)", "UV", pos, t, f.a(t[0], {}, t[1]), f.b(t[0], {}, t[1])); }},
      {2,
       [&](const auto& pos, const Tuple& t) -> std::optional<CheckReport> {
         if (auto r = run.identity("(t1a)", "UV", pos, t, f.a({}, t[0], t[1]))) return r;
         return run.identity("(t1a)", "UV", pos, t, f.a(t[0], t[1], {}));
       }},
      {2,
       [&](const auto& pos, const Tuple& t) -> std::optional<CheckReport> {
         if (auto r = run.identity("(t1b)", "UV", pos, t, f.b({}, t[0], t[1]))) return r;
         return run.identity("(t1b)", "UV", pos, t, f.b(t[0], t[1], {}));
       }},
  };
  for (const auto& [arity, fn] : axioms)
    if (auto r = run.each(arity, fn)) return *r;
  return run.finish("pure-braided");
}

CheckReport check_d_structure(const ObjectMapFamily& r, const CheckScope& scope) {
  Runner run{r.category(), scope};
  if (auto f = run.identity("R_I = id", "", {}, {}, r.at({}))) return *f;
  auto f = run.each(3, [&](const auto& pos, const Tuple& t) {
    const auto &x = t[0], &y = t[1], &z = t[2];
    auto a = r.at(concat(x, y)).embedded(1, run.dim(z));
    auto b = r.at(concat(y, z)).embedded(run.dim(x), 1);
    return run.compare("(dstr)", "XYZ", pos, t, a * b, b * a);
  });
  if (f) return *f;
  return run.finish("D-structure");
}

void require_comodule_morphism(const ComoduleCategory& cat, const ComoduleMorphism& f) {
  const Comodule& src = cat.comodule(f.source);
  const Comodule& dst = cat.comodule(f.target);
  if (f.map.rows() != dst.dim || f.map.cols() != src.dim)
    throw Error(ErrorCode::dimension_mismatch, "morphism '" + f.name + "' has the wrong shape");
  for (std::size_t i = 0; i < src.dim; ++i) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> l, r;
    auto add = [](auto& acc, std::pair<std::size_t, std::size_t> k, const Scalar& c) {
      auto [it, ins] = acc.try_emplace(k, c);
      if (!ins) it->second += c;
    };
    for (const auto& e : f.map.column(i))
      for (const auto& t : dst.coaction[e.row]) add(l, {t.j, t.k}, e.value * t.coeff);
    for (const auto& t : src.coaction[i])
      for (const auto& e : f.map.column(t.j)) add(r, {e.row, t.k}, e.value * t.coeff);
    std::erase_if(l, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    if (l != r) throw Error(ErrorCode::axiom_violation, "'" + f.name + "' is not a comodule map at basis vector " + std::to_string(i));
  }
}

std::vector<ComoduleMorphism> default_morphisms(const ComoduleCategory& cat) {
  const auto& h = cat.algebra();
  if (cat.atoms().empty() || !same_coaction(cat.atoms()[0], regular_comodule(h))) return {};
  const std::size_t n = h->dim();
  const Field f = h->field();
  ComoduleMorphism unit{"unit", {}, {0}, SparseMatrix(f, n, 1)};
  std::vector<SparseMatrix::Entry> col;
  for (std::size_t i = 0; i < n; ++i)
    if (!h->unit()[i].is_zero()) col.push_back({i, h->unit()[i]});
  unit.map.set_column(0, col);
  ComoduleMorphism mult{"multiplication", {0, 0}, {0}, SparseMatrix(f, n, n * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto p = h->product(i, j);
      std::vector<SparseMatrix::Entry> c;
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) c.push_back({k, p[k]});
      mult.map.set_column(i * n + j, std::move(c));
    }
  std::vector<ComoduleMorphism> out{unit, mult};
  for (const auto& m : out) require_comodule_morphism(cat, m);
  return out;
}

CheckReport check_naturality(const PairMapFamily& d, const std::vector<ComoduleMorphism>& morphisms, const CheckScope& scope) {
  const auto& cat = d.category();
  Runner run{cat, scope};
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    const auto& f = morphisms[k];
    require_comodule_morphism(cat, f);
    const std::size_t big = std::max(cat.dim(f.source), cat.dim(f.target));
    auto r = run.each(1, [&](const auto& pos, const Tuple& t) -> std::optional<CheckReport> {
      const Word& y = t[0];
      if (big * run.dim(y) > scope.budget) {
        ++run.skipped;
        return std::nullopt;
      }
      std::vector<std::size_t> where{k, pos[0]};
      Tuple names{f.source, f.target, y};
      SparseMatrix iy = id(cat, run.dim(y));
      auto fy = kron(f.map, iy);
      if (auto e = run.compare("naturality", "XYZ", where, names, d.at(f.target, y) * fy, fy * d.at(f.source, y))) {
        e->witness->context = f.name + " (x) id: " + e->witness->context;
        return e;
      }
      auto yf = kron(iy, f.map);
      if (auto e = run.compare("naturality", "XYZ", where, names, d.at(y, f.target) * yf, yf * d.at(y, f.source))) {
        e->witness->context = "id (x) " + f.name + ": " + e->witness->context;
        return e;
      }
      return std::nullopt;
    });
    if (r) return *r;
  }
  return run.finish("naturality");
}

CheckReport same_family(const PairMapFamily& a, const PairMapFamily& b, const CheckScope& scope) {
  Runner run{a.category(), scope};
  auto r = run.each(2, [&](const auto& pos, const Tuple& t) { return run.compare("families agree", "XY", pos, t, a.at(t[0], t[1]), b.at(t[0], t[1])); });
  if (r) return *r;
  return run.finish("families agree");
}

CheckReport same_family(const TripleMapFamily& a, const TripleMapFamily& b, const CheckScope& scope) {
  Runner run{a.category(), scope};
  auto r = run.each(3, [&](const auto& pos, const Tuple& t) -> std::optional<CheckReport> {
    if (auto e = run.compare("families agree (A)", "XYZ", pos, t, a.a(t[0], t[1], t[2]), b.a(t[0], t[1], t[2]))) return e;
    return run.compare("families agree (B)", "XYZ", pos, t, a.b(t[0], t[1], t[2]), b.b(t[0], t[1], t[2]));
  });
  if (r) return *r;
  return run.finish("families agree");
}

std::vector<Word> reachable_words(const ComoduleCategory& cat, const CheckScope& scope) {
  std::set<Word> seen{Word{}};
  std::vector<Word> layer{Word{}};
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& o : scope.objects) {
        Word c = concat(w, o);
        if (cat.dim(c) <= scope.budget && seen.insert(c).second) next.push_back(c);
      }
    layer = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

PairTable tabulate(const PairMapFamily& d, const CheckScope& scope) {
  const auto& cat = d.category();
  auto words = reachable_words(cat, scope);
  PairTable out;
  for (const auto& x : words)
    for (const auto& y : words)
      if (cat.dim(x) * cat.dim(y) <= scope.budget) out.emplace(std::make_pair(x, y), d.at(x, y));
  return out;
}

TripleTable tabulate(const TripleMapFamily& f, const CheckScope& scope) {
  const auto& cat = f.category();
  auto words = reachable_words(cat, scope);
  TripleTable out;
  for (const auto& x : words)
    for (const auto& y : words)
      for (const auto& z : words)
        if (cat.dim(x) * cat.dim(y) * cat.dim(z) <= scope.budget)
          out.emplace(std::make_tuple(x, y, z), std::make_pair(f.a(x, y, z), f.b(x, y, z)));
  return out;
}

ObjectTable tabulate(const ObjectMapFamily& r, const CheckScope& scope) {
  ObjectTable out;
  for (const auto& x : reachable_words(r.category(), scope)) out.emplace(x, r.at(x));
  return out;
}

}  // namespace hopflab
