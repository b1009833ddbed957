#include "hopflab/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hopflab/biproducts/yd_pair.hpp"
#include "hopflab/catalog.hpp"
#include "hopflab/doubles/double.hpp"
#include "hopflab/error.hpp"

namespace hopflab::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t index_of(const json& j, std::size_t bound, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(what + ": expected a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound)
    throw Error(ErrorCode::out_of_range, what + ": index " + std::to_string(v) + " >= " + std::to_string(bound));
  return v;
}

std::size_t count_of(const json& j, const char* key) {
  const auto& v = field_of(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Vector vector_from(Field f, const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) bad(what + ": expected " + std::to_string(n) + " coefficients");
  std::vector<Scalar> v;
  for (const auto& c : j) v.push_back(scalar_from_json(f, c));
  return Vector(f, std::move(v));
}

Matrix matrix_from(Field f, const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) bad(what + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = vector_from(f, j[r], cols, what);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(scalar_to_json(c));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

// [[i, j, k, "c"], ...] with i, j, k below the given bounds
template <typename F>
void quads(Field f, const json& j, std::array<std::size_t, 3> bounds, const std::string& what, F&& use) {
  if (!j.is_array()) bad(what + ": expected a list");
  for (const auto& q : j) {
    if (!q.is_array() || q.size() != 4) bad(what + ": entries are [i, j, k, \"c\"]");
    use(index_of(q[0], bounds[0], what), index_of(q[1], bounds[1], what), index_of(q[2], bounds[2], what),
        scalar_from_json(f, q[3]));
  }
}

std::vector<Scalar> mult_table(Field f, const json& j, std::size_t n, const std::string& what) {
  std::vector<Scalar> m(n * n * n, Scalar::zero(f));
  quads(f, j, {n, n, n}, what, [&](std::size_t a, std::size_t b, std::size_t c, const Scalar& s) {
    m[(a * n + b) * n + c] += s;
  });
  return m;
}

json mult_json(const std::vector<Scalar>& mult, std::size_t n) {
  json a = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& c = mult[(i * n + j) * n + k]; !c.is_zero()) a.push_back({i, j, k, scalar_to_json(c)});
  return a;
}

std::vector<std::vector<Term2>> comult_table(Field f, const json& j, std::size_t n, const std::string& what) {
  std::vector<std::vector<Term2>> d(n);
  quads(f, j, {n, n, n}, what, [&](std::size_t a, std::size_t b, std::size_t c, const Scalar& s) {
    d[a].push_back({{b, c}, s});
  });
  return d;
}

json comult_json(const std::vector<std::vector<Term2>>& d) {
  json a = json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d[i]) a.push_back({i, t.idx[0], t.idx[1], scalar_to_json(t.coeff)});
  return a;
}

std::vector<std::string> labels_from(const json& j, const char* key, std::size_t n) {
  std::vector<std::string> out;
  if (j.contains(key)) {
    const auto& b = j.at(key);
    if (!b.is_array() || b.size() != n) bad(std::string("\"") + key + "\" must list " + std::to_string(n) + " labels");
    for (const auto& s : b) out.push_back(s.get<std::string>());
  } else {
    for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  }
  return out;
}

std::optional<Field> file_field(const json& j) {
  if (j.is_object() && j.contains("field")) return Field::parse(j.at("field").get<std::string>());
  return std::nullopt;
}

fs::path parent_of(const fs::path& p) { return p.has_parent_path() ? p.parent_path() : fs::path("."); }

}  // namespace

json read_json_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, p.string() + ": " + e.what());
  }
}

void write_json_file(const fs::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + p.string());
  out << j.dump(2) << '\n';
}

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(Field f, const json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
  bad("coefficient must be a string or an integer, got " + j.dump());
}

json to_json(const HopfAlgebra& h) {
  const auto& t = h.tables();
  return {{"schema", kSchema},
          {"field", t.field.tag()},
          {"dim", t.dim},
          {"basis", t.labels},
          {"mult", mult_json(t.mult, t.dim)},
          {"unit", vector_json(t.unit)},
          {"comult", comult_json(t.comult)},
          {"counit", vector_json(t.counit)},
          {"antipode", matrix_json(t.antipode)}};
}

HopfPtr algebra_from_json(const json& j) {
  HopfTables t;
  t.field = Field::parse(field_of(j, "field").get<std::string>());
  t.dim = count_of(j, "dim");
  t.labels = labels_from(j, "basis", t.dim);
  t.mult = mult_table(t.field, field_of(j, "mult"), t.dim, "mult");
  t.unit = vector_from(t.field, field_of(j, "unit"), t.dim, "unit");
  t.comult = comult_table(t.field, field_of(j, "comult"), t.dim, "comult");
  t.counit = vector_from(t.field, field_of(j, "counit"), t.dim, "counit");
  t.antipode = matrix_from(t.field, field_of(j, "antipode"), t.dim, t.dim, "antipode");
  return make_hopf(std::move(t));
}

json to_json(const Witness& w) {
  auto side = [](const std::vector<Scalar>& v) {
    if (v.size() == 1) return scalar_to_json(v[0]);
    json a = json::array();
    for (const auto& s : v) a.push_back(scalar_to_json(s));
    return a;
  };
  json j{{"indices", w.indices}, {"lhs", side(w.lhs)}, {"rhs", side(w.rhs)}};
  if (!w.context.empty()) j["context"] = w.context;
  return j;
}

json to_json(const CheckReport& r) {
  json j{{"condition", r.condition}, {"verdict", std::string(to_string(r.verdict))}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

// --- references -------------------------------------------------------------

std::string Resolver::key(const json& ref, const fs::path& base, std::optional<Field> field) const {
  if (!ref.is_string()) return "inline:" + ref.dump();
  auto s = ref.get<std::string>();
  for (const char* prefix : {"builtin:", "double:", "biproduct:"})
    if (s.rfind(prefix, 0) == 0) return s + "@" + field.value_or(field_).tag();
  fs::path p(s);
  if (p.is_relative()) p = (base.empty() ? base_ : base) / p;
  std::error_code ec;
  auto canon = fs::weakly_canonical(p, ec);
  return "file:" + (ec ? p : canon).string();
}

HopfPtr Resolver::algebra(const json& ref, const fs::path& base, std::optional<Field> field) {
  auto k = key(ref, base, field);
  if (auto it = algebras_.find(k); it != algebras_.end()) return it->second;
  HopfPtr h;
  if (ref.is_object()) {
    h = algebra_from_json(ref);
  } else if (!ref.is_string()) {
    bad("algebra reference must be a string or an object");
  } else if (auto s = ref.get<std::string>(); s.rfind("builtin:", 0) == 0) {
    h = catalog_algebra(s.substr(8), field.value_or(field_), &warnings_);
  } else if (s.rfind("double:", 0) == 0) {
    h = drinfeld_double(algebra(json(s.substr(7)), base, field));
  } else if (s.rfind("biproduct:", 0) == 0) {
    h = biproduct(pair(json(s.substr(10)), base, field));
  } else {
    fs::path p(k.substr(5));
    h = algebra_from_json(read_json_file(p));
  }
  algebras_.emplace(k, h);
  return h;
}

YDPairPtr Resolver::pair(const json& ref, const fs::path& base, std::optional<Field> field) {
  auto k = key(ref, base, field);
  if (auto it = pairs_.find(k); it != pairs_.end()) return it->second;
  YDPairPtr p;
  if (ref.is_object()) {
    p = pair_from_json(ref, *this, base.empty() ? base_ : base);
  } else if (!ref.is_string()) {
    bad("pair reference must be a string or an object");
  } else if (auto s = ref.get<std::string>(); s.rfind("builtin:", 0) == 0) {
    p = catalog_pair(s.substr(8), field.value_or(field_));
  } else if (k.rfind("file:", 0) == 0) {
    fs::path path(k.substr(5));
    p = pair_from_json(read_json_file(path), *this, parent_of(path));
  } else {
    bad("not a pair reference: " + k);
  }
  pairs_.emplace(k, p);
  return p;
}

// --- comodules and forms ------------------------------------------------------

json to_json(const Comodule& m, const json& algebra_ref) {
  json co = json::array();
  for (std::size_t i = 0; i < m.coaction.size(); ++i)
    for (const auto& t : m.coaction[i]) co.push_back({i, t.j, t.k, scalar_to_json(t.coeff)});
  return {{"schema", kSchema}, {"field", m.algebra->field().tag()}, {"algebra_ref", algebra_ref},
          {"dim", m.dim},       {"label", m.label},                    {"coaction", co}};
}

Comodule comodule_from_json(const json& j, Resolver& r, const fs::path& base) {
  Comodule m;
  m.algebra = r.algebra(field_of(j, "algebra_ref"), base, file_field(j));
  m.dim = count_of(j, "dim");
  m.label = j.value("label", std::string("M"));
  m.coaction.resize(m.dim);
  quads(m.algebra->field(), field_of(j, "coaction"), {m.dim, m.dim, m.algebra->dim()}, "coaction",
        [&](std::size_t i, std::size_t a, std::size_t b, const Scalar& c) { m.coaction[i].push_back({a, b, c}); });
  return m;
}

json to_json(const LinearForm& g, const json& algebra_ref) {
  return {{"schema", kSchema}, {"field", g.algebra->field().tag()}, {"algebra_ref", algebra_ref}, {"arity", 1},
          {"coeffs", vector_json(g.coeffs)}};
}

json to_json(const BilinearForm& s, const json& algebra_ref) {
  return {{"schema", kSchema}, {"field", s.algebra->field().tag()}, {"algebra_ref", algebra_ref}, {"arity", 2},
          {"coeffs", matrix_json(s.coeffs)}};
}

json to_json(const YDLinear& g, const json& pair_ref) {
  return {{"schema", kSchema}, {"field", g.pair->field().tag()}, {"pair_ref", pair_ref}, {"arity", 1},
          {"coeffs", vector_json(g.coeffs)}};
}

json to_json(const YDBilinear& s, const json& pair_ref) {
  return {{"schema", kSchema}, {"field", s.pair->field().tag()}, {"pair_ref", pair_ref}, {"arity", 2},
          {"coeffs", matrix_json(s.coeffs)}};
}

FormFile form_from_json(const json& j, Resolver& r, const fs::path& base) {
  auto arity = count_of(j, "arity");
  if (arity != 1 && arity != 2) bad("\"arity\" must be 1 or 2");
  const auto& coeffs = field_of(j, "coeffs");
  FormFile out;
  if (j.contains("pair_ref")) {
    auto p = r.pair(j.at("pair_ref"), base, file_field(j));
    auto n = p->dim();
    if (arity == 1)
      out.yd_linear = YDLinear{p, vector_from(p->field(), coeffs, n, "coeffs")};
    else
      out.yd_bilinear = YDBilinear{p, matrix_from(p->field(), coeffs, n, n, "coeffs")};
    return out;
  }
  auto h = r.algebra(field_of(j, "algebra_ref"), base, file_field(j));
  auto n = h->dim();
  if (arity == 1)
    out.linear = LinearForm(h, vector_from(h->field(), coeffs, n, "coeffs"));
  else
    out.bilinear = BilinearForm(h, matrix_from(h->field(), coeffs, n, n, "coeffs"));
  return out;
}

// --- pairs ---------------------------------------------------------------------

json to_json(const YDPair& p, const json& host_ref) {
  const auto& d = p.data();
  json action = json::array();
  for (std::size_t h = 0; h < p.host().dim(); ++h)
    for (std::size_t b = 0; b < d.dim; ++b)
      for (std::size_t k = 0; k < d.dim; ++k)
        if (const auto& c = p.action(h, b, k); !c.is_zero()) action.push_back({h, b, k, scalar_to_json(c)});
  json coaction = json::array();
  for (std::size_t b = 0; b < d.dim; ++b)
    for (const auto& t : d.coaction[b]) coaction.push_back({b, t.idx[0], t.idx[1], scalar_to_json(t.coeff)});
  json j{{"schema", kSchema},
         {"field", p.field().tag()},
         {"host_ref", host_ref},
         {"dim_b", d.dim},
         {"b_basis", d.labels},
         {"b_mult", mult_json(d.mult, d.dim)},
         {"b_unit", vector_json(d.unit)},
         {"b_comult", comult_json(d.comult)},
         {"b_counit", vector_json(d.counit)},
         {"action", action},
         {"coaction", coaction}};
  if (d.antipode) j["b_antipode"] = matrix_json(*d.antipode);
  return j;
}

YDPairPtr pair_from_json(const json& j, Resolver& r, const fs::path& base) {
  YDPairData d;
  d.host = r.algebra(field_of(j, "host_ref"), base, file_field(j));
  const Field f = d.host->field();
  const std::size_t nh = d.host->dim();
  d.dim = count_of(j, "dim_b");
  const std::size_t n = d.dim;
  d.labels = labels_from(j, "b_basis", n);
  d.mult = mult_table(f, field_of(j, "b_mult"), n, "b_mult");
  d.unit = vector_from(f, field_of(j, "b_unit"), n, "b_unit");
  d.comult = comult_table(f, field_of(j, "b_comult"), n, "b_comult");
  d.counit = vector_from(f, field_of(j, "b_counit"), n, "b_counit");
  if (j.contains("b_antipode")) d.antipode = matrix_from(f, j.at("b_antipode"), n, n, "b_antipode");
  d.action.assign(nh * n * n, Scalar::zero(f));
  quads(f, field_of(j, "action"), {nh, n, n}, "action",
        [&](std::size_t h, std::size_t b, std::size_t k, const Scalar& c) { d.action[(h * n + b) * n + k] += c; });
  d.coaction.resize(n);
  quads(f, field_of(j, "coaction"), {n, nh, n}, "coaction",
        [&](std::size_t b, std::size_t h, std::size_t k, const Scalar& c) { d.coaction[b].push_back({{h, k}, c}); });
  return make_pair(std::move(d));
}

// --- families --------------------------------------------------------------------

json to_json(const SparseMatrix& m) {
  json entries = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) entries.push_back({e.row, c, scalar_to_json(e.value)});
  return {{"dim", m.rows()}, {"entries", entries}};
}

SparseMatrix sparse_from_json(Field f, const json& j) {
  auto n = count_of(j, "dim");
  std::vector<std::vector<SparseMatrix::Entry>> cols(n);
  const auto& entries = field_of(j, "entries");
  if (!entries.is_array()) bad("matrix entries: expected a list");
  for (const auto& q : entries) {
    if (!q.is_array() || q.size() != 3) bad("matrix entries are [row, col, \"v\"]");
    auto r = index_of(q[0], n, "matrix row");
    cols[index_of(q[1], n, "matrix column")].push_back({r, scalar_from_json(f, q[2])});
  }
  SparseMatrix m(f, n, n);
  for (std::size_t c = 0; c < n; ++c) m.set_column(c, std::move(cols[c]));
  return m;
}

namespace {

json family_header(const ComoduleCategory& cat, const json& algebra_ref, const char* kind) {
  json comodules = json::array();
  for (const auto& m : cat.atoms()) {
    if (m.label == "regular" && same_coaction(m, regular_comodule(cat.algebra())))
      comodules.push_back("regular");
    else
      comodules.push_back(to_json(m, algebra_ref));
  }
  return {{"schema", kSchema},     {"field", cat.field().tag()}, {"kind", kind},
          {"algebra_ref", algebra_ref}, {"comodules", comodules},     {"entries", json::array()}};
}

json labels_json(const ComoduleCategory& cat, std::initializer_list<const Word*> words) {
  json a = json::array();
  for (const auto* w : words) a.push_back(cat.label(*w));
  return a;
}

}  // namespace

json family_to_json(const ComoduleCategory& cat, const json& algebra_ref, const PairTable& t) {
  auto j = family_header(cat, algebra_ref, "twine");
  for (const auto& [k, m] : t)
    j["entries"].push_back({{"objects", labels_json(cat, {&k.first, &k.second})}, {"matrix", to_json(m)}});
  return j;
}

json family_to_json(const ComoduleCategory& cat, const json& algebra_ref, const TripleTable& t) {
  auto j = family_header(cat, algebra_ref, "pure-braided");
  for (const auto& [k, ab] : t)
    j["entries"].push_back({{"objects", labels_json(cat, {&std::get<0>(k), &std::get<1>(k), &std::get<2>(k)})},
                            {"a", to_json(ab.first)},
                            {"b", to_json(ab.second)}});
  return j;
}

json family_to_json(const ComoduleCategory& cat, const json& algebra_ref, const ObjectTable& t) {
  auto j = family_header(cat, algebra_ref, "d-structure");
  for (const auto& [k, m] : t) j["entries"].push_back({{"objects", labels_json(cat, {&k})}, {"matrix", to_json(m)}});
  return j;
}

CategoryPtr category_from_json(const HopfPtr& h, const json& comodules, Resolver& r, const fs::path& base) {
  if (!comodules.is_array() || comodules.empty()) bad("\"comodules\" must be a nonempty list");
  std::vector<Comodule> atoms;
  for (const auto& c : comodules) {
    if (c.is_string() && c.get<std::string>() == "regular") {
      atoms.push_back(regular_comodule(h));
      continue;
    }
    auto m = c.is_string() ? comodule_from_json(read_json_file(base / c.get<std::string>()), r, base)
                           : comodule_from_json(c, r, base);
    if (m.algebra != h) throw Error(ErrorCode::prereq_violated, "comodule '" + m.label + "' is over another algebra");
    atoms.push_back(std::move(m));
  }
  return std::make_shared<const ComoduleCategory>(h, std::move(atoms));
}

FamilyFile family_from_json(const json& j, Resolver& r, const fs::path& base) {
  auto kind = field_of(j, "kind").get<std::string>();
  auto h = r.algebra(field_of(j, "algebra_ref"), base, file_field(j));
  FamilyFile out;
  out.category = category_from_json(h, field_of(j, "comodules"), r, base);
  const auto& cat = *out.category;
  const Field f = h->field();
  auto objects = [&](const json& e, std::size_t n) {
    const auto& o = field_of(e, "objects");
    if (!o.is_array() || o.size() != n) bad(kind + " entries name " + std::to_string(n) + " objects");
    std::vector<Word> w;
    for (const auto& s : o) w.push_back(cat.parse(s.get<std::string>()));
    return w;
  };
  const auto& entries = field_of(j, "entries");
  if (kind == "twine") {
    PairTable t;
    for (const auto& e : entries) {
      auto w = objects(e, 2);
      t.insert_or_assign({w[0], w[1]}, sparse_from_json(f, field_of(e, "matrix")));
    }
    out.pair = explicit_pair_family(out.category, std::move(t));
  } else if (kind == "pure-braided") {
    TripleTable t;
    for (const auto& e : entries) {
      auto w = objects(e, 3);
      t.insert_or_assign({w[0], w[1], w[2]},
                         std::pair{sparse_from_json(f, field_of(e, "a")), sparse_from_json(f, field_of(e, "b"))});
    }
    out.triple = explicit_triple_family(out.category, std::move(t));
  } else if (kind == "d-structure") {
    ObjectTable t;
    for (const auto& e : entries) t.insert_or_assign(objects(e, 1)[0], sparse_from_json(f, field_of(e, "matrix")));
    out.object = explicit_object_family(out.category, std::move(t));
  } else {
    bad("unknown family kind '" + kind + "'");
  }
  return out;
}

}  // namespace hopflab::io
