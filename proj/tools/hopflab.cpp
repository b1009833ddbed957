#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "hopflab/biproducts/yd_forms.hpp"
#include "hopflab/catalog.hpp"
#include "hopflab/cocycle/enumerate.hpp"
#include "hopflab/cocycle/predicates.hpp"
#include "hopflab/doubles/double.hpp"
#include "hopflab/error.hpp"
#include "hopflab/io/json_io.hpp"
#include "hopflab/suite/suite.hpp"
#include "hopflab/twines/twines.hpp"

using namespace hopflab;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string algebra;
  std::vector<std::string> algebras;
  std::string field;
  std::string cocycle;
  std::string pair;
  std::string comodules = "regular";
  std::string family;
  std::string report = "text";
  std::string out;
  std::string suite = "paper";
  std::string probe = "all";
  std::size_t max_affine_dim = 14;
  std::size_t budget = 4096;
  bool dump = false;
};

// A reference given on the command line: "builtin:..." stays as is, anything
// else is a path relative to the working directory.
json ref_json(const std::string& ref) { return json(ref); }

CheckReport passed(const std::string& cond, bool ok, const std::string& why = {}) {
  return ok ? CheckReport::pass(cond) : CheckReport::fail(cond, {{}, {}, {}, why});
}

/// Runs a predicate, turning a missing inverse into a failed report.
CheckReport attempt(const std::string& cond, const std::function<CheckReport()>& run) {
  try {
    return run();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_invertible) throw;
    return CheckReport::fail(cond, {{}, {}, {}, e.what()});
  }
}

json forms_json(const std::vector<BilinearForm>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(io::to_json(s, json())["coeffs"]);
  return a;
}

json forms_json(const std::vector<LinearForm>& v) {
  json a = json::array();
  for (const auto& g : v) a.push_back(io::to_json(g, json())["coeffs"]);
  return a;
}

Field field_or(const Options& o, const char* fallback) { return Field::parse(o.field.empty() ? fallback : o.field); }

fs::path extended_path(const fs::path& out) {
  return out.parent_path() / (out.stem().string() + "-extended" + out.extension().string());
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::parse_error, what);
}

// --- verify ---------------------------------------------------------------------

void verify_form(Report& rep, const io::FormFile& form) {
  json props = json::object();
  auto prop = [&](const std::string& name, const CheckReport& r) { props[name] = io::to_json(r); };
  if (form.bilinear) {
    const auto& s = *form.bilinear;
    rep.add("normalized", "normalization", passed("normalized", is_normalized(s)));
    rep.add("convolution invertible", "Reg2", passed("invertible", convolution_inverse(s).has_value()));
    rep.add("left 2-cocycle", "(leftco)", is_left_2cocycle(s));
    rep.add("lazy", "(lazy2)", is_lazy_cocycle_condition(s));
    prop("right 2-cocycle", is_right_2cocycle(s));
    prop("pure", attempt("(pure1)", [&] { return is_pure(s); }));
    prop("neat", is_neat(s));
  } else if (form.linear) {
    const auto& g = *form.linear;
    rep.add("normalized", "normalization", passed("normalized", is_normalized(g)));
    rep.add("convolution invertible", "Reg1", passed("invertible", convolution_inverse(g).has_value()));
    rep.add("lazy", "(lazy1)", is_lazy_element(g));
    prop("pure element", attempt("(pure0)", [&] { return is_pure_element(g); }));
    prop("neat element", attempt("(pure2)", [&] { return is_neat_element(g); }));
    prop("strongly neat element", attempt("(pure3)", [&] { return is_strongly_neat_element(g); }));
  } else if (form.yd_bilinear) {
    const auto& s = *form.yd_bilinear;
    rep.add("normalized", "normalization", passed("normalized", is_normalized(s)));
    rep.add("YD morphism", "(b4), (b5)", is_yd_morphism(s));
    rep.add("invertible in YD", "(b3)", passed("invertible", yd_convolution_inverse(s).has_value()));
    rep.add("YD left 2-cocycle", "(b6.5)", is_yd_left_2cocycle(s));
    rep.add("YD lazy", "(b6)", is_yd_lazy(s));
    prop("(consmor)", consmor_check(s));
    prop("YD pure", attempt("(pure4)", [&] { return is_yd_pure(s); }));
    prop("YD neat", is_yd_neat(s));
  } else {
    const auto& g = *form.yd_linear;
    rep.add("normalized", "normalization", passed("normalized", is_normalized(g)));
    rep.add("YD morphism", "(b8), (b9)", is_yd_morphism(g));
    rep.add("invertible in YD", "(b3)", passed("invertible", yd_convolution_inverse(g).has_value()));
    rep.add("YD lazy", "(lazy1)", is_yd_lazy(g));
    prop("YD neat element", is_yd_neat_element(g));
  }
  rep.data["properties"] = props;
}

std::vector<Comodule> load_comodules(const Options& o, const HopfPtr& h, io::Resolver& r) {
  std::vector<Comodule> out;
  std::stringstream ss(o.comodules);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "regular") {
      out.push_back(regular_comodule(h));
      continue;
    }
    fs::path p(item);
    auto m = io::comodule_from_json(io::read_json_file(p), r, p.parent_path());
    if (m.algebra != h) throw Error(ErrorCode::prereq_violated, "comodule " + item + " is over another algebra");
    out.push_back(std::move(m));
  }
  require(!out.empty(), "--comodules names no comodule");
  return out;
}

Report cmd_verify(const Options& o, io::Resolver& r) {
  Report rep;
  rep.command = "verify";
  rep.field = r.field().tag();
  require(!o.algebra.empty() || !o.pair.empty() || !o.cocycle.empty(), "verify needs --algebra, --pair or --cocycle");
  if (!o.algebra.empty()) {
    auto h = r.algebra(ref_json(o.algebra));
    rep.field = h->field().tag();
    rep.add("verify_hopf " + o.algebra, "Hopf axioms", verify_hopf(*h));
    rep.data["dim"] = h->dim();
    if (!o.comodules.empty() && o.comodules != "regular")
      for (const auto& m : load_comodules(o, h, r)) rep.add("verify_comodule " + m.label, "comodule axioms", verify_comodule(m));
  }
  if (!o.pair.empty()) {
    auto p = r.pair(ref_json(o.pair));
    rep.field = p->field().tag();
    auto adm = verify_admissible_pair(*p);
    rep.add("verify_admissible_pair " + o.pair, "(r1)-(r6)", adm);
    if (adm.passed() && p->antipode()) rep.add("verify_hopf biproduct", "(r7), (r8)", verify_hopf(*biproduct(p)));
  }
  if (!o.cocycle.empty()) {
    fs::path path(o.cocycle);
    verify_form(rep, io::form_from_json(io::read_json_file(path), r, path.parent_path()));
  }
  return rep;
}

// --- classify -------------------------------------------------------------------

Report cmd_classify(const Options& o, io::Resolver& r) {
  Report rep;
  rep.command = "classify";
  rep.field = r.field().tag();
  EnumerationOptions opt;
  opt.max_affine_dim = o.max_affine_dim;
  if (!o.pair.empty()) {
    auto p = r.pair(ref_json(o.pair));
    rep.field = p->field().tag();
    auto sigmas = enumerate_yd_lazy_cocycles(p, opt);
    auto gammas = enumerate_yd_lazy_elements(p, opt);
    std::size_t pure = 0, neat = 0, both = 0, neat_gammas = 0;
    for (const auto& s : sigmas) {
      bool yp = is_yd_pure(s).passed(), yn = is_yd_neat(s).passed();
      pure += yp;
      neat += yn;
      both += yp && yn;
    }
    for (const auto& g : gammas) neat_gammas += is_yd_neat_element(g).passed();
    rep.add("YD-neat lazy cocycles are YD-pure", "Remark remarca",
            passed("YD-neat implies YD-pure", both == neat, std::to_string(neat - both) + " exceptions"));
    rep.data = {{"yd_lazy_cocycles", sigmas.size()},
                {"yd_pure", pure},
                {"yd_neat", neat},
                {"yd_lazy_elements", gammas.size()},
                {"yd_neat_elements", neat_gammas}};
    if (o.dump) {
      json t = json::array();
      for (const auto& s : sigmas) t.push_back(io::to_json(s, json())["coeffs"]);
      rep.data["tables"]["yd_lazy_cocycles"] = t;
    }
    return rep;
  }
  require(!o.algebra.empty(), "classify needs --algebra or --pair");
  auto h = r.algebra(ref_json(o.algebra));
  rep.field = h->field().tag();
  auto c = classify(h, o.algebra, opt);
  rep.add("classification consistent", "H2_L", check_classification(c));
  std::size_t exceptions = 0;
  for (const auto& s : c.neat) exceptions += !is_pure(s).passed();
  rep.add("neat lazy cocycles are pure", "Proposition very",
          passed("neat implies pure", exceptions == 0, std::to_string(exceptions) + " exceptions"));
  rep.data = {{"lazy", c.lazy.size()},
              {"pure", c.pure.size()},
              {"neat", c.neat.size()},
              {"coboundaries", c.coboundaries.size()},
              {"lazy_elements", c.lazy_elements.size()},
              {"h2l_order", c.h2l_order}};
  if (o.dump) {
    rep.data["tables"] = {{"lazy", forms_json(c.lazy)},
                          {"pure", forms_json(c.pure)},
                          {"neat", forms_json(c.neat)},
                          {"coboundaries", forms_json(c.coboundaries)},
                          {"lazy_elements", forms_json(c.lazy_elements)},
                          {"cosets", c.cosets}};
  }
  return rep;
}

// --- double ---------------------------------------------------------------------

Report cmd_double(const Options& o, io::Resolver& r) {
  require(!o.algebra.empty(), "double needs --algebra");
  Report rep;
  rep.command = "double";
  auto h = r.algebra(ref_json(o.algebra));
  rep.field = h->field().tag();
  auto dh = drinfeld_double(h);
  rep.add("verify_hopf D(H)", "Hopf axioms", verify_hopf(*dh));
  rep.data["dim"] = dh->dim();
  json extended;
  if (!o.cocycle.empty()) {
    fs::path path(o.cocycle);
    auto form = io::form_from_json(io::read_json_file(path), r, path.parent_path());
    require(!form.yd_bilinear && !form.yd_linear, "double expects a form over an algebra");
    json dref = o.out.empty() ? json("double:" + o.algebra) : json(fs::path(o.out).filename().string());
    if (form.bilinear) {
      require(form.bilinear->algebra == h, "the cocycle is not over --algebra");
      auto e = extend_cocycle_to_double(*form.bilinear, dh);
      rep.add("sigma-bar left 2-cocycle", "(exti)", e.cocycle_check);
      rep.add("sigma-bar lazy", "(exti)", e.lazy_check);
      rep.add("(extiinv) inverts sigma-bar", "(extiinv)", e.inverse_check);
      rep.add("pure and neat preserved", "extension to D(H)", extension_preserves_pure_neat(*form.bilinear, dh));
      extended = io::to_json(e.sigma, dref);
    } else {
      require(form.linear->algebra == h, "the element is not over --algebra");
      auto e = extend_element_to_double(*form.linear, dh);
      rep.add("gamma-bar lazy", "extension of elements", e.lazy_check);
      rep.add("pure gamma gives pure gamma-bar", "extension of elements", e.pure_check);
      rep.add("neat gamma gives neat gamma-bar", "extension of elements", e.neat_check);
      rep.data["coboundary_probe"] = io::to_json(coboundary_extension_probe(*form.linear, dh));
      extended = io::to_json(e.gamma, dref);
    }
    if (o.out.empty()) rep.data["extended"] = extended["coeffs"];
  }
  if (!o.out.empty()) {
    io::write_json_file(o.out, io::to_json(*dh));
    if (!extended.is_null()) io::write_json_file(extended_path(o.out), extended);
  }
  return rep;
}

// --- biproduct -----------------------------------------------------------------

Report cmd_biproduct(const Options& o, io::Resolver& r) {
  require(!o.pair.empty(), "biproduct needs --pair");
  Report rep;
  rep.command = "biproduct";
  auto p = r.pair(ref_json(o.pair));
  rep.field = p->field().tag();
  auto adm = verify_admissible_pair(*p);
  rep.add("verify_admissible_pair", "(r1)-(r6)", adm);
  if (!adm.passed()) return rep;
  auto bh = biproduct(p);
  rep.add("verify_hopf B x H", "(r7), (r8)", verify_hopf(*bh));
  rep.data["dim"] = bh->dim();
  if (o.pair == "builtin:sweedler-pair")
    rep.add("B x H equals builtin:h4", "Example H4",
            passed("same structure constants", same_structure_constants(*bh, *sweedler_h4(p->field())), "tables differ"));
  if (!o.cocycle.empty()) {
    fs::path path(o.cocycle);
    auto form = io::form_from_json(io::read_json_file(path), r, path.parent_path());
    require(form.yd_bilinear || form.yd_linear, "biproduct expects a form with \"pair_ref\"");
    if (form.yd_bilinear) {
      require(form.yd_bilinear->pair == p, "the form is over another pair");
      auto e = extend_to_biproduct(*form.yd_bilinear, bh);
      for (const auto& c : e.checks) rep.add("sigma-bar, " + c.condition, "Theorem main", c);
      rep.add("sigma-bar pure iff sigma YD-pure", "Theorem pvp",
              passed("pure iff YD-pure",
                     attempt("", [&] { return is_yd_pure(*form.yd_bilinear); }).passed() ==
                         attempt("", [&] { return is_pure(e.sigma, e.inverse); }).passed()));
      rep.add("sigma-bar neat iff sigma YD-neat", "Theorem pvp",
              passed("neat iff YD-neat", is_yd_neat(*form.yd_bilinear).passed() == is_neat(e.sigma).passed()));
      rep.data["extended"] = io::to_json(e.sigma, json())["coeffs"];
    } else {
      require(form.yd_linear->pair == p, "the form is over another pair");
      auto e = extend_to_biproduct(*form.yd_linear, bh);
      for (const auto& c : e.checks) rep.add("gamma-bar, " + c.condition, "Theorem main (v)", c);
      rep.data["extended"] = io::to_json(e.gamma, json())["coeffs"];
    }
  }
  if (!o.out.empty()) io::write_json_file(o.out, io::to_json(*bh));
  return rep;
}

// --- twines ----------------------------------------------------------------------

CheckScope scope_for(const ComoduleCategory& cat, std::size_t budget) {
  CheckScope s;
  s.budget = budget;
  s.objects.push_back({});
  for (std::size_t i = 0; i < cat.atoms().size(); ++i) s.objects.push_back({i});
  s.objects.push_back({0, 0});
  return s;
}

void pair_family_checks(Report& rep, const PairMapFamily& d, const CheckScope& scope, bool from_cocycle) {
  auto twine = check_twine(d, scope);
  auto strong = check_strong_twine(d, scope);
  auto morphisms = default_morphisms(d.category());
  if (!from_cocycle) {
    rep.add("twine", "(db0)-(db2), (re1)", twine);
    rep.add("natural", "naturality", check_naturality(d, morphisms, scope));
  } else {
    rep.data["twine"] = io::to_json(twine);
    rep.data["strong_twine"] = io::to_json(strong);
    rep.add("natural", "naturality", check_naturality(d, morphisms, scope));
    rep.add("(lac1), (lac2)", "(lac1), (lac2)", check_naturality_commutations(d, scope));
  }
  if (strong.passed()) rep.add("strong twine is a twine", "Proposition lilu", passed("twine", twine.passed()));
  if (!from_cocycle) rep.data["strong_twine"] = io::to_json(strong);
  if (!twine.passed()) return;
  rep.add("twine satisfies (inter1), (inter2)", "Proposition abd", check_inter(d, scope));
}

Report cmd_twines(const Options& o, io::Resolver& r) {
  Report rep;
  rep.command = "twines";
  rep.notes.push_back("axioms are checked on tuples of the scope objects; the cocycle dictionary is verified on this "
                      "realization only");
  json out_file;
  if (!o.family.empty()) {
    fs::path path(o.family);
    auto doc = io::read_json_file(path);
    auto fam = io::family_from_json(doc, r, path.parent_path());
    const auto& cat = *fam.category;
    rep.field = cat.field().tag();
    auto scope = scope_for(cat, std::min(o.budget, doc.value("budget", o.budget)));
    if (fam.pair) {
      pair_family_checks(rep, *fam.pair, scope, false);
    } else if (fam.triple) {
      auto pb = check_pure_braided(*fam.triple, scope);
      rep.add("pure-braided", "(a1)-(t1t)", pb);
      if (pb.passed()) rep.add("twine from A_{U,I,V}", "Proposition abd",
                               check_twine(*twine_from_pure_braided(fam.triple, scope), scope));
    } else {
      rep.add("D-structure", "(dstr)", check_d_structure(*fam.object, scope));
      rep.add("D1(R) strong twine", "D-structures", check_strong_twine(*d1_of_R(fam.object), scope));
    }
    return rep;
  }
  require(!o.algebra.empty(), "twines needs --algebra (or --family)");
  auto h = r.algebra(ref_json(o.algebra));
  rep.field = h->field().tag();
  auto cat = std::make_shared<const ComoduleCategory>(h, load_comodules(o, h, r));
  auto scope = scope_for(*cat, o.budget);
  json aref = ref_json(o.algebra);
  if (o.cocycle.empty()) {
    auto t = twine_from_cocycle(trivial_bilinear(h), cat);
    rep.add("trivial family is a strong twine", "(st1)-(st3)", check_strong_twine(*t, scope));
    out_file = io::family_to_json(*cat, aref, tabulate(*t, scope));
  } else {
    fs::path path(o.cocycle);
    auto form = io::form_from_json(io::read_json_file(path), r, path.parent_path());
    require(form.bilinear || form.linear, "twines expects a form over an algebra");
    if (form.bilinear) {
      const auto& s = *form.bilinear;
      require(s.algebra == h, "the cocycle is not over --algebra");
      auto t = twine_from_cocycle(s, cat);
      pair_family_checks(rep, *t, scope, true);
      bool pure = attempt("", [&] { return is_pure(s); }).passed();
      bool twine = check_twine(*t, scope).passed();
      rep.add("twine iff pure", "twine dictionary", passed("twine iff pure", twine == pure));
      rep.add("strong twine iff neat", "twine dictionary",
              passed("strong twine iff neat", check_strong_twine(*t, scope).passed() == is_neat(s).passed()));
      if (twine) {
        auto f = pure_braided_from_twine(t, scope);
        rep.add("pure-braided", "(a1)-(t1t)", check_pure_braided(*f, scope));
        rep.add("round trip", "Proposition abd", same_family(*twine_from_pure_braided(f, scope), *t, scope));
      }
      out_file = io::family_to_json(*cat, aref, tabulate(*t, scope));
    } else {
      const auto& g = *form.linear;
      require(g.algebra == h, "the element is not over --algebra");
      auto rr = d_structure_from_element(g, cat);
      rep.add("D-structure", "(dstr)", check_d_structure(*rr, scope));
      rep.data["neat_element"] = io::to_json(is_neat_element(g));
      auto d = d1_of_R(rr);
      rep.data["d1_strong_twine"] = io::to_json(check_strong_twine(*d, scope));
      rep.add("D1(R) equals the twine of D1(gamma)", "D-structures",
              same_family(*d, *twine_from_cocycle(d1(g), cat), scope));
      out_file = io::family_to_json(*cat, aref, tabulate(*rr, scope));
    }
  }
  if (!o.out.empty()) {
    out_file["budget"] = scope.budget;
    io::write_json_file(o.out, out_file);
  }
  return rep;
}

// --- search --------------------------------------------------------------------------

json probe_coquasitriangular(const HopfPtr& h, const EnumerationOptions& opt) {
  auto rs = enumerate_coquasitriangular(h, opt);
  std::size_t lazy = 0, pure = 0, neat = 0;
  std::set<std::string> seen;
  json example;
  for (const auto& r1 : rs)
    for (const auto& r2 : rs) {
      BilinearForm r21{h, r1.coeffs.transpose()};
      auto s = convolve(r21, r2);
      if (!seen.insert(form_key(s)).second) continue;
      if (!is_lazy_cocycle_condition(s).passed() || !is_left_2cocycle(s).passed()) continue;
      ++lazy;
      bool p = attempt("", [&] { return is_pure(s); }).passed(), n = is_neat(s).passed();
      pure += p;
      neat += n;
      if (p && !n && example.is_null()) example = io::to_json(s, json())["coeffs"];
    }
  json j{{"coquasitriangular", rs.size()},
         {"distinct_r21_s", seen.size()},
         {"lazy_cocycles", lazy},
         {"pure", pure},
         {"neat", neat}};
  if (!example.is_null()) j["pure_not_neat_example"] = example;
  return j;
}

json probe_pure_not_neat(const CocycleClassification& c) {
  return {{"lazy", c.lazy.size()},
          {"pure", c.pure.size()},
          {"neat", c.neat.size()},
          {"pure_proper_in_lazy", c.pure.size() < c.lazy.size()},
          {"neat_proper_in_pure", c.neat.size() < c.pure.size()}};
}

json probe_closure(const CocycleClassification& c) {
  auto closed = [](const std::vector<BilinearForm>& v) {
    std::set<std::string> k;
    for (const auto& s : v) k.insert(form_key(s));
    std::size_t bad = 0;
    for (const auto& a : v)
      for (const auto& b : v) bad += k.count(form_key(convolve(a, b))) == 0;
    return bad;
  };
  return {{"pure_products_outside", closed(c.pure)}, {"neat_products_outside", closed(c.neat)}};
}

json probe_coboundary(const HopfPtr& h, const EnumerationOptions& opt) {
  auto dh = drinfeld_double(h);
  std::size_t holds = 0, total = 0;
  for (const auto& g : enumerate_lazy_elements(h, opt)) {
    ++total;
    holds += coboundary_extension_probe(g, dh).passed();
  }
  return {{"lazy_elements", total}, {"extension_of_D1_is_D1", holds}};
}

Report cmd_search(const Options& o, io::Resolver& r) {
  Report rep;
  rep.command = "search";
  rep.field = r.field().tag();
  rep.notes.push_back("exploratory: results are data, never failures");
  EnumerationOptions opt;
  opt.max_affine_dim = o.max_affine_dim;
  std::vector<std::pair<std::string, HopfPtr>> algebras;
  if (o.algebras.empty()) {
    for (const auto& e : catalog())
      if (e.kind == CatalogKind::algebra) algebras.emplace_back(e.name, r.algebra(json("builtin:" + e.name)));
  } else {
    for (const auto& a : o.algebras) algebras.emplace_back(a, r.algebra(ref_json(a)));
  }
  auto want = [&](const char* p) { return o.probe == "all" || o.probe == p; };
  require(want("coquasitriangular") || want("pure-not-neat") || want("closure") || want("coboundary"),
          "unknown probe '" + o.probe + "'");
  for (const auto& [name, h] : algebras) {
    json& d = rep.data[name];
    try {
      if (want("coquasitriangular")) d["coquasitriangular"] = probe_coquasitriangular(h, opt);
      if (want("pure-not-neat") || want("closure")) {
        auto c = classify(h, name, opt);
        if (want("pure-not-neat")) d["pure_not_neat"] = probe_pure_not_neat(c);
        if (want("closure")) d["closure"] = probe_closure(c);
      }
      if (want("coboundary") && h->dim() <= 4) d["coboundary"] = probe_coboundary(h, opt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::enumeration_too_large) throw;
      d["skipped"] = e.what();
    }
  }
  return rep;
}

// --------------------------------------------------------------------------------------

int emit(const Report& rep, const Options& o, bool write_out) {
  std::string text = o.report == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
  std::cout << text;
  if (write_out && !o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::parse_error, "cannot write " + o.out);
    f << text;
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for lazy cocycles, twines, doubles and biproducts of finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s, bool with_algebra) {
    s->add_option("--field", o.field, "rational or fp:<p>");
    s->add_option("--report", o.report, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", o.out, "output file");
    if (with_algebra) s->add_option("--algebra", o.algebra, "builtin:NAME or a path");
  };

  auto* verify = app.add_subcommand("verify", "check the axioms of an algebra, pair, comodules or form");
  common(verify, true);
  verify->add_option("--pair", o.pair, "builtin:NAME or a path");
  verify->add_option("--comodules", o.comodules, "comma-separated comodule files");
  verify->add_option("--cocycle", o.cocycle, "form file");

  auto* cls = app.add_subcommand("classify", "enumerate lazy cocycles and elements over a prime field");
  common(cls, true);
  cls->add_option("--pair", o.pair, "classify YD cocycles of a pair");
  cls->add_option("--max-affine-dim", o.max_affine_dim, "enumeration cap");
  cls->add_flag("--dump", o.dump, "include coefficient tables");

  auto* dbl = app.add_subcommand("double", "build D(H) and extend a cocycle or element");
  common(dbl, true);
  dbl->add_option("--cocycle", o.cocycle, "form file over --algebra");

  auto* bip = app.add_subcommand("biproduct", "build B x H and extend a YD cocycle or element");
  common(bip, false);
  bip->add_option("--pair", o.pair, "builtin:NAME or a path");
  bip->add_option("--cocycle", o.cocycle, "form file with \"pair_ref\"");

  auto* tw = app.add_subcommand("twines", "families of comodule maps and their axioms");
  common(tw, true);
  tw->add_option("--comodules", o.comodules, "comma-separated: regular or comodule files");
  tw->add_option("--cocycle", o.cocycle, "bilinear form (twine) or linear form (D-structure)");
  tw->add_option("--family", o.family, "family file");
  tw->add_option("--budget", o.budget, "largest tensor dimension an axiom instance may reach")
      ->default_val(4096)->check(CLI::PositiveNumber);

  auto* suite = app.add_subcommand("suite", "run a check suite");
  common(suite, false);
  suite->add_option("name", o.suite, "suite name")->check(CLI::IsMember({"paper"}));
  suite->add_option("--algebra", o.algebras, "extra algebra files to verify");
  suite->add_option("--max-affine-dim", o.max_affine_dim, "enumeration cap")->default_val(25);

  auto* search = app.add_subcommand("search", "exploratory probes; never fails");
  common(search, false);
  search->add_option("--algebra", o.algebras, "algebras to probe (default: the catalog)");
  search->add_option("--probe", o.probe, "coquasitriangular, pure-not-neat, closure, coboundary or all");
  search->add_option("--max-affine-dim", o.max_affine_dim, "enumeration cap")->default_val(25);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      io::Resolver r(field_or(o, "rational"));
      return emit(cmd_verify(o, r), o, true);
    }
    if (cls->parsed()) {
      io::Resolver r(field_or(o, "fp:3"));
      return emit(cmd_classify(o, r), o, true);
    }
    if (dbl->parsed()) {
      io::Resolver r(field_or(o, "rational"));
      return emit(cmd_double(o, r), o, false);
    }
    if (bip->parsed()) {
      io::Resolver r(field_or(o, "rational"));
      return emit(cmd_biproduct(o, r), o, false);
    }
    if (tw->parsed()) {
      io::Resolver r(field_or(o, "fp:3"));
      return emit(cmd_twines(o, r), o, false);
    }
    if (suite->parsed()) {
      const Field f = field_or(o, "fp:3");
      io::Resolver r(f);
      SuiteOptions so;
      so.max_affine_dim = o.max_affine_dim;
      for (const auto& a : o.algebras) so.extra_algebras.emplace_back(a, r.algebra(ref_json(a)));
      return emit(run_suite(o.suite, f, so), o, true);
    }
    if (search->parsed()) {
      io::Resolver r(field_or(o, "fp:3"));
      emit(cmd_search(o, r), o, true);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << to_string(ErrorCode::parse_error) << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}
