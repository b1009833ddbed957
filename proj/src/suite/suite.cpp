#include "hopflab/suite/suite.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "hopflab/biproducts/yd_forms.hpp"
#include "hopflab/catalog.hpp"
#include "hopflab/cocycle/enumerate.hpp"
#include "hopflab/cocycle/predicates.hpp"
#include "hopflab/doubles/double.hpp"
#include "hopflab/error.hpp"
#include "hopflab/twines/twines.hpp"

namespace hopflab {

namespace {

CheckReport from_error(const std::string& cond, const Error& e) {
  return CheckReport::fail(cond, {{}, {}, {}, std::string(to_string(e.code())) + ": " + e.what()});
}

// Many instances of one statement; the first failure is kept.
class Tally {
 public:
  explicit Tally(std::string condition) : cond_(std::move(condition)) {}

  void add(CheckReport r, const std::string& where) {
    ++n_;
    if (r.verdict == Verdict::skipped) ++skipped_;
    if (!r.failed() || fail_) return;
    if (!r.witness) r.witness = Witness{};
    r.witness->context = where + (r.witness->context.empty() ? "" : "; " + r.witness->context);
    fail_ = std::move(r);
  }
  void expect(bool ok, const std::string& where) {
    add(ok ? CheckReport::pass(cond_) : CheckReport::fail(cond_, {}), where);
  }

  CheckReport result() const {
    if (fail_) return *fail_;
    auto r = CheckReport::pass(cond_);
    r.note(std::to_string(n_) + " instances");
    if (skipped_) r.note(std::to_string(skipped_) + " with an unmet hypothesis");
    return r;
  }

 private:
  std::string cond_;
  std::size_t n_ = 0, skipped_ = 0;
  std::optional<CheckReport> fail_;
};

CheckReport guarded(const std::string& cond, const std::function<CheckReport()>& run) {
  try {
    return run();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::enumeration_too_large) return CheckReport::skipped(cond, e.what());
    return from_error(cond, e);
  }
}

std::set<std::string> keys(const std::vector<BilinearForm>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(form_key(s));
  return out;
}

std::string nth(const char* what, std::size_t i) { return std::string(what) + " #" + std::to_string(i); }

struct Classified {
  std::string name;
  HopfPtr algebra;
  std::optional<CocycleClassification> c;
  std::string skip_reason;
};

class TheoremSuite {
 public:
  TheoremSuite(Field f, const SuiteOptions& opt) : f_(f), opt_(opt) {
    report_.command = "suite paper";
    report_.field = f.tag();
    enum_.max_affine_dim = opt.max_affine_dim;
  }

  Report run() {
    if (wanted(1)) axioms();
    if (wanted(2) || wanted(3) || wanted(4)) classify_catalog();
    if (wanted(2)) h4_classification();
    if (wanted(3)) neat_implies_pure();
    if (wanted(4)) group_laws();
    if (wanted(5)) double_extension();
    if (wanted(6) || wanted(7)) biproduct_extension();
    if (wanted(8)) twines();
    if (wanted(9)) negative_controls();
    report_.notes.push_back(
        "categorical checks are realized on tensor products of the unit, the regular comodule and its tensor square");
    return std::move(report_);
  }

 private:
  bool wanted(int k) const {
    return opt_.criteria.empty() || std::find(opt_.criteria.begin(), opt_.criteria.end(), k) != opt_.criteria.end();
  }
  bool enumerable() const { return f_.is_prime(); }

  void add(int criterion, std::string name, std::string label, CheckReport r) {
    report_.add(std::move(name), std::move(label), std::move(r), criterion);
  }
  void skip(int criterion, std::string name, std::string label, const std::string& why) {
    add(criterion, std::move(name), label, CheckReport::skipped(label, why));
  }

  // --- 1 -------------------------------------------------------------------

  void axioms() {
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::algebra) continue;
      add(1, "verify_hopf builtin:" + e.name, "Hopf axioms",
          guarded("Hopf axioms", [&] { return verify_hopf(*catalog_algebra(e.name, f_)); }));
    }
    for (const auto& [name, h] : opt_.extra_algebras)
      add(1, "verify_hopf " + name, "Hopf axioms", guarded("Hopf axioms", [&] { return verify_hopf(*h); }));
    for (const char* name : {"kz2", "h4"})
      add(1, std::string("verify_hopf D(") + name + ")", "Hopf axioms", guarded("Hopf axioms", [&] {
            return verify_hopf(*drinfeld_double(catalog_algebra(name, f_)));
          }));
    add(1, "verify_admissible_pair builtin:sweedler-pair", "(r1)-(r6)",
        guarded("admissible pair", [&] { return verify_admissible_pair(*sweedler_pair(f_)); }));
    add(1, "verify_hopf biproduct(sweedler-pair)", "(r7), (r8)",
        guarded("Hopf axioms", [&] { return verify_hopf(*biproduct(sweedler_pair(f_))); }));
  }

  // --- 2, 3, 4 ----------------------------------------------------------------

  void classify_catalog() {
    for (const auto& e : catalog()) {
      if (e.kind != CatalogKind::algebra) continue;
      Classified c{e.name, catalog_algebra(e.name, f_), std::nullopt, {}};
      if (!enumerable()) {
        c.skip_reason = "enumeration needs a prime field";
      } else {
        try {
          c.c = classify(c.algebra, e.name, enum_);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::enumeration_too_large) throw;
          c.skip_reason = err.what();
        }
      }
      if (c.c)
        report_.data["classification"][e.name] = {{"lazy", c.c->lazy.size()},
                                                  {"pure", c.c->pure.size()},
                                                  {"neat", c.c->neat.size()},
                                                  {"coboundaries", c.c->coboundaries.size()},
                                                  {"lazy_elements", c.c->lazy_elements.size()},
                                                  {"h2l_order", c.c->h2l_order}};
      classified_.push_back(std::move(c));
    }
  }

  const Classified& classified(const std::string& name) const {
    for (const auto& c : classified_)
      if (c.name == name) return c;
    throw Error(ErrorCode::out_of_range, "no classification for " + name);
  }

  void h4_classification() {
    const auto& h4 = classified("h4");
    const std::string label = "Example H4";
    if (!h4.c) {
      skip(2, "Z2_L(H4) nonempty", label, h4.skip_reason);
      return;
    }
    const auto& c = *h4.c;
    add(2, "Z2_L(H4) nonempty", label,
        c.lazy.empty() ? CheckReport::fail("Z2_L nonempty", {}) : CheckReport::pass("Z2_L nonempty"));
    auto lazy = keys(c.lazy);
    add(2, "Z2_NL(H4) = Z2_L(H4)", label,
        keys(c.neat) == lazy ? CheckReport::pass("Z2_NL = Z2_L")
                             : CheckReport::fail("Z2_NL = Z2_L", {{}, {}, {}, std::to_string(c.neat.size()) + " neat of " +
                                                                                 std::to_string(c.lazy.size())}));
    add(2, "Z2_PL(H4) = Z2_L(H4)", label,
        keys(c.pure) == lazy ? CheckReport::pass("Z2_PL = Z2_L")
                             : CheckReport::fail("Z2_PL = Z2_L", {{}, {}, {}, std::to_string(c.pure.size()) + " pure of " +
                                                                                 std::to_string(c.lazy.size())}));
    add(2, "classification of H4 is consistent", "H2_L(H4)", check_classification(c));
  }

  void neat_implies_pure() {
    for (const auto& a : classified_) {
      const std::string name = "neat => pure on Z2_L(" + a.name + ")";
      if (!a.c) {
        skip(3, name, "Proposition very", a.skip_reason);
        continue;
      }
      Tally t("neat implies pure");
      for (std::size_t i = 0; i < a.c->lazy.size(); ++i) {
        const auto& s = a.c->lazy[i];
        if (!is_neat(s).passed()) continue;
        auto r = is_pure(s);
        t.add(r.passed() ? CheckReport::pass("neat implies pure") : r, nth("sigma", i));
      }
      add(3, name, "Proposition very", t.result());
    }
  }

  void group_laws() {
    for (const auto& a : classified_) {
      if (!a.c) {
        skip(4, "group laws on Z2_L(" + a.name + ")", "lazy cohomology", a.skip_reason);
        continue;
      }
      const auto& c = *a.c;
      auto lazy = keys(c.lazy);
      Tally closed("closed under convolution"), inv("closed under inverse"), central("B2_L central"),
          hom("D1 homomorphism");
      for (std::size_t i = 0; i < c.lazy.size(); ++i) {
        inv.expect(lazy.count(form_key(require_inverse(c.lazy[i]))) == 1, nth("sigma", i));
        for (std::size_t j = 0; j < c.lazy.size(); ++j)
          closed.expect(lazy.count(form_key(convolve(c.lazy[i], c.lazy[j]))) == 1,
                        nth("sigma", i) + " * " + nth("sigma", j));
        for (std::size_t j = 0; j < c.coboundaries.size(); ++j)
          central.expect(convolve(c.lazy[i], c.coboundaries[j]) == convolve(c.coboundaries[j], c.lazy[i]),
                         nth("sigma", i) + ", " + nth("beta", j));
      }
      std::vector<BilinearForm> d(c.lazy_elements.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = d1(c.lazy_elements[i]);
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
          hom.expect(d1(convolve(c.lazy_elements[i], c.lazy_elements[j])) == convolve(d[i], d[j]),
                     nth("gamma", i) + ", " + nth("gamma", j));
      add(4, "Z2_L(" + a.name + ") closed under convolution", "Z2_L group", closed.result());
      add(4, "Z2_L(" + a.name + ") closed under inverses", "Z2_L group", inv.result());
      add(4, "B2_L(" + a.name + ") central in Z2_L", "B2_L central", central.result());
      add(4, "D1 multiplicative on Reg1_L(" + a.name + ")", "D1 homomorphism", hom.result());
    }
  }

  // --- 5 ---------------------------------------------------------------------

  void double_extension() {
    if (!enumerable()) {
      skip(5, "extension to D(H4)", "(exti)", "enumeration needs a prime field");
      return;
    }
    auto h = sweedler_h4(f_);
    auto dh = drinfeld_double(h);
    std::vector<BilinearForm> z;
    try {
      z = enumerate_lazy_cocycles(h, enum_);
    } catch (const Error& e) {
      skip(5, "extension to D(H4)", "(exti)", e.what());
      return;
    }
    Tally lazy("extension lazy"), cocycle("extension left 2-cocycle"), inverse("(extiinv) is the inverse"),
        solved("(extiinv) equals the solved inverse"), pn("pure and neat preserved");
    for (std::size_t i = 0; i < z.size(); ++i) {
      auto where = nth("sigma", i);
      auto e = extend_cocycle_to_double(z[i], dh);
      lazy.add(e.lazy_check, where);
      cocycle.add(e.cocycle_check, where);
      inverse.add(e.inverse_check, where);
      auto direct = convolution_inverse(e.sigma);
      solved.expect(direct && *direct == e.inverse, where);
      pn.add(extension_preserves_pure_neat(z[i], dh), where);
    }
    add(5, "sigma-bar lazy on D(H4)", "(exti)", lazy.result());
    add(5, "sigma-bar left 2-cocycle on D(H4)", "(exti)", cocycle.result());
    add(5, "(extiinv) inverts sigma-bar", "(extiinv)", inverse.result());
    add(5, "(extiinv) equals the solved convolution inverse", "(extiinv)", solved.result());
    add(5, "pure and neat sigma give pure and neat sigma-bar", "extension to D(H)", pn.result());

    Tally el("gamma-bar lazy"), ep("pure elements"), en("neat elements");
    auto gammas = enumerate_lazy_elements(h, enum_);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      auto e = extend_element_to_double(gammas[i], dh);
      el.add(e.lazy_check, nth("gamma", i));
      ep.add(e.pure_check, nth("gamma", i));
      en.add(e.neat_check, nth("gamma", i));
    }
    add(5, "gamma-bar lazy on D(H4)", "extension of elements", el.result());
    add(5, "pure gamma gives pure gamma-bar", "extension of elements", ep.result());
    add(5, "neat gamma gives neat gamma-bar", "extension of elements", en.result());
  }

  // --- 6, 7 ----------------------------------------------------------------------

  void biproduct_extension() {
    auto pair = sweedler_pair(f_);
    HopfPtr bh;
    auto built = guarded("biproduct", [&] {
      bh = biproduct(pair);
      return CheckReport::pass("biproduct");
    });
    if (wanted(6)) {
      if (bh)
        add(6, "biproduct(sweedler-pair) equals builtin:h4", "(r7), (r8)",
            same_structure_constants(*bh, *sweedler_h4(f_))
                ? CheckReport::pass("same structure constants")
                : CheckReport::fail("same structure constants", {{}, {}, {}, "tables differ"}));
      else
        add(6, "biproduct(sweedler-pair) equals builtin:h4", "(r7), (r8)", built);
    }
    if (!bh) return;
    if (!enumerable()) {
      if (wanted(6)) skip(6, "Theorem main on the Sweedler pair", "Theorem main", "enumeration needs a prime field");
      if (wanted(7)) skip(7, "Theorem pvp on the Sweedler pair", "Theorem pvp", "enumeration needs a prime field");
      return;
    }
    auto sigmas = enumerate_yd_lazy_cocycles(pair, enum_);
    auto gammas = enumerate_yd_lazy_elements(pair, enum_);
    report_.data["sweedler_pair"] = {{"yd_lazy_cocycles", sigmas.size()}, {"yd_lazy_elements", gammas.size()}};

    std::map<std::string, Tally> main;
    auto clause = [&](const std::string& cond) -> Tally& { return main.try_emplace(cond, cond).first->second; };
    Tally pure_iff("sigma-bar pure iff sigma YD-pure"), neat_iff("sigma-bar neat iff sigma YD-neat"),
        yd_np("YD-neat implies YD-pure");
    std::vector<BilinearForm> bars;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      auto where = nth("sigma", i);
      auto e = extend_to_biproduct(sigmas[i], bh);
      for (const auto& r : e.checks) clause(r.condition).add(r, where);
      bars.push_back(e.sigma);
      bool yd_pure = is_yd_pure(sigmas[i]).passed(), yd_neat = is_yd_neat(sigmas[i]).passed();
      pure_iff.expect(yd_pure == is_pure(e.sigma, e.inverse).passed(), where);
      neat_iff.expect(yd_neat == is_neat(e.sigma).passed(), where);
      if (yd_neat) yd_np.expect(yd_pure, where);
    }
    Tally hom("extension multiplicative");
    for (std::size_t i = 0; i < sigmas.size(); ++i)
      for (std::size_t j = 0; j < sigmas.size(); ++j)
        hom.expect(biproduct_extension_formula(yd_convolution(sigmas[i], sigmas[j]), bh) == convolve(bars[i], bars[j]),
                   nth("sigma", i) + ", " + nth("sigma", j));

    std::map<std::string, Tally> elem;
    auto eclause = [&](const std::string& cond) -> Tally& { return elem.try_emplace(cond, cond).first->second; };
    Tally d1neat("D1 of a YD-neat element is YD-neat");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      auto e = extend_to_biproduct(gammas[i], bh);
      for (const auto& r : e.checks) eclause(r.condition).add(r, nth("gamma", i));
      if (is_yd_neat_element(gammas[i]).passed()) d1neat.add(is_yd_neat(yd_d1(gammas[i])), nth("gamma", i));
    }

    auto main_label = [](const std::string& cond) -> std::string {
      if (cond == "extension: inverse") return "Theorem main (ii)";
      if (cond == "extension: lazy") return "Theorem main (iii)";
      if (cond == "extension: pure" || cond == "extension: neat") return "Theorem pvp";
      return "Theorem main (i)";
    };
    for (auto& [cond, t] : main) {
      auto label = main_label(cond);
      int k = label == "Theorem pvp" ? 7 : 6;
      if (wanted(k)) add(k, "sigma-bar on B x H, " + cond, label, t.result());
    }
    if (wanted(6)) {
      add(6, "sigma-bar of sigma * tau is sigma-bar * tau-bar", "Theorem main (iv)", hom.result());
      for (auto& [cond, t] : elem) {
        if (cond == "extension: neat element") continue;
        add(6, "gamma-bar on B x H, " + cond, cond == "extension: lazy" ? "Theorem main (v)" : "Theorem main (v), (vi)",
            t.result());
      }
    }
    if (wanted(7)) {
      add(7, "sigma-bar pure iff sigma YD-pure", "Theorem pvp, Remark remarca", pure_iff.result());
      add(7, "sigma-bar neat iff sigma YD-neat", "Theorem pvp, Remark remarca", neat_iff.result());
      add(7, "YD-neat lazy cocycles are YD-pure", "Remark remarca", yd_np.result());
      if (auto it = elem.find("extension: neat element"); it != elem.end())
        add(7, "gamma-bar neat for YD-neat lazy gamma", "(verypure3)", it->second.result());
      add(7, "D1 of a YD-neat lazy gamma is YD-neat", "(verypure3)", d1neat.result());
    }
  }

  // --- 8 ----------------------------------------------------------------------------

  void twines() {
    if (!enumerable()) {
      skip(8, "twine dictionary on H4", "Proposition abd", "enumeration needs a prime field");
      return;
    }
    auto h = sweedler_h4(f_);
    auto cat = ComoduleCategory::regular(h);
    auto scope = default_scope();
    auto z = enumerate_lazy_cocycles(h, enum_);
    Tally tw("twine iff pure"), st("strong twine iff neat"), lilu("strong twine implies twine"),
        abd("pure-braided round trip"), inter("(inter1), (inter2) for twines"), lac("(lac1), (lac2)"),
        nat("naturality");
    auto morphisms = default_morphisms(*cat);
    for (std::size_t i = 0; i < z.size(); ++i) {
      auto where = nth("sigma", i);
      auto t = twine_from_cocycle(z[i], cat);
      auto twine = check_twine(*t, scope), strong = check_strong_twine(*t, scope);
      tw.expect(twine.passed() == is_pure(z[i]).passed(), where);
      st.expect(strong.passed() == is_neat(z[i]).passed(), where);
      if (strong.passed()) lilu.expect(twine.passed(), where);
      lac.add(check_naturality_commutations(*t, scope), where);
      nat.add(check_naturality(*t, morphisms, scope), where);
      if (!twine.passed()) continue;
      inter.add(check_inter(*t, scope), where);
      abd.add(guarded("pure-braided round trip", [&] {
                auto f = pure_braided_from_twine(t, scope);
                auto back = twine_from_pure_braided(f, scope);
                auto r = same_family(*back, *t, scope);
                if (!r.passed()) return r;
                return same_family(*f, *triple_formulas(back), scope);
              }),
              where);
    }
    add(8, "twine iff pure for sigma-generated families", "twine dictionary", tw.result());
    add(8, "strong twine iff neat for sigma-generated families", "twine dictionary", st.result());
    add(8, "strong twines are twines", "Proposition lilu", lilu.result());
    add(8, "twine to pure-braided and back is exact", "Proposition abd", abd.result());
    add(8, "twines satisfy (inter1), (inter2)", "Proposition abd", inter.result());
    add(8, "sigma-generated families satisfy (lac1), (lac2)", "(lac1), (lac2)", lac.result());
    add(8, "sigma-generated families are natural", "naturality", nat.result());

    Tally ds("(dstr)"), d1s("D1(R) strong twine"), d1eq("D1(R) equals the twine of D1(gamma)");
    auto gammas = enumerate_lazy_elements(h, enum_);
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      if (!is_neat_element(gammas[i]).passed()) continue;
      auto where = nth("gamma", i);
      auto r = d_structure_from_element(gammas[i], cat);
      ds.add(check_d_structure(*r, scope), where);
      auto d = d1_of_R(r);
      d1s.add(check_strong_twine(*d, scope), where);
      d1eq.add(same_family(*d, *twine_from_cocycle(d1(gammas[i]), cat), scope), where);
    }
    add(8, "R from a neat lazy gamma is a D-structure", "(dstr)", ds.result());
    add(8, "D1(R) is a strong twine", "D-structures", d1s.result());
    add(8, "D1(R) equals twine_from_cocycle(D1(gamma))", "D-structures", d1eq.result());
  }

  // --- 9 ----------------------------------------------------------------------------

  void expect_failure(const std::string& name, const std::string& label, const CheckReport& r,
                      const std::string& condition, const std::vector<std::size_t>& indices) {
    const std::string cond = "fails at the documented location";
    bool ok = r.failed() && r.condition == condition && r.witness && r.witness->indices == indices;
    auto out = ok ? CheckReport::pass(cond) : CheckReport::fail(cond, r.witness.value_or(Witness{}));
    out.note("observed: " + r.summary());
    add(9, name, label, std::move(out));
  }

  void negative_controls() {
    auto t = sweedler_h4(f_)->tables();
    t.antipode(2, 3) = Scalar::zero(f_);
    t.antipode(2, 2) = Scalar::one(f_);
    expect_failure("H4 with S(x) = x", "Hopf axioms", verify_hopf(*make_hopf(t)), "antipode", {2});

    if (f_.is_prime() && f_.modulus() == 2) {
      // g . x = x here, so the corrupted coaction is still admissible
      skip(9, "Sweedler pair with x -> 1 (x) x", "(r5)", "2 = 0 in this field");
      skip(9, "twine with D_{R,R} scaled by 2", "(db1)", "2 = 0 in this field");
      return;
    }
    auto d = sweedler_pair(f_)->data();
    d.coaction[1] = {{{0, 1}, Scalar::one(f_)}};
    expect_failure("Sweedler pair with x -> 1 (x) x", "(r5)", verify_admissible_pair(YDPair(d)), "(r5)", {1, 1});

    auto h = sweedler_h4(f_);
    auto base = twine_from_cocycle(trivial_bilinear(h), ComoduleCategory::regular(h));
    auto bad = scaled_family(base, {0}, {0}, Scalar::from_int(f_, 2));
    expect_failure("twine with D_{R,R} scaled by 2", "(db1)", check_twine(*bad), "(db1)", {1, 1, 2, 0, 0});
  }

  Field f_;
  const SuiteOptions& opt_;
  EnumerationOptions enum_;
  Report report_;
  std::vector<Classified> classified_;
};

}  // namespace

Report run_suite(const std::string& name, Field f, const SuiteOptions& opt) {
  if (name != "paper") throw Error(ErrorCode::out_of_range, "unknown suite '" + name + "'");
  return TheoremSuite(f, opt).run();
}

}  // namespace hopflab
