#pragma once

#include "hopflab/biproducts/yd_pair.hpp"
#include "hopflab/cocycle/enumerate.hpp"
#include "hopflab/core/forms.hpp"

namespace hopflab {

/// gamma : B -> k for a pair (H, B).
struct YDLinear {
  YDPairPtr pair;
  Vector coeffs;

  const Scalar& operator()(std::size_t i) const { return coeffs[i]; }
  Scalar eval(const Vector& v) const;
  friend bool operator==(const YDLinear& a, const YDLinear& b) { return a.coeffs == b.coeffs; }
};

/// sigma : B (x) B -> k.
struct YDBilinear {
  YDPairPtr pair;
  Matrix coeffs;

  const Scalar& operator()(std::size_t i, std::size_t j) const { return coeffs(i, j); }
  Scalar eval(const Vector& a, const Vector& b) const;
  friend bool operator==(const YDBilinear& a, const YDBilinear& b) { return a.coeffs == b.coeffs; }
};

YDLinear yd_counit(const YDPairPtr& p);
YDBilinear yd_trivial(const YDPairPtr& p);
bool is_normalized(const YDLinear& g);
bool is_normalized(const YDBilinear& s);

/// (sigma * tau)(b (x) b') = sigma(b_1 (x) b_2^(-1) . b'_1) tau(b_2^(0) (x) b'_2).
YDBilinear yd_convolution(const YDBilinear& a, const YDBilinear& b);
/// (gamma * delta)(b) = gamma(b_1) delta(b_2).
YDLinear yd_convolution(const YDLinear& a, const YDLinear& b);
std::optional<YDBilinear> yd_convolution_inverse(const YDBilinear& s);
std::optional<YDLinear> yd_convolution_inverse(const YDLinear& g);

/// sigma(h_1 . b (x) h_2 . b') = eps(h) sigma(b (x) b') and
/// sigma(b^(0) (x) b'^(0)) b^(-1) b'^(-1) = sigma(b (x) b') 1.
CheckReport is_yd_morphism(const YDBilinear& s);
/// gamma(h . b) = eps(h) gamma(b) and gamma(b^(0)) b^(-1) = gamma(b) 1.
CheckReport is_yd_morphism(const YDLinear& g);
/// sigma(b_1 (x) b_2^(-1) . b'_1) b_2^(0) b'_2 = sigma(b_2^(0) (x) b'_2) b_1 (b_2^(-1) . b'_1)
CheckReport is_yd_lazy(const YDBilinear& s);
/// gamma(b_1) b_2 = b_1 gamma(b_2)
CheckReport is_yd_lazy(const YDLinear& g);
/// sigma(a_1 (x) a_2^(-1) . b_1) sigma(a_2^(0) b_2 (x) c) = sigma(b_1 (x) b_2^(-1) . c_1) sigma(a (x) b_2^(0) c_2)
CheckReport is_yd_left_2cocycle(const YDBilinear& s);
/// The braided purity identity on basis quadruples, with sigma^{-1} the
/// inverse in the YD convolution. Throws NotInvertible.
CheckReport is_yd_pure(const YDBilinear& s);
/// sigma(a (x) b_1) sigma(b_2 (x) c) = sigma(a^(-1) . b_1 (x) c) sigma(a^(0) (x) b_2)
CheckReport is_yd_neat(const YDBilinear& s);
/// gamma(a b_1) gamma(b_2 c) = gamma(b_1 (b_2^(-1) . c)) gamma(a b_2^(0))
CheckReport is_yd_neat_element(const YDLinear& g);
/// sigma(a (x) h . b) = sigma(S^{-1}(h) . a (x) b) on all basis triples.
CheckReport consmor_check(const YDBilinear& s);

/// D1(gamma)(b (x) b') = gamma(b_1) gamma(b_2^(-1) . b'_1) gamma^{-1}(b_2^(0) b'_2). Throws NotInvertible.
YDBilinear yd_d1(const YDLinear& g);

/// The crossed product b . b' = sigma(b_1 (x) b_2^(-1) . b'_1) b_2^(0) b'_2 smashed with H, in the basis of B x H.
/// Throws AxiomViolation when it is not associative with unit 1 x 1.
AlgebraTable yd_crossed_smash(const YDBilinear& s);

struct BiproductCocycleExtension {
  /// sigma-bar(b x h, b' x h') = sigma(b (x) h . b') eps(h')
  BilinearForm sigma;
  /// the same recipe applied to the YD inverse, when it exists
  std::optional<BilinearForm> inverse;
  /// One report per clause of the extension theorems; clauses whose hypothesis
  /// fails are reported as skipped.
  std::vector<CheckReport> checks;
  bool all_passed() const;
};

struct BiproductElementExtension {
  LinearForm gamma;  // gamma(b) eps(h)
  std::vector<CheckReport> checks;
  bool all_passed() const;
};

/// Requires a normalized YD morphism; throws PrereqViolated otherwise.
/// `bh` must be biproduct(pair).
BiproductCocycleExtension extend_to_biproduct(const YDBilinear& s, const HopfPtr& bh);
BiproductElementExtension extend_to_biproduct(const YDLinear& g, const HopfPtr& bh);
/// The formulas alone.
BilinearForm biproduct_extension_formula(const YDBilinear& s, const HopfPtr& bh);
LinearForm biproduct_extension_formula(const YDLinear& g, const HopfPtr& bh);

/// Normalized lazy YD morphisms satisfying the braided cocycle identity and
/// invertible in YD (Z^2_L(B)).
std::vector<YDBilinear> enumerate_yd_lazy_cocycles(const YDPairPtr& p, const EnumerationOptions& opt = {});
/// Normalized lazy YD morphisms B -> k, invertible (Reg^1_L(B)).
std::vector<YDLinear> enumerate_yd_lazy_elements(const YDPairPtr& p, const EnumerationOptions& opt = {});

std::string form_key(const YDBilinear& s);

}  // namespace hopflab
