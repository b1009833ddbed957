#pragma once

#include <optional>

#include "hopflab/cocycle/predicates.hpp"

namespace hopflab {

/// (h -> p)(l) = p(l h), with p given by its values on the basis of H.
Vector harpoon_left(const HopfAlgebra& h, const Vector& elem, const Vector& p);
/// (p <- h)(l) = p(h l).
Vector harpoon_right(const HopfAlgebra& h, const Vector& p, const Vector& elem);

/// D(H) on H*^cop (x) H; the basis element delta_i (x) e_j has index i * n + j.
/// Throws NotInvertible when S_H is singular and AxiomViolation when the
/// antipode equations of D(H) have no solution.
HopfPtr drinfeld_double(const HopfPtr& h);

struct CocycleExtension {
  BilinearForm sigma;    // on D(H)
  BilinearForm inverse;  // built from sigma^{-1} by the same recipe
  CheckReport inverse_check;
  CheckReport cocycle_check;
  CheckReport lazy_check;
};

/// sigma-bar(p (x) h, q (x) l) = p(1) q(S^{-1}(h_3) h_1) sigma(h_2, l).
/// Throws PrereqViolated unless sigma is a lazy 2-cocycle on H.
CocycleExtension extend_cocycle_to_double(const BilinearForm& sigma, const HopfPtr& dh);
CocycleExtension extend_cocycle_to_double(const BilinearForm& sigma);

/// The formula alone, no prerequisite or result checks.
BilinearForm extension_formula(const BilinearForm& sigma, const HopfPtr& dh);

/// Passes when pure sigma gives pure sigma-bar and neat sigma gives neat sigma-bar.
CheckReport extension_preserves_pure_neat(const BilinearForm& sigma, const HopfPtr& dh);
CheckReport extension_preserves_pure_neat(const BilinearForm& sigma);

struct ElementExtension {
  LinearForm gamma;  // on D(H)
  CheckReport lazy_check;
  /// Pass when gamma is not pure, or gamma-bar is pure; likewise for neat.
  CheckReport pure_check;
  CheckReport neat_check;
};

/// gamma-bar(p (x) h) = p(1) gamma(h). Throws PrereqViolated unless gamma is lazy.
ElementExtension extend_element_to_double(const LinearForm& gamma, const HopfPtr& dh);
ElementExtension extend_element_to_double(const LinearForm& gamma);

/// For a lazy gamma on H: whether the extension of D1(gamma) equals D1 of the
/// extension of gamma, i.e. coboundaries extend to coboundaries.
CheckReport coboundary_extension_probe(const LinearForm& gamma, const HopfPtr& dh);

}  // namespace hopflab
