#pragma once

#include <optional>

#include "hopflab/core/forms.hpp"

namespace hopflab {

CheckReport is_left_2cocycle(const BilinearForm& sigma);
CheckReport is_right_2cocycle(const BilinearForm& sigma);
CheckReport is_lazy_element(const LinearForm& gamma);
CheckReport is_lazy_cocycle_condition(const BilinearForm& sigma);

/// The purity identity; sigma^{-1} is solved for unless supplied. Throws NotInvertible.
CheckReport is_pure(const BilinearForm& sigma, const std::optional<BilinearForm>& inverse = std::nullopt);
CheckReport is_neat(const BilinearForm& sigma);

CheckReport is_pure_element(const LinearForm& gamma);
CheckReport is_neat_element(const LinearForm& gamma);
CheckReport is_strongly_neat_element(const LinearForm& gamma);

/// D1(gamma)(h, h') = gamma(h_1) gamma(h'_1) gamma^{-1}(h_2 h'_2). Throws NotInvertible.
BilinearForm d1(const LinearForm& gamma);

enum class Side { left, right };

/// The twisted product on H; throws AxiomViolation when it is not associative
/// with unit 1_H.
AlgebraTable twisted_algebra(const BilinearForm& sigma, Side side);
/// Same table without the associativity check.
AlgebraTable twisted_table(const BilinearForm& sigma, Side side);

/// Passes when "sigma is a left 2-cocycle" and "sigma^{-1} is a right 2-cocycle"
/// have the same truth value.
CheckReport left_right_inverse_check(const BilinearForm& sigma);

}  // namespace hopflab
