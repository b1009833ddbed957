#pragma once

#include <tuple>

#include "hopflab/exact/matrix.hpp"

namespace hopflab::exact {

/// sum c * x_i * x_j + sum c * x_i + constant = 0
struct QuadraticEquation {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> products;
  std::vector<std::pair<std::size_t, Scalar>> linear;
  Scalar constant;
};

struct EnumerationOutcome {
  AffineSpace space;
  /// Solutions in lexicographic order of their affine parameters.
  std::vector<Vector> points;
};

/// Enumerates every point of the solution space of `linear` over F_p that
/// satisfies all quadratic equations and has nonzero entries at the listed
/// unknowns. Throws EnumerationTooLarge when the affine dimension exceeds
/// max_dim and UnsupportedField over Q.
EnumerationOutcome enumerate_points(const LinearSystem& linear, const std::vector<QuadraticEquation>& quadratic,
                                    const std::vector<std::size_t>& nonzero, std::size_t max_dim);

}  // namespace hopflab::exact
