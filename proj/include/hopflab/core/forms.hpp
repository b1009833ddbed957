#pragma once

#include <optional>

#include "hopflab/core/hopf_algebra.hpp"

namespace hopflab {

/// gamma : H -> k, gamma(e_i) = coeffs[i].
struct LinearForm {
  HopfPtr algebra;
  Vector coeffs;

  LinearForm() = default;
  LinearForm(HopfPtr h, Vector c);

  const Scalar& operator()(std::size_t i) const { return coeffs[i]; }
  Scalar eval(const Vector& v) const;
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }
};

/// sigma : H (x) H -> k, sigma(e_i, e_j) = coeffs(i, j).
struct BilinearForm {
  HopfPtr algebra;
  Matrix coeffs;

  BilinearForm() = default;
  BilinearForm(HopfPtr h, Matrix c);

  const Scalar& operator()(std::size_t i, std::size_t j) const { return coeffs(i, j); }
  Scalar eval(const Vector& a, const Vector& b) const;
  friend bool operator==(const BilinearForm& a, const BilinearForm& b) { return a.coeffs == b.coeffs; }
};

LinearForm counit_form(const HopfPtr& h);
/// eps (x) eps, the unit of the convolution algebra (H (x) H)*.
BilinearForm trivial_bilinear(const HopfPtr& h);

bool is_normalized(const LinearForm& g);
bool is_normalized(const BilinearForm& s);

LinearForm convolve(const LinearForm& a, const LinearForm& b);
BilinearForm convolve(const BilinearForm& a, const BilinearForm& b);

std::optional<LinearForm> convolution_inverse(const LinearForm& f);
std::optional<BilinearForm> convolution_inverse(const BilinearForm& f);
/// Throws NotInvertible instead of returning nullopt.
LinearForm require_inverse(const LinearForm& f);
BilinearForm require_inverse(const BilinearForm& f);

/// Total order on coefficient tables, used for canonical listings.
bool canonical_less(const LinearForm& a, const LinearForm& b);
bool canonical_less(const BilinearForm& a, const BilinearForm& b);

}  // namespace hopflab
