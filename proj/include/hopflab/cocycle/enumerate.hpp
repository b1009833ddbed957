#pragma once

#include <string>

#include "hopflab/core/forms.hpp"

namespace hopflab {

struct EnumerationOptions {
  std::size_t max_affine_dim = 14;
};

/// Normalized, convolution-invertible linear forms (Reg^1).
std::vector<LinearForm> enumerate_regular_elements(const HopfPtr& h, const EnumerationOptions& opt = {});
/// Reg^1_L(H).
std::vector<LinearForm> enumerate_lazy_elements(const HopfPtr& h, const EnumerationOptions& opt = {});
/// Z^2_L(H).
std::vector<BilinearForm> enumerate_lazy_cocycles(const HopfPtr& h, const EnumerationOptions& opt = {});

/// Convolution-invertible r with r(a_1, b_1) a_2 b_2 = b_1 a_1 r(a_2, b_2),
/// r(ab, c) = r(a, c_1) r(b, c_2) and r(a, bc) = r(a_1, c) r(a_2, b).
std::vector<BilinearForm> enumerate_coquasitriangular(const HopfPtr& h, const EnumerationOptions& opt = {});

struct CocycleClassification {
  Field field = Field::rational();
  std::string algebra;
  std::vector<BilinearForm> lazy;       // Z^2_L
  std::vector<BilinearForm> pure;       // Z^2_PL
  std::vector<BilinearForm> neat;       // Z^2_NL
  std::vector<BilinearForm> coboundaries;  // B^2_L
  std::vector<LinearForm> lazy_elements;
  /// Partition of `lazy` (as indices) into cosets sigma * B^2_L.
  std::vector<std::vector<std::size_t>> cosets;
  std::size_t h2l_order = 0;
  std::size_t affine_dimension = 0;
};

CocycleClassification classify(const HopfPtr& h, const std::string& label, const EnumerationOptions& opt = {});
/// Checks the containments, coset sizes and the order identity of a classification.
CheckReport check_classification(const CocycleClassification& c);

/// Key usable in ordered containers; equal keys iff equal coefficient tables.
std::string form_key(const LinearForm& g);
std::string form_key(const BilinearForm& s);

}  // namespace hopflab
