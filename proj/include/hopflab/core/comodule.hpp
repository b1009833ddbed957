#pragma once

#include "hopflab/core/hopf_algebra.hpp"

namespace hopflab {

/// One summand c * e_j (x) h_k of rho(e_i) for a right comodule.
struct CoactionTerm {
  std::size_t j;
  std::size_t k;
  Scalar coeff;
};

struct Comodule {
  HopfPtr algebra;
  std::size_t dim = 0;
  std::vector<std::vector<CoactionTerm>> coaction;
  std::string label;
};

Comodule trivial_comodule(const HopfPtr& h);
Comodule regular_comodule(const HopfPtr& h);
/// rho(m (x) n) = m_0 (x) n_0 (x) m_1 n_1, basis index tensor_index(i, j, dim N).
Comodule tensor_comodule(const Comodule& m, const Comodule& n);

CheckReport verify_comodule(const Comodule& m);

/// True when the coaction tables agree term for term after canonical sorting.
bool same_coaction(const Comodule& a, const Comodule& b);

}  // namespace hopflab
