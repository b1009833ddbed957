#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopflab/core/hopf_algebra.hpp"
#include "hopflab/suite/report.hpp"

namespace hopflab {

struct SuiteOptions {
  std::size_t max_affine_dim = 25;
  /// Criteria to run (1-9); empty runs all of them.
  std::vector<int> criteria;
  /// Additional algebras (name, algebra) checked alongside the catalog.
  std::vector<std::pair<std::string, HopfPtr>> extra_algebras;
};

/// Only "paper" is known. Enumeration-based checks are skipped with a reason
/// over the rationals or when the enumeration cap is exceeded.
Report run_suite(const std::string& name, Field f, const SuiteOptions& opt = {});

}  // namespace hopflab
