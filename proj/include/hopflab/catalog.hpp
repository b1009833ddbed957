#pragma once

#include <string>
#include <vector>

#include "hopflab/core/hopf_algebra.hpp"

namespace hopflab {

enum class CatalogKind { algebra, pair };

struct CatalogEntry {
  std::string name;
  CatalogKind kind;
  std::string description;
};

const std::vector<CatalogEntry>& catalog();

/// Group algebra kG from a Cayley table: table[a][b] is the index of ab, index 0 the identity.
HopfPtr group_algebra(Field f, const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels);
HopfPtr cyclic_group_algebra(Field f, std::size_t order);
HopfPtr symmetric_group_s3(Field f);
HopfPtr trivial_hopf(Field f);
/// Sweedler's H4 in the basis {1, g, x, xg}.
HopfPtr sweedler_h4(Field f);

/// Looks up an algebra entry ("h4", "dual-ks3", ...). Warnings about degenerate
/// characteristics are appended to `warnings` when given.
HopfPtr catalog_algebra(const std::string& name, Field f, std::vector<std::string>* warnings = nullptr);

}  // namespace hopflab
