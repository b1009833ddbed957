#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopflab/biproducts/yd_forms.hpp"
#include "hopflab/check_report.hpp"
#include "hopflab/core/comodule.hpp"
#include "hopflab/core/forms.hpp"
#include "hopflab/twines/twines.hpp"

namespace hopflab::io {

using nlohmann::json;

inline constexpr const char* kSchema = "1";

json read_json_file(const std::filesystem::path& p);
void write_json_file(const std::filesystem::path& p, const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const json& j);

json to_json(const HopfAlgebra& h);
/// Structure constants only; the axioms are left to verify_hopf.
HopfPtr algebra_from_json(const json& j);

json to_json(const Witness& w);
json to_json(const CheckReport& r);

/// Turns references into objects. A reference is an inline JSON object or a
/// string: "builtin:NAME", "double:REF", "biproduct:PAIRREF" or a file path
/// (relative to the directory of the file that mentions it). The same
/// reference always yields the same pointer, so objects loaded from several
/// files can be combined. Catalog references are built over `field` when
/// given (files carry it as "field"), otherwise over the default field.
class Resolver {
 public:
  explicit Resolver(Field default_field, std::filesystem::path base = {}) : field_(default_field), base_(std::move(base)) {}

  Field field() const noexcept { return field_; }
  HopfPtr algebra(const json& ref, const std::filesystem::path& base = {}, std::optional<Field> field = std::nullopt);
  YDPairPtr pair(const json& ref, const std::filesystem::path& base = {}, std::optional<Field> field = std::nullopt);
  /// Catalog warnings collected while resolving.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::string key(const json& ref, const std::filesystem::path& base, std::optional<Field> field) const;
  Field field_;
  std::filesystem::path base_;
  std::map<std::string, HopfPtr> algebras_;
  std::map<std::string, YDPairPtr> pairs_;
  std::vector<std::string> warnings_;
};

json to_json(const Comodule& m, const json& algebra_ref);
Comodule comodule_from_json(const json& j, Resolver& r, const std::filesystem::path& base = {});

json to_json(const LinearForm& g, const json& algebra_ref);
json to_json(const BilinearForm& s, const json& algebra_ref);
json to_json(const YDLinear& g, const json& pair_ref);
json to_json(const YDBilinear& s, const json& pair_ref);

/// A form file: over an algebra ("algebra_ref") or over the B of a pair ("pair_ref").
struct FormFile {
  std::optional<LinearForm> linear;
  std::optional<BilinearForm> bilinear;
  std::optional<YDLinear> yd_linear;
  std::optional<YDBilinear> yd_bilinear;
};
FormFile form_from_json(const json& j, Resolver& r, const std::filesystem::path& base = {});

json to_json(const YDPair& p, const json& host_ref);
YDPairPtr pair_from_json(const json& j, Resolver& r, const std::filesystem::path& base = {});

json to_json(const SparseMatrix& m);
SparseMatrix sparse_from_json(Field f, const json& j);

/// Family files: "kind" is "twine", "pure-braided" or "d-structure"; objects
/// are named by comodule labels joined with '*', "I" for the unit.
json family_to_json(const ComoduleCategory& cat, const json& algebra_ref, const PairTable& t);
json family_to_json(const ComoduleCategory& cat, const json& algebra_ref, const TripleTable& t);
json family_to_json(const ComoduleCategory& cat, const json& algebra_ref, const ObjectTable& t);

struct FamilyFile {
  CategoryPtr category;
  PairFamilyPtr pair;
  TripleFamilyPtr triple;
  ObjectFamilyPtr object;
};
FamilyFile family_from_json(const json& j, Resolver& r, const std::filesystem::path& base = {});

/// Comodule list for a category: each entry is "regular" or an inline comodule.
CategoryPtr category_from_json(const HopfPtr& h, const json& comodules, Resolver& r, const std::filesystem::path& base = {});

}  // namespace hopflab::io
