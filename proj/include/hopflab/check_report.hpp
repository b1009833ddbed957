#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/exact/scalar.hpp"

namespace hopflab {

enum class Verdict { pass, fail, skipped };

std::string_view to_string(Verdict v);

/// Where an identity broke: the basis-index tuple it was evaluated at and the
/// two sides. Scalar-valued identities have one-entry sides.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<exact::Scalar> lhs;
  std::vector<exact::Scalar> rhs;
  std::string context;
};

struct CheckReport {
  Verdict verdict = Verdict::pass;
  std::string condition;
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  static CheckReport pass(std::string condition) { return {Verdict::pass, std::move(condition), std::nullopt, {}}; }
  static CheckReport fail(std::string condition, Witness w) {
    return {Verdict::fail, std::move(condition), std::move(w), {}};
  }
  static CheckReport skipped(std::string condition, std::string reason) {
    return {Verdict::skipped, std::move(condition), std::nullopt, {std::move(reason)}};
  }

  bool passed() const noexcept { return verdict == Verdict::pass; }
  bool failed() const noexcept { return verdict == Verdict::fail; }

  CheckReport& note(std::string text) {
    notes.push_back(std::move(text));
    return *this;
  }

  std::string summary() const;
};

}  // namespace hopflab
