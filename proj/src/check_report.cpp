#include "hopflab/check_report.hpp"

namespace hopflab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string render(const std::vector<exact::Scalar>& side) {
  if (side.size() == 1) return side.front().to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (i) out += ",";
    out += side[i].to_string();
  }
  return out + ")";
}

}  // namespace

std::string CheckReport::summary() const {
  std::string out = std::string(to_string(verdict)) + " [" + condition + "]";
  if (witness) {
    out += " at (";
    for (std::size_t i = 0; i < witness->indices.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(witness->indices[i]);
    }
    out += ")";
    if (!witness->context.empty()) out += " " + witness->context;
    out += ": lhs=" + render(witness->lhs) + " rhs=" + render(witness->rhs);
  }
  for (const auto& n : notes) out += "; " + n;
  return out;
}

}  // namespace hopflab
