#include "hopflab/suite/report.hpp"

#include <algorithm>

#include "hopflab/io/json_io.hpp"

namespace hopflab {

ReportEntry& Report::add(std::string name, std::string label, CheckReport r, int criterion) {
  entries.push_back({std::move(name), std::move(label), std::move(r), criterion});
  return entries.back();
}

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [v](const ReportEntry& e) { return e.report.verdict == v; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& e : entries) {
    auto j = io::to_json(e.report);
    j["name"] = e.name;
    j["label"] = e.label;
    if (e.criterion) j["criterion"] = e.criterion;
    checks.push_back(std::move(j));
  }
  nlohmann::json out{{"schema", io::kSchema},
                     {"command", command},
                     {"field", field},
                     {"checks", checks},
                     {"summary",
                      {{"pass", count(Verdict::pass)}, {"fail", count(Verdict::fail)}, {"skipped", count(Verdict::skipped)}}},
                     {"data", data}};
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

namespace {

void text_data(std::string& out, const nlohmann::json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) text_data(out, v, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  out += "  " + prefix + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

}  // namespace

std::string Report::to_text() const {
  std::string out = command + " over " + field + "\n";
  for (const auto& e : entries) {
    std::string tag = e.report.passed() ? "PASS" : e.report.failed() ? "FAIL" : "SKIP";
    out += tag + "  " + e.name;
    if (!e.label.empty()) out += "  {" + e.label + "}";
    out += "\n";
    if (!e.report.passed()) out += "      " + e.report.summary() + "\n";
  }
  if (!data.empty()) {
    out += "data:\n";
    text_data(out, data, "");
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  out += std::to_string(count(Verdict::pass)) + " passed, " + std::to_string(count(Verdict::fail)) + " failed, " +
         std::to_string(count(Verdict::skipped)) + " skipped\n";
  return out;
}

}  // namespace hopflab
