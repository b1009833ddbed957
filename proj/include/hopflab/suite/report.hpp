#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hopflab/check_report.hpp"

namespace hopflab {

struct ReportEntry {
  std::string name;
  /// Name of the statement being checked, as printed in reports.
  std::string label;
  CheckReport report;
  /// Acceptance criterion number, 0 when the entry belongs to none.
  int criterion = 0;
};

/// Output of one command: checks in a fixed order plus command-specific data.
struct Report {
  std::string command;
  std::string field;
  std::vector<ReportEntry> entries;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> notes;

  ReportEntry& add(std::string name, std::string label, CheckReport r, int criterion = 0);
  std::size_t count(Verdict v) const;
  bool failed() const { return count(Verdict::fail) > 0; }
  int exit_code() const { return failed() ? 1 : 0; }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace hopflab
