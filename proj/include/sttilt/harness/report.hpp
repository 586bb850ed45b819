#pragma once

#include <string>
#include <vector>

namespace sttilt::harness {

enum class Status { pass, fail, inconclusive, skipped };

const char* status_name(Status s);

struct CheckResult {
  std::string name;
  std::string suite;
  std::string statement;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  double seconds = 0;
};

struct VerificationReport {
  std::string header;  // the scenario with all defaults spelled out
  std::vector<CheckResult> checks;

  /// No check failed or was inconclusive.
  bool ok() const;
  std::string to_text(bool timings = false) const;
  std::string to_json(bool timings = false) const;
};

}  // namespace sttilt::harness
