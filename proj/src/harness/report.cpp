#include "sttilt/harness/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace sttilt::harness {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::fail || c.status == Status::inconclusive) return false;
  return true;
}

std::string VerificationReport::to_text(bool timings) const {
  std::ostringstream o;
  std::istringstream h(header);
  for (std::string line; std::getline(h, line);) o << "# " << line << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    o << c.name << std::string(width + 2 - c.name.size(), ' ') << status_name(c.status);
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  %.3fs", c.seconds);
      o << buf;
    }
    o << "\n";
    for (const auto& w : c.witnesses) o << "    " << w << "\n";
  }
  std::size_t failed = 0;
  for (const auto& c : checks)
    if (c.status == Status::fail || c.status == Status::inconclusive) ++failed;
  o << (failed ? "FAILED " : "ok ") << checks.size() - failed << "/" << checks.size() << "\n";
  return o.str();
}

std::string VerificationReport::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["scenario"] = header;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["suite"] = c.suite;
    e["statement"] = c.statement;
    e["status"] = status_name(c.status);
    e["witnesses"] = c.witnesses;
    if (timings) e["seconds"] = c.seconds;
    j["checks"].push_back(e);
  }
  j["ok"] = ok();
  return j.dump(2) + "\n";
}

}  // namespace sttilt::harness
