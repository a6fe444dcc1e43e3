#include "kstab/report.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace kstab {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::discrepancy_noted: return "discrepancy-noted";
  }
  return "unknown";
}

std::string Check::key() const {
  std::string out = suite + "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += params[i].first + "=" + params[i].second;
  }
  return out + "]";
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const Check& c : checks_) {
    switch (c.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::discrepancy_noted: ++s.discrepancy_noted; break;
    }
  }
  return s;
}

std::vector<std::string> VerificationReport::discrepancy_keys() const {
  std::vector<std::string> out;
  for (const Check& c : checks_) {
    if (c.status == Status::discrepancy_noted) out.push_back(c.key());
  }
  return out;
}

std::string VerificationReport::to_json(bool include_timings) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["tool_version"] = tool_version();
  ordered_json checks = ordered_json::array();
  for (const Check& c : checks_) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    checks.push_back(ordered_json{
        {"suite", c.suite},
        {"params", std::move(params)},
        {"expected", c.expected},
        {"actual", c.actual},
        {"status", status_name(c.status)},
        {"duration_ms", include_timings ? c.duration_ms : 0},
    });
  }
  doc["checks"] = std::move(checks);
  const Summary s = summary();
  doc["summary"] = ordered_json{{"pass", s.pass}, {"fail", s.fail}, {"discrepancy-noted", s.discrepancy_noted}};
  return doc.dump(2) + "\n";
}

void VerificationReport::write_text(std::ostream& out) const {
  for (const Check& c : checks_) {
    out << std::left << std::setw(18) << status_name(c.status) << c.key() << "  expected: " << c.expected
        << "  actual: " << c.actual << "  (" << c.duration_ms << " ms)\n";
  }
  const Summary s = summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.discrepancy_noted << " discrepancy-noted\n";
}

std::string tool_version() {
#ifdef KSTAB_VERSION
  return KSTAB_VERSION;
#else
  return "unknown";
#endif
}

}  // namespace kstab
