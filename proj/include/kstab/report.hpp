#pragma once

// Structured pass/fail records for the verification suites.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kstab {

/// Schema identifier written into every JSON report; bump on breaking changes.
inline constexpr std::string_view kReportSchema = "kstab.verification-report/1";

enum class Status { pass, fail, discrepancy_noted };

std::string_view status_name(Status s);

struct Check {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;
  std::string actual;
  Status status = Status::pass;
  std::int64_t duration_ms = 0;

  /// "suite[k=v,...]", used to pin expected discrepancies.
  std::string key() const;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int discrepancy_noted = 0;
};

class VerificationReport {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void append(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  Summary summary() const;
  /// No check has status fail.
  bool ok() const { return summary().fail == 0; }

  /// Keys of all discrepancy-noted checks, in report order.
  std::vector<std::string> discrepancy_keys() const;

  /// With include_timings == false every duration is written as 0, making
  /// the document byte-identical across runs.
  std::string to_json(bool include_timings = true) const;
  void write_text(std::ostream& out) const;

 private:
  std::vector<Check> checks_;
};

std::string tool_version();

}  // namespace kstab
