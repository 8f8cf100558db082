#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace etaq {

enum class Status { pass, fail, pass_with_threshold };

std::string to_string(Status s);

struct Violation {
  std::int64_t n;
  std::string expected;
  std::string actual;
};

/// Outcome of one verification run. status is pass iff there are no violations; for
/// threshold scans, pass_with_threshold means every violation sits at or below `threshold`.
struct VerificationReport {
  std::string id;
  std::int64_t bound = 0;
  Status status = Status::pass;
  std::optional<std::int64_t> threshold;
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};

  bool ok() const { return status != Status::fail; }
  /// Sets status from the violation list (pass / fail).
  void settle();

  nlohmann::json to_json() const;
  /// One line: "<id> bound=<b> <status> [threshold=..] violations=<k> (<ms> ms)".
  std::string summary() const;
};

/// Exit status for a set of reports: 0 when all are ok, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace etaq
