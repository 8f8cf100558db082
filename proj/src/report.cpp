#include "etaq/report.hpp"

#include <algorithm>

namespace etaq {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::pass_with_threshold:
      return "pass-with-threshold";
  }
  return "fail";
}

void VerificationReport::settle() { status = violations.empty() ? Status::pass : Status::fail; }

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : violations) v.push_back({{"n", x.n}, {"expected", x.expected}, {"actual", x.actual}});
  nlohmann::json out;
  out["id"] = id;
  out["bound"] = bound;
  out["status"] = to_string(status);
  out["threshold"] = threshold ? nlohmann::json(*threshold) : nlohmann::json(nullptr);
  out["violations"] = std::move(v);
  out["elapsed_ms"] = elapsed.count();
  return out;
}

std::string VerificationReport::summary() const {
  std::string s = id + " bound=" + std::to_string(bound) + " " + to_string(status);
  if (threshold) s += " threshold=" + std::to_string(*threshold);
  s += " violations=" + std::to_string(violations.size());
  if (!violations.empty()) {
    const auto& v = violations.front();
    s += " first: n=" + std::to_string(v.n) + " expected " + v.expected + " got " + v.actual;
  }
  s += " (" + std::to_string(elapsed.count()) + " ms)";
  return s;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.ok(); }) ? 0 : 1;
}

}  // namespace etaq
