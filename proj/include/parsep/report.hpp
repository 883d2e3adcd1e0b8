#pragma once

#include <chrono>
#include <ctime>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace parsep {

/// One checked claim. `claim` is the formula under test, `expected` and
/// `actual` are human-readable renderings of the two sides.
struct CaseResult {
  std::string name;
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CaseResult> results;
  std::string timestamp;

  Summary summary() const {
    Summary s;
    s.total = static_cast<int>(results.size());
    for (const auto& r : results) s.passed += r.pass ? 1 : 0;
    s.failed = s.total - s.passed;
    return s;
  }
  bool all_passed() const { return summary().failed == 0; }

  void add(CaseResult r) { results.push_back(std::move(r)); }
  void append(const Report& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }
};

inline std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline nlohmann::ordered_json to_json(const Report& r, bool with_timestamp = true) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& c : r.results) {
    results.push_back({{"case", c.name}, {"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual},
                       {"pass", c.pass}});
  }
  Summary s = r.summary();
  nlohmann::ordered_json j{{"command", r.command},
                           {"parameters", std::move(params)},
                           {"results", std::move(results)},
                           {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}}};
  if (with_timestamp) j["timestamp"] = r.timestamp;
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Columns: case, expected, actual, pass.
inline std::string to_csv(const Report& r) {
  std::string out = "case,expected,actual,pass\n";
  for (const auto& c : r.results) {
    out += detail::csv_field(c.name) + ',' + detail::csv_field(c.expected) + ',' + detail::csv_field(c.actual) +
           ',' + (c.pass ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace parsep
