#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace astck {

/// Insertion-ordered so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

struct CheckCase {
  Json input;
  Json expected;
  Json actual;
  bool pass = false;
  std::optional<std::string> note;
};

/// Machine-readable result of a check:
/// {"check", "params", "cases": [{"input","expected","actual","pass"}], "pass"}
/// plus an optional "details" object.
struct CheckReport {
  std::string check;
  Json params = Json::object();
  std::vector<CheckCase> cases;
  Json details;

  bool pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
  }

  Json to_json() const {
    Json out;
    out["check"] = check;
    out["params"] = params;
    out["cases"] = Json::array();
    for (const auto& c : cases) {
      Json item;
      item["input"] = c.input;
      item["expected"] = c.expected;
      item["actual"] = c.actual;
      item["pass"] = c.pass;
      if (c.note) item["note"] = *c.note;
      out["cases"].push_back(std::move(item));
    }
    out["pass"] = pass();
    if (!details.is_null()) out["details"] = details;
    return out;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << check << " " << params.dump() << "\n";
    for (const auto& c : cases) {
      out << (c.pass ? "  ok   " : "  FAIL ") << c.input.dump() << " expected "
          << c.expected.dump() << " actual " << c.actual.dump();
      if (c.note) out << "  (" << *c.note << ")";
      out << "\n";
    }
    out << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
};

/// Schema check used by the CLI round-trip tests.
inline bool is_check_report(const Json& j) {
  if (!j.is_object() || !j.contains("check") || !j["check"].is_string()) return false;
  if (!j.contains("params") || !j["params"].is_object()) return false;
  if (!j.contains("pass") || !j["pass"].is_boolean()) return false;
  if (!j.contains("cases") || !j["cases"].is_array()) return false;
  return std::all_of(j["cases"].begin(), j["cases"].end(), [](const Json& c) {
    return c.is_object() && c.contains("input") && c.contains("expected") &&
           c.contains("actual") && c.contains("pass") && c["pass"].is_boolean();
  });
}

}  // namespace astck
