#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gchar {

using json = nlohmann::json;

struct Check {
  std::string name;
  bool pass = false;
  json expected;
  json actual;
  std::string detail;
};

/// Outcome of one operation or verification suite. Serialization is stable:
/// object keys are sorted, checks keep insertion order.
class Report {
 public:
  json inputs = json::object();
  json result = json::object();
  std::vector<Check> checks;
  double seconds = 0;

  Check& add(std::string name, bool pass, json expected = nullptr, json actual = nullptr, std::string detail = "");
  /// Records an informational finding that does not affect ok().
  void note(std::string name, json value);

  bool ok() const;
  std::vector<const Check*> failures() const;
  /// Appends the checks of `other`, prefixing their names with "prefix/".
  void merge(const std::string& prefix, const Report& other);

  json to_json(bool with_timing = true) const;
  /// One line per check: "PASS name" / "FAIL name: expected ..., actual ...".
  std::string to_text() const;

  json findings = json::object();
};

}  // namespace gchar
