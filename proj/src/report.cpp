#include "gchar/report.hpp"

#include <sstream>

namespace gchar {

Check& Report::add(std::string name, bool pass, json expected, json actual, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(expected), std::move(actual), std::move(detail)});
  return checks.back();
}

void Report::note(std::string name, json value) { findings[std::move(name)] = std::move(value); }

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<const Check*> Report::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(&c);
  return out;
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = prefix + "/" + c.name;
    checks.push_back(std::move(copy));
  }
  for (const auto& [k, v] : other.findings.items()) findings[prefix + "/" + k] = v;
}

json Report::to_json(bool with_timing) const {
  json j = json::object();
  j["inputs"] = inputs;
  j["result"] = result;
  json cs = json::array();
  for (const auto& c : checks) {
    json e = {{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  if (!findings.empty()) j["findings"] = findings;
  j["ok"] = ok();
  if (with_timing) j["timing"] = {{"seconds", seconds}};
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.pass) out << ": expected " << c.expected.dump() << ", actual " << c.actual.dump();
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  for (const auto& [k, v] : findings.items()) out << "NOTE " << k << ": " << v.dump() << "\n";
  out << (ok() ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace gchar
