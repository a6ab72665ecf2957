#include "glq/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace glq {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void Report::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params.dump() < b.params.dump();
  });
}

Json Report::to_json(bool include_timing) const {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["config"] = config;
  doc["pass"] = pass();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["paper_ref"] = c.paper_ref;
    item["params"] = c.params;
    if (c.deviation) item["deviation"] = *c.deviation;
    if (c.exact_match) item["exact_match"] = *c.exact_match;
    if (c.value) item["value"] = *c.value;
    if (c.note) item["note"] = *c.note;
    item["pass"] = c.pass;
    if (include_timing) item["millis"] = c.millis;
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  return doc;
}

Report Report::from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema_version", -1) != kSchemaVersion) {
    throw std::invalid_argument("report: unsupported or missing schema_version");
  }
  Report report;
  report.config = doc.at("config");
  for (const auto& item : doc.at("checks")) {
    CheckRecord c;
    c.name = item.at("name").get<std::string>();
    c.paper_ref = item.at("paper_ref").get<std::string>();
    c.params = item.at("params");
    if (item.contains("deviation")) c.deviation = item["deviation"].get<double>();
    if (item.contains("exact_match")) c.exact_match = item["exact_match"].get<bool>();
    if (item.contains("value")) c.value = item["value"].get<double>();
    if (item.contains("note")) c.note = item["note"].get<std::string>();
    c.pass = item.at("pass").get<bool>();
    if (item.contains("millis")) c.millis = item["millis"].get<double>();
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string format_value(double x) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  std::string s = buffer;
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name;
    out += " [" + c.paper_ref + "]";
    for (const auto& [key, val] : c.params.items()) {
      out += ' ' + key + '=';
      if (val.is_string()) {
        out += val.get<std::string>();
      } else if (val.is_number_float()) {
        out += format_value(val.get<double>());
      } else {
        out += val.dump();
      }
    }
    if (c.value) out += " value=" + format_value(*c.value);
    if (c.deviation) {
      char buffer[48];
      std::snprintf(buffer, sizeof buffer, "%.3e", *c.deviation);
      out += std::string(" deviation=") + buffer;
    }
    if (c.exact_match) out += std::string(" exact_match=") + (*c.exact_match ? "true" : "false");
    if (c.note) out += " note=\"" + *c.note + "\"";
    out += '\n';
  }
  const auto failed = std::count_if(checks.begin(), checks.end(),
                                    [](const CheckRecord& c) { return !c.pass; });
  out += std::string("overall: ") + (pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed)\n";
  return out;
}

}  // namespace glq
