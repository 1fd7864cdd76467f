#include "mopkit/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace mopkit {

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

bool ReportDocument::failed() const { return count(CheckStatus::fail) > 0; }

std::size_t ReportDocument::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

std::string ReportDocument::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["spec"] = spec;
  doc["field"] = field;
  doc["suite"] = suite;
  if (seed) doc["seed"] = *seed;
  doc["summary"] = {{"pass", count(CheckStatus::pass)},
                    {"fail", count(CheckStatus::fail)},
                    {"skipped", count(CheckStatus::skipped)}};
  ordered_json list = ordered_json::array();
  for (const auto& r : records) {
    ordered_json inputs = ordered_json::object();
    for (const auto& [key, value] : r.inputs) inputs[key] = value;
    ordered_json rec;
    rec["check"] = r.check;
    rec["anchor"] = r.anchor;
    rec["inputs"] = std::move(inputs);
    rec["lhs"] = r.lhs;
    rec["rhs"] = r.rhs;
    rec["equal"] = r.equal;
    rec["max_error"] = r.max_error;
    rec["runtime"] = r.runtime;
    rec["status"] = status_name(r.status);
    if (!r.detail.empty()) rec["detail"] = r.detail;
    list.push_back(std::move(rec));
  }
  doc["records"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace mopkit
