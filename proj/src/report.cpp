#include "hkdiag/report.hpp"

#include <json.hpp>

namespace hk {

ReportSection &Report::section(const std::string &title) {
  for (auto &s : sections)
    if (s.title == title) return s;
  sections.push_back({title, {}});
  return sections.back();
}

std::string render_text(const Report &r) {
  std::string out = r.subject + "\n";
  for (const auto &s : r.sections) {
    out += "[" + s.title + "]\n";
    std::size_t w = 0;
    for (const auto &e : s.entries) w = std::max(w, e.key.size());
    for (const auto &e : s.entries)
      out += "  " + e.key + std::string(w - e.key.size(), ' ') + "  " + e.value + "  (" +
             to_string(e.origin) + ")\n";
  }
  return out;
}

std::string render_json(const Report &r) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto &s : r.sections) {
    nlohmann::ordered_json js;
    js["title"] = s.title;
    js["facts"] = nlohmann::ordered_json::array();
    for (const auto &e : s.entries)
      js["facts"].push_back({{"key", e.key}, {"value", e.value}, {"provenance", to_string(e.origin)}});
    j["sections"].push_back(js);
  }
  return j.dump(2) + "\n";
}

} // namespace hk
