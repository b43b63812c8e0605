#pragma once

#include "hkdiag/annulus.hpp"

#include <string>
#include <vector>

namespace hk {

struct ReportEntry {
  std::string key, value;
  FactOrigin origin = FactOrigin::Computed;
};

struct ReportSection {
  std::string title;
  std::vector<ReportEntry> entries;

  void add(std::string key, std::string value, FactOrigin origin = FactOrigin::Computed) {
    entries.push_back({std::move(key), std::move(value), origin});
  }
};

struct Report {
  std::string subject;
  std::vector<ReportSection> sections;

  ReportSection &section(const std::string &title);
};

std::string render_text(const Report &r);
std::string render_json(const Report &r);

} // namespace hk
