#pragma once

#include "hkdiag/diagram.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hk::detail {

struct RawDiagram {
  CharDiagram base;
  std::vector<std::optional<std::string>> labels;
  std::vector<std::pair<std::size_t, std::size_t>> label_pos; // line, column
};

RawDiagram parse_raw_diagram(const std::string &text);
nlohmann::ordered_json diagram_to_json(const CharDiagram &d);

// Line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string &text, std::size_t offset);

} // namespace hk::detail
