#include "diagram_parse.hpp"
#include "text_lines.hpp"
#include "hkdiag/errors.hpp"

#include <charconv>

namespace hk {
namespace detail {

std::pair<std::size_t, std::size_t> locate(const std::string &text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line, col = 1;
    else ++col;
  }
  return {line, col};
}

namespace {

NodeKind parse_kind(const Token &t, std::size_t line) {
  if (t.text == "solid") return NodeKind::Solid;
  if (t.text == "hollow") return NodeKind::Hollow;
  throw ParseError(line, t.column, "expected 'solid' or 'hollow', got '" + t.text + "'");
}

int parse_genus(const std::string &s, std::size_t line, std::size_t col) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1)
    throw ParseError(line, col, "bad genus '" + s + "'");
  return v;
}

RawDiagram parse_text(const std::string &text) {
  RawDiagram r;
  for (const auto &line : tokenize(text)) {
    const auto &t = line.tokens;
    if (t[0].text == "node") {
      if (t.size() < 3) throw ParseError(line.number, end_column(line), "node needs an id and a kind");
      if (t.size() > 4) throw ParseError(line.number, t[4].column, "unexpected token '" + t[4].text + "'");
      Node n{t[1].text, parse_kind(t[2], line.number), std::nullopt};
      if (t.size() == 4) {
        if (t[3].text.rfind("genus=", 0) != 0)
          throw ParseError(line.number, t[3].column, "expected genus=<n>");
        n.genus = parse_genus(t[3].text.substr(6), line.number, t[3].column + 6);
      }
      r.base.nodes.push_back(std::move(n));
    } else if (t[0].text == "edge") {
      if (t.size() < 3) throw ParseError(line.number, end_column(line), "edge needs two node ids");
      if (t.size() > 4) throw ParseError(line.number, t[4].column, "unexpected token '" + t[4].text + "'");
      r.base.edges.push_back({t[1].text, t[2].text});
      if (t.size() == 4) {
        if (t[3].text.rfind("label=", 0) != 0)
          throw ParseError(line.number, t[3].column, "expected label=<label>");
        r.labels.push_back(t[3].text.substr(6));
        r.label_pos.emplace_back(line.number, t[3].column + 6);
      } else {
        r.labels.push_back(std::nullopt);
        r.label_pos.emplace_back(line.number, t[2].column);
      }
    } else {
      throw ParseError(line.number, t[0].column, "unknown declaration '" + t[0].text + "'");
    }
  }
  if (r.base.nodes.empty()) throw ParseError(1, 1, "no node declarations");
  return r;
}

std::string label_from_json(const nlohmann::json &j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "k2") return "k2(" + j.at("r").get<std::string>() + ")";
  if (kind == "l")
    return "l(" + j.at("r1").get<std::string>() + "," + j.at("r2").get<std::string>() + ")";
  return kind;
}

RawDiagram parse_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    auto [l, c] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(l, c, "malformed JSON");
  }
  RawDiagram r;
  try {
    for (const auto &n : j.at("nodes")) {
      std::string kind = n.at("kind").get<std::string>();
      if (kind != "solid" && kind != "hollow") throw ParseError(1, 1, "bad node kind '" + kind + "'");
      Node node{n.at("id").get<std::string>(),
                kind == "solid" ? NodeKind::Solid : NodeKind::Hollow, std::nullopt};
      if (n.contains("genus") && !n.at("genus").is_null()) node.genus = n.at("genus").get<int>();
      r.base.nodes.push_back(std::move(node));
    }
    for (const auto &e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError(1, 1, "edge must be a pair of ids");
      r.base.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
    }
    if (j.contains("labels")) {
      const auto &ls = j.at("labels");
      if (ls.size() != r.base.edges.size()) throw ParseError(1, 1, "labels and edges differ in length");
      for (const auto &l : ls)
        r.labels.push_back(l.is_null() ? std::nullopt : std::optional(label_from_json(l)));
    } else {
      r.labels.assign(r.base.edges.size(), std::nullopt);
    }
    r.label_pos.assign(r.base.edges.size(), {1, 1});
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(1, 1, std::string("JSON shape: ") + e.what());
  }
  if (r.base.nodes.empty()) throw ParseError(1, 1, "no nodes");
  return r;
}

} // namespace

RawDiagram parse_raw_diagram(const std::string &text) {
  return is_json(text) ? parse_json(text) : parse_text(text);
}

nlohmann::ordered_json diagram_to_json(const CharDiagram &d) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto &n : d.nodes) {
    nlohmann::ordered_json node;
    node["id"] = n.id;
    node["kind"] = to_string(n.kind);
    node["genus"] = n.genus ? nlohmann::ordered_json(*n.genus) : nlohmann::ordered_json(nullptr);
    j["nodes"].push_back(node);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto &e : d.edges) j["edges"].push_back({e.a, e.b});
  return j;
}

} // namespace detail

CharDiagram parse_diagram(const std::string &text) {
  auto raw = detail::parse_raw_diagram(text);
  for (std::size_t i = 0; i < raw.labels.size(); ++i)
    if (raw.labels[i])
      throw ParseError(raw.label_pos[i].first, raw.label_pos[i].second,
                       "labels belong to annulus diagrams");
  check_structure(raw.base);
  return raw.base;
}

std::string format_diagram(const CharDiagram &d) {
  std::string out;
  for (const auto &n : d.nodes) {
    out += "node " + n.id + " " + to_string(n.kind);
    if (n.genus) out += " genus=" + std::to_string(*n.genus);
    out += "\n";
  }
  for (const auto &e : d.edges) out += "edge " + e.a + " " + e.b + "\n";
  return out;
}

std::string format_diagram_json(const CharDiagram &d) {
  return detail::diagram_to_json(d).dump(2) + "\n";
}

} // namespace hk
