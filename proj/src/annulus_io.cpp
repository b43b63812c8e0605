#include "diagram_parse.hpp"
#include "hkdiag/annulus.hpp"
#include "hkdiag/errors.hpp"

namespace hk {

AnnulusDiagram parse_annulus_diagram(const std::string &text) {
  auto raw = detail::parse_raw_diagram(text);
  AnnulusDiagram ad{raw.base, {}};
  for (std::size_t i = 0; i < raw.labels.size(); ++i) {
    if (!raw.labels[i]) {
      ad.labels.push_back(std::nullopt);
      continue;
    }
    std::string why;
    auto l = parse_label(*raw.labels[i], &why);
    if (!l) throw ParseError(raw.label_pos[i].first, raw.label_pos[i].second, why);
    ad.labels.push_back(*l);
  }
  check_structure(ad.base);
  return ad;
}

std::string format_annulus_diagram(const AnnulusDiagram &ad) {
  std::string out;
  for (const auto &n : ad.base.nodes) {
    out += "node " + n.id + " " + to_string(n.kind);
    if (n.genus) out += " genus=" + std::to_string(*n.genus);
    out += "\n";
  }
  for (std::size_t i = 0; i < ad.base.edges.size(); ++i) {
    out += "edge " + ad.base.edges[i].a + " " + ad.base.edges[i].b;
    if (i < ad.labels.size() && ad.labels[i]) out += " label=" + to_string(*ad.labels[i]);
    out += "\n";
  }
  return out;
}

std::string format_annulus_diagram_json(const AnnulusDiagram &ad) {
  auto j = detail::diagram_to_json(ad.base);
  j["labels"] = nlohmann::ordered_json::array();
  for (const auto &l : ad.labels) {
    if (!l) {
      j["labels"].push_back(nullptr);
      continue;
    }
    nlohmann::ordered_json o;
    switch (l->kind) {
    case LabelKind::K2:
      o["kind"] = "k2";
      o["r"] = l->r.str();
      break;
    case LabelKind::L:
      o["kind"] = "l";
      o["r1"] = l->sp.r1.str();
      o["r2"] = l->sp.r2.str();
      break;
    default:
      o["kind"] = to_string(*l);
    }
    j["labels"].push_back(o);
  }
  return j.dump(2) + "\n";
}

} // namespace hk
