#include "hkdiag/facts.hpp"
#include "hkdiag/errors.hpp"
#include "hkdiag/wirtinger.hpp"

#include <algorithm>
#include <charconv>

namespace hk {

namespace {

bool parse_bool(const std::string &key, const std::string &v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw DomainError("fact '" + key + "' needs true or false, got '" + v + "'");
}

const std::set<std::string> kBoolKeys = {"planar", "atoroidal", "irreducible", "split",
                                         "trivial_link"};

std::string knot_key(const std::string &c) { return "trivial_knot:" + c; }

} // namespace

void FactSet::set(const std::string &key, bool v, FactSource source, const std::string &oracle) {
  auto it = bools_.find(key);
  if (it != bools_.end() && it->second.value != v) {
    auto show = [&](const Fact &f) {
      return std::string(f.value ? "true" : "false") +
             (f.source == FactSource::Computed ? " (computed: " + f.oracle + ")" : " (asserted)");
    };
    throw ContradictionError("fact '" + key + "' is both " + show(it->second) + " and " +
                             show({v, source, oracle}));
  }
  if (it == bools_.end() || source == FactSource::Computed) bools_[key] = {v, source, oracle};
}

void FactSet::assert_fact(const std::string &key, const std::string &value, FactSource source,
                          const std::string &oracle) {
  if (kBoolKeys.count(key)) {
    set(key, parse_bool(key, value), source, oracle);
  } else if (key == "trivial_knot" || key == "nontrivial_knot") {
    if (value.empty()) throw DomainError("fact '" + key + "' needs a constituent name");
    set(knot_key(value), key == "trivial_knot", source, oracle);
  } else if (key.rfind("trivial_knot:", 0) == 0) {
    set(key, parse_bool(key, value), source, oracle);
  } else if (key == "tunnel" || key == "knotting_arc") {
    auto &slot = key == "tunnel" ? tunnel_ : knotting_;
    if (slot && *slot != value)
      throw ContradictionError("two different edges asserted as " + key + ": '" + *slot +
                               "' and '" + value + "'");
    slot = value;
    (key == "tunnel" ? tunnel_src_ : knotting_src_) = source;
  } else if (key == "lk") {
    int n = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc() || p != value.data() + value.size())
      throw DomainError("fact 'lk' needs an integer, got '" + value + "'");
    if (lk_ && *lk_ != n) throw ContradictionError("two different linking numbers asserted");
    lk_ = n;
    lk_src_ = source;
  } else {
    throw DomainError("unknown fact '" + key +
                      "' (known: planar, atoroidal, irreducible, split, trivial_link, tunnel, "
                      "knotting_arc, trivial_knot, nontrivial_knot, lk)");
  }
}

void FactSet::assert_all(const std::vector<std::pair<std::string, std::string>> &kv,
                         FactSource source) {
  for (const auto &[k, v] : kv) assert_fact(k, v, source);
}

std::optional<bool> FactSet::get(const std::string &key) const {
  auto it = bools_.find(key);
  if (it == bools_.end()) return std::nullopt;
  return it->second.value;
}

std::vector<std::pair<std::string, std::string>> FactSet::as_assertions(FactSource which) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &[k, f] : bools_) {
    if (f.source != which) continue;
    if (k.rfind("trivial_knot:", 0) == 0)
      out.push_back({f.value ? "trivial_knot" : "nontrivial_knot", k.substr(13)});
    else
      out.push_back({k, f.value ? "true" : "false"});
  }
  if (tunnel_ && tunnel_src_ == which) out.push_back({"tunnel", *tunnel_});
  if (knotting_ && knotting_src_ == which) out.push_back({"knotting_arc", *knotting_});
  if (lk_ && lk_src_ == which) out.push_back({"lk", std::to_string(*lk_)});
  return out;
}

std::vector<std::string> constituent_names(const SpatialGraphCode &g) {
  std::vector<std::string> out;
  if (g.shape == GraphShape::Theta) {
    const auto &e = g.edges;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) out.push_back(e[i].id + "+" + e[j].id);
  } else {
    for (const auto &e : g.edges)
      if (e.closed || e.is_loop()) out.push_back(e.id);
  }
  return out;
}

std::string normalize_constituent(const SpatialGraphCode &g, const std::string &name) {
  auto names = constituent_names(g);
  if (std::find(names.begin(), names.end(), name) != names.end()) return name;
  if (auto plus = name.find('+'); plus != std::string::npos) {
    std::string swapped = name.substr(plus + 1) + "+" + name.substr(0, plus);
    if (std::find(names.begin(), names.end(), swapped) != names.end()) return swapped;
  }
  std::string known;
  for (const auto &n : names) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown constituent '" + name + "' (known: " + known + ")");
}

FactSet with_certificates(const SpatialGraphCode &g, const FactSet &user) {
  require_valid(g);
  FactSet f;
  for (const auto &[k, fact] : user.booleans()) {
    std::string key = k;
    if (k.rfind("trivial_knot:", 0) == 0) key = knot_key(normalize_constituent(g, k.substr(13)));
    f.assert_fact(key, fact.value ? "true" : "false", fact.source, fact.oracle);
  }
  if (user.tunnel()) f.assert_fact("tunnel", *user.tunnel(), user.tunnel_source());
  if (user.knotting_arc()) f.assert_fact("knotting_arc", *user.knotting_arc());
  if (user.linking()) f.assert_fact("lk", std::to_string(*user.linking()));

  const auto C = FactSource::Computed;
  if (g.crossing_count() == 0) {
    if (g.shape == GraphShape::Link) f.assert_fact("trivial_link", "true", C, "crossing-free diagram");
    else f.assert_fact("planar", "true", C, "crossing-free diagram");
  }

  std::vector<std::pair<std::string, SpatialGraphCode>> knots;
  SpatialGraphCode link;
  if (g.shape == GraphShape::Theta) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        auto k = constituent_knot(g, g.edges[i].id, g.edges[j].id);
        knots.emplace_back(k.edges[0].id, k);
      }
  } else {
    link = constituent_link(g);
    for (const auto &e : link.edges) knots.emplace_back(e.id, component_knot(link, e.id));
  }
  for (const auto &[name, k] : knots) {
    if (k.crossing_count() == 0) {
      f.assert_fact(knot_key(name), "true", C, "no self-crossings");
      continue;
    }
    auto a = alexander_polynomial(k);
    if (!(a == LaurentPoly::constant(1)))
      f.assert_fact(knot_key(name), "false", C, "alexander polynomial " + a.str());
  }

  if (g.shape != GraphShape::Theta && link.edges.size() == 2) {
    const auto &a = link.edges[0].id, &b = link.edges[1].id;
    int lk = linking_number(link, a, b);
    f.assert_fact("lk", std::to_string(lk), C);
    if (lk != 0) {
      f.assert_fact("split", "false", C, "linking number " + std::to_string(lk));
      if (g.shape == GraphShape::Link)
        f.assert_fact("trivial_link", "false", C, "linking number " + std::to_string(lk));
    }
    bool between = false;
    std::map<std::string, std::set<std::string>> owners;
    for (const auto &e : link.edges)
      for (const auto &p : e.passes) owners[p.crossing].insert(e.id);
    for (const auto &[id, s] : owners) between |= s.size() == 2;
    if (!between) f.assert_fact("split", "true", C, "no crossings between components");
    if (link.crossing_count() == 0 && g.shape == GraphShape::Handcuff)
      f.assert_fact("trivial_link", "true", C, "crossing-free constituent link");
  }
  check_consistency(g, f);
  return f;
}

void check_consistency(const SpatialGraphCode &g, const FactSet &f) {
  auto is = [&](const std::string &k, bool v) { return f.get(k) == v; };
  auto clash = [](const std::string &a, const std::string &b) {
    throw ContradictionError("inconsistent facts: " + a + " and " + b);
  };
  std::optional<std::string> nontrivial;
  for (const auto &[k, fact] : f.booleans())
    if (k.rfind("trivial_knot:", 0) == 0 && !fact.value && !nontrivial) nontrivial = k.substr(13);

  for (const auto *arc : {&f.tunnel(), &f.knotting_arc()})
    if (*arc && !g.has_edge(**arc)) throw DomainError("fact names unknown edge '" + **arc + "'");
  if (g.shape == GraphShape::Handcuff)
    for (const auto *arc : {&f.tunnel(), &f.knotting_arc()})
      if (*arc && g.edge(**arc).is_loop())
        throw DomainError("edge '" + **arc + "' is a loop, not the connecting arc");

  if (is("planar", true)) {
    if (nontrivial) clash("planar", "nontrivial constituent '" + *nontrivial + "'");
    if (is("split", false)) clash("planar", "non-split constituent link");
    if (is("irreducible", true)) clash("planar", "irreducible");
    if (f.knotting_arc()) clash("planar", "knotting arc '" + *f.knotting_arc() + "'");
  }
  if (f.tunnel() && is("irreducible", true)) clash("tunnel '" + *f.tunnel() + "'", "irreducible");
  if (f.tunnel() && f.knotting_arc() && *f.tunnel() == *f.knotting_arc())
    clash("tunnel '" + *f.tunnel() + "'", "knotting arc on the same edge");
  if (is("trivial_link", true)) {
    if (is("split", false)) clash("trivial_link", "non-split");
    if (nontrivial) clash("trivial_link", "nontrivial component '" + *nontrivial + "'");
  }
}

std::string to_string(const GraphClass &c) {
  switch (c.variant) {
  case GraphClass::Variant::Theta: return "tau" + std::to_string(c.type);
  case GraphClass::Variant::Handcuff: return "h" + std::to_string(c.type);
  case GraphClass::Variant::Unclassified: return "unclassified";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(const std::string &s) {
  for (int t = 1; t <= 4; ++t) {
    if (s == "tau" + std::to_string(t)) return GraphClass::theta(t);
    if (s == "h" + std::to_string(t)) return GraphClass::handcuff(t);
  }
  return std::nullopt;
}

GraphClass classify_atoroidal(const SpatialGraphCode &g, const FactSet &f) {
  check_consistency(g, f);
  if (g.shape == GraphShape::Link) return GraphClass::unclassified("not a theta or handcuff graph");
  if (f.get("atoroidal") != true)
    return GraphClass::unclassified("atoroidality not asserted", {"atoroidal"});
  auto irr = f.get("irreducible");
  auto planar = f.get("planar");
  bool tunnel = f.tunnel().has_value(), knotting = f.knotting_arc().has_value();

  if (g.shape == GraphShape::Theta) {
    if (planar == true) return GraphClass::theta(1);
    bool any_nontrivial = false;
    std::vector<std::string> unknown;
    for (const auto &c : constituent_names(g)) {
      auto v = f.get(knot_key(c));
      if (v == false) any_nontrivial = true;
      if (!v) unknown.push_back("trivial_knot/nontrivial_knot=" + c);
    }
    if (any_nontrivial) {
      if (tunnel || irr == false) return GraphClass::theta(3);
      if (knotting || irr == true) return GraphClass::theta(4);
      return GraphClass::unclassified("nontrivial constituent; arc type unknown",
                                      {"tunnel or knotting_arc or irreducible"});
    }
    if (!unknown.empty())
      return GraphClass::unclassified("constituent knots not all decided", unknown);
    if (tunnel || irr == false) return GraphClass::theta(1);
    if (knotting || irr == true || planar == false) return GraphClass::theta(2);
    return GraphClass::unclassified("trivial constituents; planarity unknown",
                                    {"planar or irreducible"});
  }

  if (planar == true) return GraphClass::handcuff(1);
  auto split = f.get("split");
  if (split == true) {
    if (tunnel || irr == false) return GraphClass::handcuff(1);
    if (knotting || irr == true || planar == false) return GraphClass::handcuff(2);
    return GraphClass::unclassified("split link; arc type unknown",
                                    {"tunnel or knotting_arc or irreducible"});
  }
  if (split == false) {
    if (tunnel || irr == false) return GraphClass::handcuff(3);
    if (knotting || irr == true) return GraphClass::handcuff(4);
    return GraphClass::unclassified("non-split link; arc type unknown",
                                    {"tunnel or knotting_arc or irreducible"});
  }
  return GraphClass::unclassified("splitness of the constituent link unknown", {"split"});
}

Transition looping_transition(const GraphClass &c, LoopingKind kind) {
  using V = GraphClass::Variant;
  if (c.variant == V::Unclassified) return {{c}, "source unclassified"};
  if (c.variant == V::Theta) {
    switch (c.type) {
    case 1: return {{GraphClass::handcuff(3)}, "equivalent to 2_1"};
    case 2:
    case 4: return {{GraphClass::handcuff(4)}, ""};
    case 3:
      if (kind == LoopingKind::KnotLooping) return {{GraphClass::handcuff(4)}, ""};
      return {{GraphClass::handcuff(3), GraphClass::handcuff(4)},
              kind == LoopingKind::TunnelLooping ? "indeterminate for a tunnel looping"
                                                 : "indeterminate without the looping kind"};
    }
  }
  if (c.type == 1) return {{GraphClass::handcuff(1)}, ""};
  return {{GraphClass::handcuff(2)}, ""};
}

std::vector<TransitionRow> transition_table() {
  auto T = GraphClass::theta;
  auto H = GraphClass::handcuff;
  const auto knot = LoopingKind::KnotLooping, tunnel = LoopingKind::TunnelLooping;
  return {
      {T(1), std::nullopt, H(3), "equivalent to 2_1"},
      {T(2), std::nullopt, H(4), ""},
      {T(3), knot, H(4), ""},
      {T(3), tunnel, H(3), "indeterminate"},
      {T(3), tunnel, H(4), "indeterminate"},
      {T(4), std::nullopt, H(4), ""},
      {H(1), std::nullopt, H(1), ""},
      {H(2), std::nullopt, H(2), ""},
      {H(3), std::nullopt, H(2), ""},
      {H(4), std::nullopt, H(2), ""},
  };
}

void record_source(LoopingRecord &rec, const SpatialGraphCode &source, const FactSet &facts) {
  auto c = classify_atoroidal(source, facts);
  if (c.variant != GraphClass::Variant::Unclassified) rec.source_class = to_string(c);
  rec.source_asserted = facts.as_assertions(FactSource::User);
  rec.source_computed = facts.as_assertions(FactSource::Computed);
}

namespace {

bool in(const std::optional<GraphClass> &c, std::initializer_list<const char *> names) {
  if (!c) return false;
  auto s = to_string(*c);
  return std::any_of(names.begin(), names.end(), [&](const char *n) { return s == n; });
}

} // namespace

AnnulusPrediction predicted_annulus(const SpatialGraphCode &g) {
  AnnulusPrediction p;
  if (!g.looping) {
    p.notes.push_back("no looping record; nothing predicted");
    return p;
  }
  const auto &rec = *g.looping;
  FactSet src;
  src.assert_all(rec.source_asserted);
  for (const auto &[k, v] : rec.source_computed) src.assert_fact(k, v, FactSource::Computed, "recorded");
  if (rec.source_class) p.source_class = parse_graph_class(*rec.source_class);

  bool irr_atoro = src.get("irreducible") == true && src.get("atoroidal") == true;
  bool irreducible = src.get("irreducible") == true;

  if (rec.count >= 2) {
    p.type = "2-2";
    p.count = rec.count;
    if (rec.source != GraphShape::Theta) {
      p.notes.push_back("repeated looping of a handcuff source: no rule applies");
      p.type.reset();
      return p;
    }
    if (irreducible) p.irreducible_atoroidal = true;
    if (src.get("planar") == true) {
      p.candidates.push_back(theta_shape(NodeKind::Solid));
      p.notes.push_back("double looping of a planar theta");
    } else if (irreducible) {
      p.candidates.push_back(theta_shape(NodeKind::Hollow));
      p.notes.push_back("double looping of an irreducible theta");
    } else {
      p.notes.push_back("theta-shape square node undecided: assert planar or irreducible");
    }
    return p;
  }

  p.count = 1;
  p.type = rec.source == GraphShape::Theta ? "2-1" : "2-2";
  if (rec.source == GraphShape::Link) {
    p.type.reset();
    p.notes.push_back("looping source is not a trivalent graph");
    return p;
  }
  if (rec.source == GraphShape::Theta && irr_atoro) {
    p.unique = true;
    p.notes.push_back("unique essential annulus");
  }

  bool tunnel = src.tunnel().has_value();
  if (in(p.source_class, {"tau1", "tau3", "h1", "h3"}) || tunnel) p.unknotting = true;
  else if (irreducible) p.unknotting = false;

  // nontrivial knot with tunnel, looped along the tunnel; non-split link with tunnel
  bool knot_tunnel = false, link_tunnel = false;
  if (tunnel && rec.source == GraphShape::Theta && rec.kind == LoopingKind::KnotLooping)
    for (const auto &[k, f] : src.booleans())
      if (k.rfind("trivial_knot:", 0) == 0 && !f.value) {
        auto c = k.substr(13), t = *src.tunnel();
        auto plus = c.find('+');
        if (plus != std::string::npos && c.substr(0, plus) != t && c.substr(plus + 1) != t)
          knot_tunnel = true;
      }
  if (tunnel && rec.source == GraphShape::Handcuff && src.get("split") == false) link_tunnel = true;
  if (knot_tunnel) p.notes.push_back("looping of a nontrivial knot with a tunnel");
  if (link_tunnel) p.notes.push_back("looping of a non-split link with a tunnel");

  if (irr_atoro || knot_tunnel || link_tunnel ||
      in(p.source_class, {"tau2", "tau4", "h2", "h4", "h3"}) ||
      (in(p.source_class, {"tau3"}) && rec.kind == LoopingKind::KnotLooping))
    p.irreducible_atoroidal = true;
  else if (in(p.source_class, {"tau1", "h1"}))
    p.irreducible_atoroidal = false;
  else if (in(p.source_class, {"tau3"}) && rec.kind == LoopingKind::TunnelLooping)
    p.notes.push_back("tunnel looping of tau3: irreducibility undecided");

  if (p.irreducible_atoroidal != true) {
    if (!p.irreducible_atoroidal) p.notes.push_back("no annulus diagram without irreducibility");
    return p;
  }
  if (*p.type == "2-1") {
    p.candidates.push_back(single_loop(EdgeLabel::h1()));
    return p;
  }

  std::vector<AnnulusDiagram> five = {
      single_loop(EdgeLabel::h2()),
      loop_and_edge(EdgeLabel::h2(), EdgeLabel::k1()),
      loop_and_edge(EdgeLabel::h2(), EdgeLabel::k2(Rational(2, 3))),
      theta_shape(NodeKind::Hollow),
      theta_shape(NodeKind::Solid),
  };
  auto lk = src.linking();
  bool no_k = lk && (*lk == 1 || *lk == -1);
  if (no_k) p.notes.push_back("lk = +-1 excludes the k-labeled diagrams");

  bool no_theta = false;
  std::optional<std::string> l1, l2;
  for (const auto &e : rec.pair)
    if (!l1 && src.get(knot_key(e))) l1 = e;
  for (const auto &e : rec.pair)
    if (!l1 && src.tunnel() && e != *src.tunnel()) l1 = e;
  if (l1) {
    for (const auto &[k, f] : src.booleans())
      if (k.rfind("trivial_knot:", 0) == 0 && k.substr(13) != *l1) l2 = k.substr(13);
    auto t1 = src.get(knot_key(*l1));
    auto t2 = l2 ? src.get(knot_key(*l2)) : std::nullopt;
    bool not_trivial = (lk && *lk != 0) || t2 == false || src.get("trivial_link") == false;
    bool not_hopf = (lk && *lk != 1 && *lk != -1) || t1 == false || t2 == false;
    if (t1 == true && not_trivial && not_hopf) {
      no_theta = true;
      p.notes.push_back("looped loop '" + *l1 +
                        "' trivial in a link neither trivial nor Hopf excludes the theta shapes");
    }
  }
  for (auto &d : five) {
    bool has_k = std::any_of(d.labels.begin(), d.labels.end(),
                             [](const auto &l) { return l && l->is_k(); });
    bool theta = d.base.edges.size() == 3;
    if ((has_k && no_k) || (theta && no_theta)) continue;
    p.candidates.push_back(std::move(d));
  }
  return p;
}

} // namespace hk
