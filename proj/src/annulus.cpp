#include "hkdiag/annulus.hpp"
#include "hkdiag/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hk {

EdgeLabel EdgeLabel::k2(const Rational &r) {
  if (r.is_zero()) throw DomainError("k2 parameter is 0");
  if (r.is_integer_reciprocal())
    throw DomainError("k2 parameter " + r.str() + " is the reciprocal of an integer");
  return {LabelKind::K2, r, {}};
}

EdgeLabel EdgeLabel::l(const SlopePair &sp) {
  if (sp.shape == SlopeShape::Trivial) throw DomainError("trivial slope pair is written l0");
  auto chk = slope_pair_classify(sp.r1, sp.r2);
  if (!std::holds_alternative<SlopePair>(chk) || std::get<SlopePair>(chk) != sp)
    throw DomainError("slope pair " + to_string(sp) + " does not match its shape");
  return {LabelKind::L, {}, sp};
}

std::string to_string(const EdgeLabel &l) {
  switch (l.kind) {
  case LabelKind::H1: return "h1";
  case LabelKind::H2: return "h2";
  case LabelKind::K1: return "k1";
  case LabelKind::K2: return "k2(" + l.r.str() + ")";
  case LabelKind::L: return "l(" + l.sp.r1.str() + "," + l.sp.r2.str() + ")";
  case LabelKind::L0: return "l0";
  case LabelKind::EM: return "em";
  }
  return "?";
}

std::optional<EdgeLabel> parse_label(const std::string &s, std::string *why) {
  auto fail = [&](std::string m) -> std::optional<EdgeLabel> {
    if (why) *why = std::move(m);
    return std::nullopt;
  };
  if (s == "h1") return EdgeLabel::h1();
  if (s == "h2") return EdgeLabel::h2();
  if (s == "k1") return EdgeLabel::k1();
  if (s == "l0") return EdgeLabel::l0();
  if (s == "em") return EdgeLabel::em();
  try {
    if (s.rfind("k2(", 0) == 0 && s.back() == ')') {
      auto r = Rational::parse(s.substr(3, s.size() - 4));
      if (!r) return fail("bad rational in '" + s + "'");
      return EdgeLabel::k2(*r);
    }
    if (s.rfind("l(", 0) == 0 && s.back() == ')') {
      auto body = s.substr(2, s.size() - 3);
      auto comma = body.find(',');
      if (comma == std::string::npos) return fail("l(...) needs two slopes");
      auto a = Rational::parse(body.substr(0, comma)), b = Rational::parse(body.substr(comma + 1));
      if (!a || !b) return fail("bad rational in '" + s + "'");
      auto sp = slope_pair_classify(*a, *b);
      if (auto *bad = std::get_if<InvalidSlope>(&sp)) return fail(bad->reason);
      auto pair = std::get<SlopePair>(sp);
      if (pair.shape == SlopeShape::Trivial) return EdgeLabel::l0();
      return EdgeLabel::l(pair);
    }
  } catch (const DomainError &e) {
    return fail(e.what());
  }
  return fail("unknown label '" + s + "'");
}

std::string to_string(LabelRule r) {
  return "R" + std::to_string(static_cast<int>(r) + 1);
}

bool unconstrained(const AnnulusDiagram &ad) {
  for (const auto &l : ad.labels)
    if (l && l->is_type2()) return false;
  return true;
}

namespace {

std::vector<EdgeLabel> labels_of(const AnnulusDiagram &ad) {
  std::vector<EdgeLabel> out;
  if (ad.labels.size() != ad.base.edges.size())
    throw StructuralError("label count differs from edge count");
  for (std::size_t i = 0; i < ad.labels.size(); ++i) {
    if (!ad.labels[i])
      throw StructuralError("edge " + ad.base.edges[i].a + "-" + ad.base.edges[i].b +
                            " has no label");
    out.push_back(*ad.labels[i]);
  }
  return out;
}

std::size_t count(const std::vector<EdgeLabel> &ls, LabelKind k) {
  return static_cast<std::size_t>(
      std::count_if(ls.begin(), ls.end(), [&](const EdgeLabel &l) { return l.kind == k; }));
}

const DiagramType kLoop{1, 1, 0, NodeKind::Hollow};
const DiagramType kLoopEdge{2, 1, 0, NodeKind::Hollow};
const DiagramType kThetaHollow{3, 0, 3, NodeKind::Hollow};
const DiagramType kThetaSolid{3, 0, 3, NodeKind::Solid};

} // namespace

std::vector<LabelViolation> validate_labels(const AnnulusDiagram &ad) {
  const auto ls = labels_of(ad);
  if (!validate(ad.base).empty()) throw DomainError("base diagram does not validate");
  const auto type = classify_type(ad.base);
  const auto cut = cut_edges(ad.base);
  std::vector<LabelViolation> out;
  auto edge_name = [&](std::size_t i) {
    return ad.base.edges[i].a + "-" + ad.base.edges[i].b;
  };

  for (std::size_t i = 0; i < ls.size(); ++i) {
    bool cut_ok = ls[i].is_k() || ls[i].kind == LabelKind::EM;
    if (cut[i] != cut_ok)
      out.push_back({LabelRule::R1, to_string(ls[i]) + " on " +
                                        (cut[i] ? "cut" : "non-cut") + " edge " + edge_name(i)});
  }

  if (count(ls, LabelKind::H1) > 0 && type != kLoop)
    out.push_back({LabelRule::R2, "h1 outside the single-loop hollow diagram"});

  for (const auto &l : ls)
    if (l.kind == LabelKind::L && l.sp.shape == SlopeShape::Reciprocal && ls.size() != 1)
      out.push_back({LabelRule::R3, to_string(l) + " with reciprocal slopes in a multi-edge diagram"});

  if (type.e == 3 && type.l == 0 && type.b == 3 &&
      !(count(ls, LabelKind::H2) == 2 && count(ls, LabelKind::L0) == 1))
    out.push_back({LabelRule::R4, "theta-shape labels must be {h2,h2,l0}"});

  if (count(ls, LabelKind::EM) > 0)
    for (const auto &l : ls)
      if (l.is_type2() || l.kind == LabelKind::L || l.kind == LabelKind::L0) {
        out.push_back({LabelRule::R5, "em together with " + to_string(l)});
        break;
      }

  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].kind != LabelKind::H2 || !ad.base.edges[i].is_loop()) continue;
    std::size_t others = 0;
    bool ok = true;
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (j == i) continue;
      ++others;
      if (!cut[j] || !ls[j].is_k()) ok = false;
    }
    if (others > 1 || !ok)
      out.push_back({LabelRule::R6, "h2 loop " + edge_name(i) +
                                        " must stand alone or beside one k-labeled cut edge"});
  }

  if (count(ls, LabelKind::H2) >= 2 &&
      (count(ls, LabelKind::K1) + count(ls, LabelKind::K2)) > 0)
    out.push_back({LabelRule::R7, "two h2 edges beside a k-labeled edge"});

  if (count(ls, LabelKind::H2) > 0 && type != kLoop && type != kLoopEdge &&
      type != kThetaHollow && type != kThetaSolid)
    out.push_back({LabelRule::R8, "h2 on base " + to_string(type) +
                                      ", outside the type-2-2 classification"});
  return out;
}

std::string to_string(PlusBound b) {
  switch (b) {
  case PlusBound::Trivial: return "1";
  case PlusBound::AtMostZ2: return "<= Z2";
  case PlusBound::ExactlyZ2: return "Z2";
  }
  return "?";
}

std::string to_string(FullBound b) {
  switch (b) {
  case FullBound::Trivial: return "1";
  case FullBound::AtMostZ2: return "<= Z2";
  case FullBound::AtMostZ2xZ2: return "<= Z2xZ2";
  case FullBound::ExactlyZ2xZ2: return "Z2xZ2";
  }
  return "?";
}

std::string to_string(Group g) {
  switch (g) {
  case Group::Trivial: return "1";
  case Group::Z2: return "Z2";
  case Group::Z2xZ2: return "Z2xZ2";
  }
  return "?";
}

bool admits(PlusBound b, Group g) {
  switch (b) {
  case PlusBound::Trivial: return g == Group::Trivial;
  case PlusBound::AtMostZ2: return g != Group::Z2xZ2;
  case PlusBound::ExactlyZ2: return g == Group::Z2;
  }
  return false;
}

bool admits(FullBound b, Group g) {
  switch (b) {
  case FullBound::Trivial: return g == Group::Trivial;
  case FullBound::AtMostZ2: return g != Group::Z2xZ2;
  case FullBound::AtMostZ2xZ2: return true;
  case FullBound::ExactlyZ2xZ2: return g == Group::Z2xZ2;
  }
  return false;
}

SymmetryOutcome symmetry_bounds(const AnnulusDiagram &ad) {
  if (!validate_labels(ad).empty()) throw DomainError("symmetry_bounds requires consistent labels");
  const auto ls = labels_of(ad);
  const auto type = classify_type(ad.base);
  SymmetryOutcome o;
  std::size_t h1 = count(ls, LabelKind::H1), h2 = count(ls, LabelKind::H2);
  std::size_t k = count(ls, LabelKind::K1) + count(ls, LabelKind::K2);
  if (h1 > 0) {
    o.derived = true;
    o.bound = {PlusBound::AtMostZ2, FullBound::AtMostZ2xZ2, false};
    o.basis = "type 2-1 annulus";
  } else if (h2 == 1 && ls.size() == 1) {
    o.derived = true;
    o.bound = {PlusBound::Trivial, FullBound::AtMostZ2, false};
    o.basis = "unique type 2-2 annulus, no other annulus";
  } else if (h2 == 1 && k == 1) {
    o.derived = true;
    o.bound = {PlusBound::Trivial, FullBound::Trivial, true};
    o.basis = "unique type 2-2 annulus beside a type 3-2 annulus";
  } else if (h2 == 2 && type == kThetaSolid) {
    o.derived = true;
    o.bound = {PlusBound::ExactlyZ2, FullBound::ExactlyZ2xZ2, true};
    o.basis = "two type 2-2 annuli, solid theta-shape, equivalent to 4_1";
  } else if (h2 == 2) {
    o.derived = true;
    o.bound = {PlusBound::AtMostZ2, FullBound::AtMostZ2xZ2, false};
    o.basis = "two type 2-2 annuli";
  } else {
    o.basis = "bounds not derived: no type 2 annulus in the diagram";
  }
  return o;
}

bool is_fourone(const AnnulusDiagram &ad) {
  if (!validate_labels(ad).empty()) throw DomainError("is_fourone requires consistent labels");
  return classify_type(ad.base) == kThetaSolid;
}

std::string to_string(FactOrigin o) {
  switch (o) {
  case FactOrigin::PaperRule: return "paper-rule";
  case FactOrigin::Computed: return "computed";
  case FactOrigin::Asserted: return "asserted";
  }
  return "?";
}

std::vector<DiagramFact> derived_facts(const AnnulusDiagram &ad) {
  if (!validate_labels(ad).empty()) throw DomainError("derived_facts requires consistent labels");
  const auto ls = labels_of(ad);
  const auto type = classify_type(ad.base);
  std::vector<DiagramFact> out;
  auto rule = [&](std::string s) { out.push_back({std::move(s), FactOrigin::PaperRule}); };

  out.push_back({"type " + to_string(type), FactOrigin::Computed});
  if (realization_unknown(type)) rule("no handlebody-knot with this characteristic diagram is known");
  if (auto base = bundle_base(ad.base)) rule("labeled node is an I-bundle over a " + to_string(*base));

  if (type == DiagramType{1, 0, 0, NodeKind::Solid}) {
    rule("exactly 5 isotopy classes of essential annuli");
  } else if (type == DiagramType{2, 0, 0, NodeKind::Solid}) {
    rule("infinitely many isotopy classes of essential annuli");
  } else if (type.e == 3) {
    rule("exactly 3 isotopy classes of essential annuli");
  } else {
    rule("between " + std::to_string(type.e) + " and 3 isotopy classes of essential annuli");
  }
  if (type.e == 3 && type.l == 0 && type.b == 3) rule("unlabeled node has no exceptional fiber");

  for (const auto &l : ls)
    if (l.kind == LabelKind::L && l.sp.shape == SlopeShape::Reciprocal)
      rule("unique annulus, up to isotopy");
  if (unconstrained(ad)) {
    out.push_back({"not constrained by the classification theorems", FactOrigin::Computed});
    return out;
  }

  std::size_t h2 = count(ls, LabelKind::H2);
  if (count(ls, LabelKind::H1) > 0) {
    rule("unique annulus, up to isotopy");
    rule("the type 2-1 annulus is characteristic");
  }
  if (h2 == 1) rule("unique type 2-2 annulus, up to isotopy");
  if (h2 == 2) {
    rule("exactly two type 2-2 annuli, up to isotopy");
    rule("unique type 3-3 annulus, up to isotopy, with trivial boundary slope");
  }
  if (h2 > 0) rule("every type 2-2 annulus is characteristic");
  if (count(ls, LabelKind::L0) > 0 && h2 == 0)
    rule("the type 3-3 annulus with trivial slope is characteristic");
  if (type == kThetaSolid) rule("equivalent to 4_1");
  return out;
}

namespace {

EdgeTag tag_of(const AnnulusDiagram &ad) {
  return [&ad](std::size_t i) { return ad.labels[i] ? to_string(*ad.labels[i]) : std::string(); };
}

} // namespace

Encoding canonical_form(const AnnulusDiagram &ad) { return canonical_form(ad.base, tag_of(ad)); }

bool are_isomorphic(const AnnulusDiagram &a, const AnnulusDiagram &b) {
  if (a.base.nodes.size() != b.base.nodes.size() || a.base.edges.size() != b.base.edges.size())
    return false;
  return canonical_form(a) == canonical_form(b);
}

AnnulusDiagram canonical_relabel(const AnnulusDiagram &ad) {
  auto order = canonical_order(ad.base, tag_of(ad));
  std::map<std::string, std::string> rename;
  AnnulusDiagram r;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Node n = ad.base.nodes[order[i]];
    rename[n.id] = n.id = "v" + std::to_string(i);
    r.base.nodes.push_back(n);
  }
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < r.base.nodes.size(); ++i) pos[r.base.nodes[i].id] = i;
  std::vector<std::tuple<std::size_t, std::size_t, std::string, std::size_t>> es;
  for (std::size_t i = 0; i < ad.base.edges.size(); ++i) {
    auto a = pos[rename[ad.base.edges[i].a]], b = pos[rename[ad.base.edges[i].b]];
    es.emplace_back(std::min(a, b), std::max(a, b),
                    ad.labels[i] ? to_string(*ad.labels[i]) : "", i);
  }
  std::sort(es.begin(), es.end());
  for (auto &[a, b, tag, i] : es) {
    r.base.edges.push_back({r.base.nodes[a].id, r.base.nodes[b].id});
    r.labels.push_back(ad.labels[i]);
  }
  return r;
}

std::vector<EdgeLabel> representative_labels() {
  return {EdgeLabel::h1(),
          EdgeLabel::h2(),
          EdgeLabel::k1(),
          EdgeLabel::k2(Rational(2, 3)),
          EdgeLabel::l0(),
          EdgeLabel::em(),
          EdgeLabel::l(std::get<SlopePair>(slope_pair_classify(Rational(2, 3), Rational(3, 2)))),
          EdgeLabel::l(std::get<SlopePair>(slope_pair_classify(Rational(2, 3), Rational(6))))};
}

std::vector<CatalogEntry> label_catalog() {
  const auto reps = representative_labels();
  std::map<Encoding, CatalogEntry> found;
  for (const auto &base : enumerate_valid().classes) {
    const std::size_t e = base.edges.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < e; ++i) total *= reps.size();
    for (std::size_t code = 0; code < total; ++code) {
      AnnulusDiagram ad{base, {}};
      for (std::size_t i = 0, c = code; i < e; ++i, c /= reps.size())
        ad.labels.push_back(reps[c % reps.size()]);
      if (!validate_labels(ad).empty()) continue;
      auto enc = canonical_form(ad);
      if (!found.count(enc))
        found.emplace(std::move(enc), CatalogEntry{canonical_relabel(ad), classify_type(base)});
    }
  }
  std::vector<CatalogEntry> out;
  for (auto &[enc, entry] : found) out.push_back(std::move(entry));
  return out;
}

AnnulusDiagram single_loop(const EdgeLabel &l) {
  return {{{{"o", NodeKind::Hollow, 2}}, {{"o", "o"}}}, {l}};
}

AnnulusDiagram loop_and_edge(const EdgeLabel &loop, const EdgeLabel &edge) {
  return {{{{"o", NodeKind::Hollow, 2}, {"s", NodeKind::Solid, std::nullopt}},
           {{"o", "o"}, {"o", "s"}}},
          {loop, edge}};
}

AnnulusDiagram theta_shape(NodeKind square) {
  return {{{{"o", square, 2}, {"s", NodeKind::Solid, std::nullopt}},
           {{"o", "s"}, {"o", "s"}, {"o", "s"}}},
          {EdgeLabel::h2(), EdgeLabel::h2(), EdgeLabel::l0()}};
}

std::string summary(const AnnulusDiagram &ad) {
  std::string s;
  try {
    s = to_string(classify_type(ad.base));
  } catch (const DomainError &) {
    s = "(invalid base)";
  }
  std::vector<std::string> names;
  for (const auto &l : ad.labels) names.push_back(l ? to_string(*l) : "?");
  std::sort(names.begin(), names.end());
  s += " {";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + "}";
}

} // namespace hk
