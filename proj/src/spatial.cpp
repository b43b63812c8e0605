#include "hkdiag/spatial.hpp"
#include "hkdiag/errors.hpp"

#include <algorithm>
#include <set>
#include <variant>

namespace hk {

std::string to_string(GraphShape s) {
  switch (s) {
  case GraphShape::Theta: return "theta";
  case GraphShape::Handcuff: return "handcuff";
  case GraphShape::Link: return "link";
  }
  return "?";
}

std::string to_string(LoopingKind k) {
  switch (k) {
  case LoopingKind::TunnelLooping: return "tunnel";
  case LoopingKind::KnotLooping: return "knot";
  case LoopingKind::Plain: return "plain";
  }
  return "?";
}

const SgEdge &SpatialGraphCode::edge(const std::string &id) const {
  for (const auto &e : edges)
    if (e.id == id) return e;
  throw DomainError("unknown edge '" + id + "'");
}

const Vertex &SpatialGraphCode::vertex(const std::string &id) const {
  for (const auto &v : vertices)
    if (v.id == id) return v;
  throw DomainError("unknown vertex '" + id + "'");
}

bool SpatialGraphCode::has_edge(const std::string &id) const {
  return std::any_of(edges.begin(), edges.end(), [&](const SgEdge &e) { return e.id == id; });
}

std::size_t SpatialGraphCode::crossing_count() const {
  std::size_t n = 0;
  for (const auto &e : edges) n += e.passes.size();
  return n / 2;
}

std::vector<CodeViolation> validate_code(const SpatialGraphCode &g) {
  std::vector<CodeViolation> out;
  auto bad = [&](std::string s) { out.push_back({std::move(s)}); };

  std::set<std::string> vids, eids;
  for (const auto &v : g.vertices)
    if (!vids.insert(v.id).second) bad("duplicate vertex '" + v.id + "'");
  for (const auto &e : g.edges)
    if (!eids.insert(e.id).second) bad("duplicate edge '" + e.id + "'");

  std::map<std::pair<std::string, int>, int> end_uses;
  for (const auto &e : g.edges) {
    if (e.closed) {
      if (!e.from.empty() || !e.to.empty()) bad("closed edge '" + e.id + "' has endpoints");
      continue;
    }
    if (!vids.count(e.from) || !vids.count(e.to))
      bad("edge '" + e.id + "' refers to a missing vertex");
  }
  for (const auto &v : g.vertices) {
    if (v.ends.size() != 3)
      bad("vertex '" + v.id + "' has " + std::to_string(v.ends.size()) + " ends, expected 3");
    for (const auto &x : v.ends) {
      auto it = std::find_if(g.edges.begin(), g.edges.end(),
                             [&](const SgEdge &e) { return e.id == x.edge; });
      if (it == g.edges.end()) {
        bad("vertex '" + v.id + "' lists unknown edge '" + x.edge + "'");
        continue;
      }
      if (it->closed) {
        bad("vertex '" + v.id + "' lists closed edge '" + x.edge + "'");
        continue;
      }
      const std::string &at = x.end == 0 ? it->from : it->to;
      if (at != v.id)
        bad("end " + x.edge + "." + std::to_string(x.end) + " listed at '" + v.id +
            "' but the edge " + (x.end == 0 ? "starts" : "ends") + " at '" + at + "'");
      ++end_uses[{x.edge, x.end}];
    }
  }
  for (const auto &e : g.edges) {
    if (e.closed) continue;
    for (int k = 0; k < 2; ++k) {
      int n = end_uses[{e.id, k}];
      if (n != 1)
        bad("end " + e.id + "." + std::to_string(k) + " is listed " + std::to_string(n) +
            " times at vertices");
    }
  }

  struct Seen {
    int over = 0, under = 0;
    std::set<int> signs;
  };
  std::map<std::string, Seen> cross;
  for (const auto &e : g.edges)
    for (const auto &p : e.passes) {
      auto &s = cross[p.crossing];
      (p.level == Level::Over ? s.over : s.under)++;
      s.signs.insert(p.sign);
      if (p.sign != 1 && p.sign != -1) bad("crossing '" + p.crossing + "' has sign outside +-1");
    }
  for (const auto &[id, s] : cross) {
    if (s.over != 1 || s.under != 1)
      bad("crossing '" + id + "' passed " + std::to_string(s.over) + " times over and " +
          std::to_string(s.under) + " times under");
    if (s.signs.size() > 1) bad("crossing '" + id + "' has disagreeing signs");
  }

  auto loops_at = [&](const std::string &v) {
    return std::count_if(g.edges.begin(), g.edges.end(),
                         [&](const SgEdge &e) { return e.is_loop() && e.from == v; });
  };
  switch (g.shape) {
  case GraphShape::Theta:
    if (g.vertices.size() != 2 || g.edges.size() != 3) {
      bad("theta graph needs 2 vertices and 3 edges");
      break;
    }
    for (const auto &e : g.edges)
      if (e.closed || e.from == e.to) bad("theta edge '" + e.id + "' must join the two vertices");
    break;
  case GraphShape::Handcuff:
    if (g.vertices.size() != 2 || g.edges.size() != 3) {
      bad("handcuff graph needs 2 vertices and 3 edges");
      break;
    }
    for (const auto &v : g.vertices)
      if (loops_at(v.id) != 1) bad("handcuff vertex '" + v.id + "' needs exactly one loop");
    for (const auto &e : g.edges)
      if (e.closed) bad("handcuff edge '" + e.id + "' is closed");
    break;
  case GraphShape::Link:
    if (!g.vertices.empty()) bad("link code has vertices");
    if (g.edges.empty()) bad("link code has no components");
    for (const auto &e : g.edges)
      if (!e.closed) bad("link component '" + e.id + "' is not closed");
    break;
  }
  return out;
}

void require_valid(const SpatialGraphCode &g) {
  auto v = validate_code(g);
  if (!v.empty()) throw StructuralError(v.front().what);
}

namespace {

struct Segment {
  std::string edge;
  bool forward = true;
};

using Item = std::variant<Segment, Pass>;

struct Piece {
  std::string id;
  bool closed = false;
  std::string from, to;
  std::vector<Item> items;
};

// Build edges from traversed segments of g. A crossing survives when both of
// its passes land in the new edges; its sign flips once per reversed strand.
std::vector<SgEdge> assemble(const SpatialGraphCode &g, const std::vector<Piece> &pieces) {
  struct Where {
    std::size_t edge, pass;
    int dir;
  };
  std::map<std::string, std::vector<Where>> at;
  std::vector<SgEdge> out;
  for (const auto &pc : pieces) {
    SgEdge e{pc.id, pc.closed, pc.from, pc.to, {}};
    for (const auto &it : pc.items) {
      if (const auto *p = std::get_if<Pass>(&it)) {
        e.passes.push_back(*p);
        continue;
      }
      const auto &seg = std::get<Segment>(it);
      auto ps = g.edge(seg.edge).passes;
      if (!seg.forward) std::reverse(ps.begin(), ps.end());
      for (auto &p : ps) {
        at[p.crossing].push_back({out.size(), e.passes.size(), seg.forward ? 1 : -1});
        e.passes.push_back(p);
      }
    }
    out.push_back(std::move(e));
  }
  std::set<std::pair<std::size_t, std::size_t>> drop;
  for (const auto &[id, ws] : at) {
    if (ws.size() == 2) {
      int s = out[ws[0].edge].passes[ws[0].pass].sign * ws[0].dir * ws[1].dir;
      for (const auto &w : ws) out[w.edge].passes[w.pass].sign = s;
    } else {
      for (const auto &w : ws) drop.insert({w.edge, w.pass});
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Pass> kept;
    for (std::size_t j = 0; j < out[i].passes.size(); ++j)
      if (!drop.count({i, j})) kept.push_back(out[i].passes[j]);
    out[i].passes = std::move(kept);
  }
  return out;
}

std::string fresh(const std::set<std::string> &taken, const std::string &want,
                  const std::string &stem) {
  if (!want.empty()) {
    if (taken.count(want)) throw DomainError("id '" + want + "' already in use");
    return want;
  }
  for (int i = 1;; ++i) {
    std::string s = stem + std::to_string(i);
    if (!taken.count(s)) return s;
  }
}

std::set<std::string> all_ids(const SpatialGraphCode &g) {
  std::set<std::string> s;
  for (const auto &v : g.vertices) s.insert(v.id);
  for (const auto &e : g.edges) {
    s.insert(e.id);
    for (const auto &p : e.passes) s.insert(p.crossing);
  }
  return s;
}

std::optional<std::string> asserted(const std::vector<std::pair<std::string, std::string>> &as,
                                    const std::string &key) {
  for (const auto &[k, v] : as)
    if (k == key) return v;
  return std::nullopt;
}

} // namespace

SpatialGraphCode constituent_knot(const SpatialGraphCode &g, const std::string &a,
                                  const std::string &b) {
  require_valid(g);
  if (g.shape != GraphShape::Theta) throw DomainError("constituent knots need a theta graph");
  if (a == b) throw DomainError("constituent knot needs two distinct edges");
  const auto &v0 = g.vertices[0].id, &v1 = g.vertices[1].id;
  Piece p{a + "+" + b, true, "", "", {}};
  p.items.push_back(Segment{a, g.edge(a).from == v0});
  p.items.push_back(Segment{b, g.edge(b).from == v1});
  return {GraphShape::Link, {}, assemble(g, {p}), {}, std::nullopt};
}

SpatialGraphCode constituent_link(const SpatialGraphCode &g) {
  require_valid(g);
  if (g.shape == GraphShape::Link) return g;
  if (g.shape != GraphShape::Handcuff) throw DomainError("constituent link needs a handcuff graph");
  std::vector<Piece> ps;
  for (const auto &e : g.edges)
    if (e.is_loop()) ps.push_back({e.id, true, "", "", {Segment{e.id, true}}});
  return {GraphShape::Link, {}, assemble(g, ps), {}, std::nullopt};
}

std::vector<SpatialGraphCode> constituent_links(const SpatialGraphCode &g) {
  require_valid(g);
  if (g.shape == GraphShape::Theta) {
    const auto &e = g.edges;
    return {constituent_knot(g, e[0].id, e[1].id), constituent_knot(g, e[0].id, e[2].id),
            constituent_knot(g, e[1].id, e[2].id)};
  }
  return {constituent_link(g)};
}

SpatialGraphCode component_knot(const SpatialGraphCode &link, const std::string &id) {
  require_valid(link);
  if (link.shape != GraphShape::Link) throw DomainError("component_knot needs a link code");
  return {GraphShape::Link, {}, assemble(link, {{id, true, "", "", {Segment{id, true}}}}), {},
          std::nullopt};
}

std::size_t self_crossings(const SpatialGraphCode &link, const std::string &id) {
  return component_knot(link, id).crossing_count();
}

int linking_number(const SpatialGraphCode &link, const std::string &a, const std::string &b) {
  require_valid(link);
  if (link.shape != GraphShape::Link) throw DomainError("linking number needs a vertex-free code");
  if (a == b) throw DomainError("linking number needs two distinct components");
  link.edge(a), link.edge(b);
  std::map<std::string, std::vector<std::pair<std::string, int>>> at;
  for (const auto &e : link.edges)
    for (const auto &p : e.passes) at[p.crossing].emplace_back(e.id, p.sign);
  int sum = 0;
  for (const auto &[id, ps] : at) {
    std::set<std::string> comps{ps[0].first, ps[1].first};
    if (comps == std::set<std::string>{a, b}) sum += ps[0].second;
  }
  if (sum % 2 != 0) throw StructuralError("odd signed crossing count between components");
  return sum / 2;
}

EdgeEnd end_at(const SpatialGraphCode &g, const std::string &v, const std::string &spec) {
  const auto &vx = g.vertex(v);
  std::string edge = spec;
  std::optional<int> end;
  if (auto dot = spec.rfind('.'); dot != std::string::npos &&
                                  (spec.substr(dot + 1) == "0" || spec.substr(dot + 1) == "1")) {
    edge = spec.substr(0, dot);
    end = spec.back() - '0';
  }
  std::vector<EdgeEnd> hits;
  for (const auto &x : vx.ends)
    if (x.edge == edge && (!end || x.end == *end)) hits.push_back(x);
  if (hits.empty()) throw DomainError("no end '" + spec + "' at vertex '" + v + "'");
  if (hits.size() > 1)
    throw DomainError("end '" + spec + "' is ambiguous at '" + v + "'; write " + edge + ".0 or " +
                      edge + ".1");
  return hits.front();
}

LoopingKind looping_kind(const SpatialGraphCode &g, const std::optional<std::string> &tunnel_arc,
                         const std::pair<EdgeEnd, EdgeEnd> &pair) {
  if (g.shape != GraphShape::Theta || !tunnel_arc) return LoopingKind::Plain;
  if (pair.first.edge == *tunnel_arc || pair.second.edge == *tunnel_arc)
    return LoopingKind::KnotLooping;
  return LoopingKind::TunnelLooping;
}

LoopResult loop_at(const SpatialGraphCode &g, const std::string &v,
                   const std::pair<EdgeEnd, EdgeEnd> &pair, const LoopOptions &opt) {
  require_valid(g);
  if (g.shape == GraphShape::Link) throw DomainError("looping needs a trivalent vertex");
  const auto &vx = g.vertex(v);
  const auto &[x, y] = pair;
  auto listed = [&](const EdgeEnd &e) {
    return std::find(vx.ends.begin(), vx.ends.end(), e) != vx.ends.end();
  };
  if (!listed(x) || !listed(y)) throw DomainError("looping pair is not at vertex '" + v + "'");
  if (x == y) throw DomainError("looping pair repeats an end");
  if (x.edge == y.edge)
    throw DomainError("looping disconnects the graph: both ends of loop '" + x.edge +
                      "' would close into a separate circle");
  EdgeEnd z = *std::find_if(vx.ends.begin(), vx.ends.end(),
                            [&](const EdgeEnd &e) { return !(e == x) && !(e == y); });

  auto ids = all_ids(g);
  LoopResult r;
  r.strand = fresh(ids, opt.strand, "s");
  ids.insert(r.strand);
  r.ring = fresh(ids, opt.ring, "c");
  ids.insert(r.ring);
  r.vertex = fresh(ids, opt.vertex, "u");
  ids.insert(r.vertex);
  std::string c1 = fresh(ids, "", "r");
  ids.insert(c1);
  std::string c2 = fresh(ids, "", "r");
  const int sign = opt.mirror ? -1 : 1;

  const auto &X = g.edge(x.edge), &Y = g.edge(y.edge);
  bool xf = x.end == 1, yf = y.end == 0;
  std::string start = xf ? X.from : X.to, stop = yf ? Y.to : Y.from;
  if (start == v) start = r.vertex;
  if (stop == v) stop = r.vertex;

  std::vector<Piece> pieces;
  pieces.push_back({r.strand, false, start, stop,
                    {Segment{X.id, xf}, Pass{c1, Level::Under, sign}, Pass{c2, Level::Over, sign},
                     Segment{Y.id, yf}}});
  for (const auto &e : g.edges) {
    if (e.id == X.id || e.id == Y.id) continue;
    Piece p{e.id, false, e.from, e.to, {Segment{e.id, true}}};
    if (e.id == z.edge) (z.end == 0 ? p.from : p.to) = r.vertex;
    pieces.push_back(p);
  }
  pieces.push_back({r.ring, false, r.vertex, r.vertex,
                    {Pass{c2, Level::Under, sign}, Pass{c1, Level::Over, sign}}});

  auto remap = [&](const EdgeEnd &e) -> EdgeEnd {
    if (e.edge == X.id) return {r.strand, 0};
    if (e.edge == Y.id) return {r.strand, 1};
    return e;
  };
  SpatialGraphCode out{GraphShape::Handcuff, {}, assemble(g, pieces), {}, std::nullopt};
  for (const auto &w : g.vertices) {
    if (w.id == v) continue;
    Vertex nw{w.id, {}};
    for (const auto &e : w.ends) nw.ends.push_back(remap(e));
    out.vertices.push_back(nw);
  }
  out.vertices.push_back({r.vertex, {remap(z), {r.ring, 0}, {r.ring, 1}}});

  if (g.looping) {
    out.looping = g.looping;
    ++out.looping->count;
  } else {
    LoopingRecord rec;
    rec.source = g.shape;
    rec.kind = looping_kind(g, asserted(g.assertions, "tunnel"), pair);
    rec.pair = {x.edge, y.edge};
    rec.source_asserted = g.assertions;
    out.looping = rec;
  }
  require_valid(out);
  r.code = std::move(out);
  return r;
}

LoopResult double_loop(const SpatialGraphCode &g, const std::string &v,
                       std::pair<std::string, std::string> pair_v, const std::string &w,
                       std::pair<std::string, std::string> pair_w, const LoopOptions &opt) {
  require_valid(g);
  if (g.shape != GraphShape::Theta) throw DomainError("double looping needs a theta graph");
  if (v == w) throw DomainError("double looping needs the two distinct vertices");
  if (std::minmax(pair_v.first, pair_v.second) == std::minmax(pair_w.first, pair_w.second))
    throw DomainError("double looping must not loop the same edge pair at both vertices");
  auto first = loop_at(g, v, {end_at(g, v, pair_v.first), end_at(g, v, pair_v.second)}, opt);
  auto map = [&](const std::string &e) -> EdgeEnd {
    if (e == pair_v.first) return {first.strand, 0};
    if (e == pair_v.second) return {first.strand, 1};
    return end_at(first.code, w, e);
  };
  LoopOptions second = opt;
  second.strand = second.ring = second.vertex = "";
  return loop_at(first.code, w, {map(pair_w.first), map(pair_w.second)}, second);
}

SpatialGraphCode closed_braid(int strands, const std::vector<int> &word) {
  if (strands < 1) throw DomainError("braid needs a strand");
  for (int l : word)
    if (l == 0 || std::abs(l) >= strands) throw DomainError("braid letter out of range");
  SpatialGraphCode g{GraphShape::Link, {}, {}, {}, std::nullopt};
  std::vector<bool> seen(static_cast<std::size_t>(strands) + 1, false);
  char name = 'a';
  for (int start = 1; start <= strands; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    SgEdge e{std::string(1, name++), true, "", "", {}};
    int pos = start;
    do {
      seen[static_cast<std::size_t>(pos)] = true;
      for (std::size_t i = 0; i < word.size(); ++i) {
        int gen = std::abs(word[i]);
        if (pos != gen && pos != gen + 1) continue;
        int over_pos = word[i] > 0 ? gen : gen + 1;
        e.passes.push_back({"x" + std::to_string(i + 1), pos == over_pos ? Level::Over : Level::Under,
                            word[i] > 0 ? 1 : -1});
        pos = pos == gen ? gen + 1 : gen;
      }
    } while (pos != start);
    g.edges.push_back(std::move(e));
  }
  return g;
}

namespace {

SpatialGraphCode mirrored(SpatialGraphCode g, bool mirror) {
  if (!mirror) return g;
  for (auto &e : g.edges)
    for (auto &p : e.passes) {
      p.sign = -p.sign;
      p.level = p.level == Level::Over ? Level::Under : Level::Over;
    }
  return g;
}

} // namespace

SpatialGraphCode family_torus_link(int n, bool tunnel, bool mirror) {
  if (n < 2) throw DomainError("torus link family needs n >= 2");
  auto link = closed_braid(2, std::vector<int>(static_cast<std::size_t>(n), 1));
  if (!tunnel) return mirrored(link, mirror);
  SpatialGraphCode g;
  g.assertions.push_back({"tunnel", "t"});
  if (n % 2 == 0) {
    g.shape = GraphShape::Handcuff;
    g.edges = {{"a", false, "va", "va", link.edges[0].passes},
               {"b", false, "vb", "vb", link.edges[1].passes},
               {"t", false, "va", "vb", {}}};
    g.vertices = {{"va", {{"a", 0}, {"a", 1}, {"t", 0}}}, {"vb", {{"b", 0}, {"b", 1}, {"t", 1}}}};
  } else {
    const auto &ps = link.edges[0].passes;
    auto half = ps.begin() + n;
    g.shape = GraphShape::Theta;
    g.edges = {{"k1", false, "va", "vb", {ps.begin(), half}},
               {"k2", false, "vb", "va", {half, ps.end()}},
               {"t", false, "va", "vb", {}}};
    g.vertices = {{"va", {{"k1", 0}, {"k2", 1}, {"t", 0}}},
                  {"vb", {{"k1", 1}, {"k2", 0}, {"t", 1}}}};
  }
  require_valid(g);
  return mirrored(g, mirror);
}

SpatialGraphCode family_torus_looped(int n, bool mirror) {
  auto g = family_torus_link(n, true, mirror);
  EdgeEnd knot_end = n % 2 == 0 ? EdgeEnd{"a", 1} : EdgeEnd{"k2", 1};
  LoopOptions opt;
  opt.mirror = mirror;
  return loop_at(g, "va", {knot_end, {"t", 0}}, opt).code;
}

SpatialGraphCode family_odd_ringed(int n, RingVariant variant, bool mirror) {
  if (n < 3 || n % 2 == 0) throw DomainError("ringed family needs odd n >= 3");
  auto knot = closed_braid(2, std::vector<int>(static_cast<std::size_t>(n), 1));
  auto ps = knot.edges[0].passes;
  std::vector<Pass> ring;
  if (variant == RingVariant::Meridian) {
    ps.insert(ps.begin(), {{"y1", Level::Under, 1}, {"y2", Level::Over, 1}});
    ring = {{"y2", Level::Under, 1}, {"y1", Level::Over, 1}};
  } else {
    ps.insert(ps.begin() + n, {{"y3", Level::Under, 1}, {"y4", Level::Over, 1}});
    ps.insert(ps.begin(), {{"y1", Level::Under, 1}, {"y2", Level::Over, 1}});
    ring = {{"y4", Level::Under, 1}, {"y2", Level::Under, 1}, {"y1", Level::Over, 1},
            {"y3", Level::Over, 1}};
  }
  SpatialGraphCode g;
  g.shape = GraphShape::Handcuff;
  g.edges = {{"k", false, "vk", "vk", ps}, {"r", false, "vr", "vr", ring}, {"t", false, "vk", "vr", {}}};
  g.vertices = {{"vk", {{"k", 0}, {"k", 1}, {"t", 0}}}, {"vr", {{"r", 0}, {"r", 1}, {"t", 1}}}};
  g.assertions.push_back({"tunnel", "t"});
  require_valid(g);
  return mirrored(g, mirror);
}

} // namespace hk
