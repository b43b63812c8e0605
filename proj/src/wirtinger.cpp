#include "hkdiag/wirtinger.hpp"
#include "hkdiag/errors.hpp"

namespace hk {

namespace {

struct ArcData {
  std::size_t count = 0;
  std::map<std::string, std::vector<std::size_t>> arcs;
  // edge -> arc index (into arcs[edge]) at each pass position
  std::map<std::string, std::vector<std::size_t>> at_pass;
};

ArcData build_arcs(const SpatialGraphCode &g) {
  ArcData d;
  for (const auto &e : g.edges) {
    std::size_t unders = 0;
    for (const auto &p : e.passes) unders += p.level == Level::Under;
    std::size_t n = e.closed ? std::max<std::size_t>(unders, 1) : unders + 1;
    auto &ids = d.arcs[e.id];
    for (std::size_t i = 0; i < n; ++i) ids.push_back(d.count++);
    auto &pos = d.at_pass[e.id];
    std::size_t seen = 0;
    for (const auto &p : e.passes) {
      pos.push_back(seen % n); // for an under pass: the incoming arc
      seen += p.level == Level::Under;
    }
  }
  return d;
}

struct CrossingArcs {
  std::size_t over, in, out;
  int sign;
};

std::vector<CrossingArcs> crossing_arcs(const SpatialGraphCode &g, const ArcData &d) {
  std::map<std::string, CrossingArcs> m;
  for (const auto &e : g.edges) {
    const auto &ids = d.arcs.at(e.id);
    const auto &pos = d.at_pass.at(e.id);
    for (std::size_t i = 0; i < e.passes.size(); ++i) {
      const auto &p = e.passes[i];
      auto &c = m[p.crossing];
      c.sign = p.sign;
      if (p.level == Level::Over) {
        c.over = ids[pos[i]];
      } else {
        c.in = ids[pos[i]];
        c.out = ids[(pos[i] + 1) % ids.size()];
      }
    }
  }
  std::vector<CrossingArcs> out;
  for (auto &[id, c] : m) out.push_back(c);
  return out;
}

} // namespace

LoopClass ComplementH1::of_arcs(const std::vector<Int> &x) const {
  return {presentation.free_coordinates(x)};
}

LoopClass ComplementH1::meridian(const std::string &edge) const {
  auto it = arcs.find(edge);
  if (it == arcs.end()) throw DomainError("unknown edge '" + edge + "'");
  std::vector<Int> x(arc_count, 0);
  x[it->second.front()] = 1;
  return of_arcs(x);
}

ComplementH1 h1_complement(const SpatialGraphCode &g) {
  require_valid(g);
  auto d = build_arcs(g);
  auto cs = crossing_arcs(g, d);
  IntMatrix rel(cs.size() + g.vertices.size(), d.count);
  std::size_t r = 0;
  for (const auto &c : cs) {
    rel(r, c.in) += 1;
    rel(r, c.out) -= 1;
    ++r;
  }
  for (const auto &v : g.vertices) {
    for (const auto &x : v.ends) {
      const auto &ids = d.arcs.at(x.edge);
      if (x.end == 1) rel(r, ids.back()) += 1;
      else rel(r, ids.front()) -= 1;
    }
    ++r;
  }
  ComplementH1 h;
  h.presentation = present(rel);
  h.group = h.presentation.group;
  h.arc_count = d.count;
  h.arcs = d.arcs;
  return h;
}

std::vector<LoopClass> loop_classes(const SpatialGraphCode &g, const std::vector<MarkedLoop> &loops) {
  auto h = h1_complement(g);
  auto d = build_arcs(g);
  std::map<std::string, std::size_t> over_arc;
  for (const auto &e : g.edges) {
    const auto &ids = d.arcs.at(e.id);
    const auto &pos = d.at_pass.at(e.id);
    for (std::size_t i = 0; i < e.passes.size(); ++i)
      if (e.passes[i].level == Level::Over) over_arc[e.passes[i].crossing] = ids[pos[i]];
  }
  std::vector<LoopClass> out;
  for (const auto &l : loops) {
    if (l.walk.empty()) throw DomainError("loop '" + l.name + "' is empty");
    for (std::size_t i = 0; i < l.walk.size(); ++i) {
      const auto &[eid, dir] = l.walk[i];
      const auto &e = g.edge(eid);
      if (dir != 1 && dir != -1) throw DomainError("walk direction must be +1 or -1");
      if (e.closed) {
        if (l.walk.size() != 1)
          throw DomainError("walk '" + l.name + "' is not closed: closed edge '" + eid +
                            "' cannot join other edges");
        continue;
      }
      const auto &[nid, ndir] = l.walk[(i + 1) % l.walk.size()];
      const auto &n = g.edge(nid);
      const auto &head = dir > 0 ? e.to : e.from;
      const auto &tail = ndir > 0 ? n.from : n.to;
      if (n.closed || head != tail)
        throw DomainError("walk '" + l.name + "' is not closed: '" + eid + "' does not lead into '" +
                          nid + "'");
    }
    std::vector<Int> x(h.arc_count, 0);
    for (const auto &[eid, dir] : l.walk)
      for (const auto &p : g.edge(eid).passes)
        if (p.level == Level::Under) x[over_arc.at(p.crossing)] += p.sign * dir;
    out.push_back(h.of_arcs(x));
  }
  return out;
}

LaurentPoly alexander_polynomial(const SpatialGraphCode &knot) {
  require_valid(knot);
  if (knot.shape != GraphShape::Link || knot.edges.size() != 1)
    throw DomainError("alexander polynomial needs a single-component knot code");
  auto d = build_arcs(knot);
  auto cs = crossing_arcs(knot, d);
  if (cs.empty()) return LaurentPoly::constant(1);
  const std::size_t n = cs.size();
  const LaurentPoly t({Int(0), Int(1)}), one = LaurentPoly::constant(1), minus = LaurentPoly::constant(-1);
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto &c = cs[r];
    m[r][c.over] = m[r][c.over] + (one - t);
    if (c.sign > 0) {
      m[r][c.in] = m[r][c.in] + t;
      m[r][c.out] = m[r][c.out] + minus;
    } else {
      m[r][c.in] = m[r][c.in] + minus;
      m[r][c.out] = m[r][c.out] + t;
    }
  }
  m.pop_back();
  for (auto &row : m) row.pop_back();
  auto p = determinant(m);
  if (p.is_zero()) return p;
  return p.normalized();
}

} // namespace hk
