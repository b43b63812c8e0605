#include "hkdiag/errors.hpp"
#include "hkdiag/spatial.hpp"
#include "text_lines.hpp"

#include <charconv>

namespace hk {

namespace {

using detail::Line;
using detail::Token;

std::pair<std::string, std::string> key_value(const Line &l, const Token &t) {
  auto eq = t.text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == t.text.size())
    throw ParseError(l.number, t.column, "expected key=value, got '" + t.text + "'");
  return {t.text.substr(0, eq), t.text.substr(eq + 1)};
}

EdgeEnd parse_end(const Line &l, const Token &t) {
  auto dot = t.text.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 2 != t.text.size() ||
      (t.text.back() != '0' && t.text.back() != '1'))
    throw ParseError(l.number, t.column, "expected <edge>.<0|1>, got '" + t.text + "'");
  return {t.text.substr(0, dot), t.text.back() - '0'};
}

GraphShape parse_shape(const Line &l, const Token &t) {
  if (t.text == "theta") return GraphShape::Theta;
  if (t.text == "handcuff") return GraphShape::Handcuff;
  if (t.text == "link") return GraphShape::Link;
  throw ParseError(l.number, t.column, "unknown graph shape '" + t.text + "'");
}

void need(const Line &l, std::size_t n, const std::string &what) {
  if (l.tokens.size() < n)
    throw ParseError(l.number, detail::end_column(l), "truncated line: expected " + what);
  if (l.tokens.size() > n)
    throw ParseError(l.number, l.tokens[n].column, "unexpected token '" + l.tokens[n].text + "'");
}

} // namespace

SpatialGraphCode parse_spatial_graph(const std::string &text) {
  auto lines = detail::tokenize(text);
  SpatialGraphCode g;
  bool have_graph = false;
  std::map<std::string, std::size_t> edge_at;

  for (const auto &l : lines) {
    const auto &kw = l.tokens[0];
    if (kw.text != "graph" && !have_graph)
      throw ParseError(l.number, kw.column, "expected 'graph' line first");
    if (kw.text == "graph") {
      if (have_graph) throw ParseError(l.number, kw.column, "second 'graph' line");
      need(l, 2, "graph shape");
      g.shape = parse_shape(l, l.tokens[1]);
      have_graph = true;
    } else if (kw.text == "assert" || kw.text == "source-assert" ||
               kw.text == "source-computed") {
      need(l, 2, "key=value");
      auto kv = key_value(l, l.tokens[1]);
      if (kw.text == "assert") {
        g.assertions.push_back(kv);
        continue;
      }
      if (!g.looping)
        throw ParseError(l.number, kw.column, "'" + kw.text + "' before a 'looped' line");
      (kw.text == "source-assert" ? g.looping->source_asserted : g.looping->source_computed)
          .push_back(kv);
    } else if (kw.text == "looped") {
      if (l.tokens.size() < 5)
        throw ParseError(l.number, detail::end_column(l),
                         "truncated line: expected looped <n> from <shape> kind=<k>");
      LoopingRecord rec;
      const auto &nt = l.tokens[1];
      auto [p, ec] = std::from_chars(nt.text.data(), nt.text.data() + nt.text.size(), rec.count);
      if (ec != std::errc() || p != nt.text.data() + nt.text.size() || rec.count < 1)
        throw ParseError(l.number, nt.column, "bad looping count '" + nt.text + "'");
      if (l.tokens[2].text != "from")
        throw ParseError(l.number, l.tokens[2].column, "expected 'from'");
      rec.source = parse_shape(l, l.tokens[3]);
      for (std::size_t i = 4; i < l.tokens.size(); ++i) {
        auto [k, v] = key_value(l, l.tokens[i]);
        if (k == "kind") {
          if (v == "tunnel") rec.kind = LoopingKind::TunnelLooping;
          else if (v == "knot") rec.kind = LoopingKind::KnotLooping;
          else if (v == "plain") rec.kind = LoopingKind::Plain;
          else throw ParseError(l.number, l.tokens[i].column, "unknown looping kind '" + v + "'");
        } else if (k == "pair") {
          rec.pair.clear();
          std::size_t a = 0;
          for (;;) {
            auto c = v.find(',', a);
            rec.pair.push_back(v.substr(a, c == std::string::npos ? c : c - a));
            if (c == std::string::npos) break;
            a = c + 1;
          }
        } else if (k == "class") {
          rec.source_class = v;
        } else {
          throw ParseError(l.number, l.tokens[i].column, "unknown looped field '" + k + "'");
        }
      }
      g.looping = rec;
    } else if (kw.text == "vertex") {
      if (l.tokens.size() < 3 || l.tokens[2].text != "ends")
        throw ParseError(l.number, l.tokens.size() < 3 ? detail::end_column(l) : l.tokens[2].column,
                         "expected vertex <id> ends ...");
      Vertex v{l.tokens[1].text, {}};
      for (std::size_t i = 3; i < l.tokens.size(); ++i) v.ends.push_back(parse_end(l, l.tokens[i]));
      g.vertices.push_back(v);
    } else if (kw.text == "edge") {
      if (l.tokens.size() < 2) throw ParseError(l.number, detail::end_column(l), "expected edge id");
      SgEdge e;
      e.id = l.tokens[1].text;
      std::size_t i = 2;
      if (l.tokens.size() == 3 && l.tokens[2].text == "closed") {
        e.closed = true;
      } else {
        if (i < l.tokens.size() && l.tokens[i].text == "loop") ++i;
        if (l.tokens.size() != i + 4 || l.tokens[i].text != "from" || l.tokens[i + 2].text != "to")
          throw ParseError(l.number,
                           l.tokens.size() > i ? l.tokens[i].column : detail::end_column(l),
                           "expected edge <id> [loop] from <v> to <v> or edge <id> closed");
        e.from = l.tokens[i + 1].text;
        e.to = l.tokens[i + 3].text;
        if (i == 3 && e.from != e.to)
          throw ParseError(l.number, l.tokens[2].column, "loop edge must start and end at one vertex");
      }
      if (edge_at.count(e.id))
        throw ParseError(l.number, l.tokens[1].column, "duplicate edge '" + e.id + "'");
      edge_at[e.id] = g.edges.size();
      g.edges.push_back(e);
    } else if (kw.text == "pass") {
      need(l, 5, "pass <edge> <crossing> over|under sign=+|-");
      auto it = edge_at.find(l.tokens[1].text);
      if (it == edge_at.end())
        throw ParseError(l.number, l.tokens[1].column, "pass on undeclared edge '" + l.tokens[1].text + "'");
      Pass p;
      p.crossing = l.tokens[2].text;
      if (l.tokens[3].text == "over") p.level = Level::Over;
      else if (l.tokens[3].text == "under") p.level = Level::Under;
      else throw ParseError(l.number, l.tokens[3].column, "expected over or under");
      const auto &st = l.tokens[4].text;
      if (st == "sign=+" || st == "sign=+1") p.sign = 1;
      else if (st == "sign=-" || st == "sign=-1") p.sign = -1;
      else throw ParseError(l.number, l.tokens[4].column, "expected sign=+ or sign=-");
      g.edges[it->second].passes.push_back(p);
    } else {
      throw ParseError(l.number, kw.column, "unknown keyword '" + kw.text + "'");
    }
  }
  if (!have_graph) throw ParseError(1, 1, "empty input: expected 'graph' line");
  return g;
}

std::string format_spatial_graph(const SpatialGraphCode &g) {
  std::string out = "graph " + to_string(g.shape) + "\n";
  for (const auto &[k, v] : g.assertions) out += "assert " + k + "=" + v + "\n";
  if (g.looping) {
    const auto &r = *g.looping;
    out += "looped " + std::to_string(r.count) + " from " + to_string(r.source) +
           " kind=" + to_string(r.kind);
    if (!r.pair.empty()) {
      out += " pair=";
      for (std::size_t i = 0; i < r.pair.size(); ++i) out += (i ? "," : "") + r.pair[i];
    }
    if (r.source_class) out += " class=" + *r.source_class;
    out += "\n";
    for (const auto &[k, v] : r.source_asserted) out += "source-assert " + k + "=" + v + "\n";
    for (const auto &[k, v] : r.source_computed) out += "source-computed " + k + "=" + v + "\n";
  }
  for (const auto &v : g.vertices) {
    out += "vertex " + v.id + " ends";
    for (const auto &e : v.ends) out += " " + e.edge + "." + std::to_string(e.end);
    out += "\n";
  }
  for (const auto &e : g.edges) {
    if (e.closed) out += "edge " + e.id + " closed\n";
    else out += "edge " + e.id + (e.is_loop() ? " loop" : "") + " from " + e.from + " to " + e.to + "\n";
  }
  for (const auto &e : g.edges)
    for (const auto &p : e.passes)
      out += "pass " + e.id + " " + p.crossing + (p.level == Level::Over ? " over" : " under") +
             (p.sign > 0 ? " sign=+" : " sign=-") + "\n";
  return out;
}

} // namespace hk
