#include "hkdiag/diagram.hpp"
#include "hkdiag/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hk {

std::string to_string(Constraint c) {
  switch (c) {
  case Constraint::C_i: return "C-i";
  case Constraint::C_ii: return "C-ii";
  case Constraint::C_iii: return "C-iii";
  case Constraint::C_iv: return "C-iv";
  case Constraint::C_vi: return "C-vi";
  case Constraint::C_vii: return "C-vii";
  case Constraint::C_cyl: return "C-cyl";
  }
  return "?";
}

std::string to_string(NodeKind k) {
  return k == NodeKind::Solid ? "solid" : "hollow";
}

std::string to_string(const DiagramType &t) {
  return "(" + std::to_string(t.e) + "," + std::to_string(t.l) + "," +
         std::to_string(t.b) + "," + to_string(t.square) + ")";
}

std::string to_string(BundleBase b) {
  switch (b) {
  case BundleBase::KleinBottle: return "once-punctured Klein bottle";
  case BundleBase::MobiusBand: return "Mobius band";
  case BundleBase::PairOfPants: return "pair of pants";
  }
  return "?";
}

namespace {

struct Indexed {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
};

Indexed index_of(const CharDiagram &d) {
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) at[d.nodes[i].id] = i;
  Indexed r{d.nodes.size(), {}};
  for (const auto &e : d.edges) {
    auto a = at.find(e.a), b = at.find(e.b);
    if (a == at.end() || b == at.end())
      throw StructuralError("edge endpoint '" + (a == at.end() ? e.a : e.b) +
                            "' is not a node");
    r.ends.emplace_back(a->second, b->second);
  }
  return r;
}

std::size_t find_root(std::vector<std::size_t> &p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool connected(std::size_t n,
               const std::vector<std::pair<std::size_t, std::size_t>> &ends,
               std::size_t skip = static_cast<std::size_t>(-1)) {
  if (n == 0) return true;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t comps = n;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    if (i == skip) continue;
    auto a = find_root(p, ends[i].first), b = find_root(p, ends[i].second);
    if (a != b) p[a] = b, --comps;
  }
  return comps == 1;
}

} // namespace

void check_structure(const CharDiagram &d) {
  if (d.nodes.empty()) throw StructuralError("diagram has no nodes");
  std::set<std::string> seen;
  for (const auto &n : d.nodes) {
    if (n.id.empty()) throw StructuralError("empty node id");
    if (!seen.insert(n.id).second)
      throw StructuralError("duplicate node id '" + n.id + "'");
    if (n.genus && *n.genus < 2)
      throw StructuralError("genus label of '" + n.id + "' is below 2");
  }
  auto ix = index_of(d);
  if (!connected(ix.n, ix.ends)) throw StructuralError("diagram is disconnected");
}

std::vector<int> degrees(const CharDiagram &d) {
  auto ix = index_of(d);
  std::vector<int> deg(ix.n, 0);
  for (auto [a, b] : ix.ends) ++deg[a], ++deg[b];
  return deg;
}

std::optional<std::size_t> labeled_node(const CharDiagram &d) {
  std::optional<std::size_t> r;
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    if (d.nodes[i].genus) {
      if (r) return std::nullopt;
      r = i;
    }
  return r;
}

std::vector<ConstraintViolation> validate(const CharDiagram &d,
                                          const ConstraintMask &mask) {
  check_structure(d);
  auto ix = index_of(d);
  auto deg = degrees(d);
  std::vector<ConstraintViolation> out;
  auto flag = [&](Constraint c, std::string s) {
    if (mask.has(c)) out.push_back({c, std::move(s)});
  };

  std::size_t labeled = 0;
  for (const auto &n : d.nodes) labeled += n.genus.has_value();
  auto lab = labeled_node(d);
  if (labeled != 1)
    flag(Constraint::C_i,
         std::to_string(labeled) + " labeled nodes, expected exactly one");
  else if (*d.nodes[*lab].genus != 2)
    flag(Constraint::C_i, "labeled node '" + d.nodes[*lab].id + "' has genus " +
                              std::to_string(*d.nodes[*lab].genus) +
                              ", expected 2");

  for (const auto &n : d.nodes)
    if (!n.genus && n.kind != NodeKind::Solid)
      flag(Constraint::C_ii, "unlabeled node '" + n.id + "' is hollow");

  for (std::size_t i = 0; i < ix.ends.size(); ++i) {
    auto [a, b] = ix.ends[i];
    if (a == b && d.nodes[a].kind == NodeKind::Solid)
      flag(Constraint::C_iii, "loop at solid node '" + d.nodes[a].id + "'");
    if (!d.nodes[a].genus && !d.nodes[b].genus)
      flag(Constraint::C_iv, "edge " + d.nodes[a].id + "-" + d.nodes[b].id +
                                 " misses the labeled node");
  }

  if (lab && d.nodes[*lab].kind == NodeKind::Solid && d.nodes.size() == 2 &&
      d.edges.size() == 2 && ix.ends[0].first != ix.ends[0].second &&
      ix.ends[1].first != ix.ends[1].second)
    flag(Constraint::C_vi, "solid labeled node in a single bigon");

  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] > 3)
      flag(Constraint::C_vii, "node '" + d.nodes[i].id + "' has degree " +
                                  std::to_string(deg[i]));

  if (d.edges.empty()) flag(Constraint::C_cyl, "no edges");
  return out;
}

DiagramType classify_type(const CharDiagram &d, const ConstraintMask &mask) {
  if (!validate(d, mask).empty())
    throw DomainError("classify_type requires a valid diagram");
  auto ix = index_of(d);
  DiagramType t;
  t.e = static_cast<int>(d.edges.size());
  std::map<std::pair<std::size_t, std::size_t>, int> mult;
  for (auto [a, b] : ix.ends) {
    if (a == b) {
      ++t.l;
      continue;
    }
    ++mult[{std::min(a, b), std::max(a, b)}];
  }
  for (auto &[k, m] : mult) t.b += m * (m - 1) / 2;
  t.square = d.nodes[*labeled_node(d)].kind;
  return t;
}

std::optional<BundleBase> bundle_base(const CharDiagram &d) {
  auto lab = labeled_node(d);
  if (!lab || d.nodes[*lab].kind != NodeKind::Solid) return std::nullopt;
  switch (degrees(d)[*lab]) {
  case 1: return BundleBase::KleinBottle;
  case 2: return BundleBase::MobiusBand;
  case 3: return BundleBase::PairOfPants;
  default: return std::nullopt;
  }
}

std::vector<bool> cut_edges(const CharDiagram &d) {
  auto ix = index_of(d);
  std::vector<bool> cut(ix.ends.size());
  for (std::size_t i = 0; i < ix.ends.size(); ++i)
    cut[i] = ix.ends[i].first != ix.ends[i].second && !connected(ix.n, ix.ends, i);
  return cut;
}

bool realization_unknown(const DiagramType &t) {
  return t == DiagramType{2, 0, 0, NodeKind::Solid} ||
         (t.e == 3 && t.l == 0 && t.b == 1) || (t.e == 3 && t.l == 0 && t.b == 0);
}

namespace {

void put_tag(Encoding &out, const std::string &s) {
  out.push_back(static_cast<std::uint8_t>(std::min<std::size_t>(s.size(), 255)));
  out.insert(out.end(), s.begin(), s.end());
}

Encoding encode(const CharDiagram &d, const Indexed &ix,
                const std::vector<std::size_t> &order, const EdgeTag &tag) {
  std::size_t n = order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  Encoding out;
  out.push_back(static_cast<std::uint8_t>(n));
  for (auto v : order) {
    out.push_back(d.nodes[v].kind == NodeKind::Solid ? 0 : 1);
    out.push_back(static_cast<std::uint8_t>(std::min(d.nodes[v].genus.value_or(0), 255)));
  }
  std::vector<std::vector<std::string>> cell(n * n);
  std::vector<int> mult(n * n, 0);
  for (std::size_t i = 0; i < ix.ends.size(); ++i) {
    auto a = pos[ix.ends[i].first], b = pos[ix.ends[i].second];
    if (a > b) std::swap(a, b);
    ++mult[a * n + b];
    if (tag) cell[a * n + b].push_back(tag(i));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      out.push_back(static_cast<std::uint8_t>(mult[a * n + b]));
      auto &c = cell[a * n + b];
      std::sort(c.begin(), c.end());
      for (const auto &s : c) put_tag(out, s);
    }
  return out;
}

} // namespace

std::vector<std::size_t> canonical_order(const CharDiagram &d, const EdgeTag &tag) {
  auto ix = index_of(d);
  if (ix.n > 8) throw StructuralError("canonical form limited to 8 nodes");
  std::vector<std::size_t> order(ix.n), best;
  std::iota(order.begin(), order.end(), 0);
  Encoding best_enc;
  do {
    auto e = encode(d, ix, order, tag);
    if (best.empty() || e < best_enc) best_enc = std::move(e), best = order;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

Encoding canonical_form(const CharDiagram &d, const EdgeTag &tag) {
  return encode(d, index_of(d), canonical_order(d, tag), tag);
}

CharDiagram canonical_relabel(const CharDiagram &d) {
  auto order = canonical_order(d);
  auto ix = index_of(d);
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  CharDiagram r;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Node n = d.nodes[order[i]];
    n.id = "v" + std::to_string(i);
    r.nodes.push_back(n);
  }
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (auto [a, b] : ix.ends) es.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
  std::sort(es.begin(), es.end());
  for (auto [a, b] : es) r.edges.push_back({r.nodes[a].id, r.nodes[b].id});
  return r;
}

bool are_isomorphic(const CharDiagram &d1, const CharDiagram &d2) {
  if (d1.nodes.size() != d2.nodes.size() || d1.edges.size() != d2.edges.size())
    return false;
  return canonical_form(d1) == canonical_form(d2);
}

EnumerationResult enumerate_valid(const ConstraintMask &mask) {
  constexpr std::size_t kMaxNodes = 4, kMaxEdges = 3;
  const NodeKind kinds[2] = {NodeKind::Solid, NodeKind::Hollow};
  const std::optional<int> genera[3] = {std::nullopt, 2, 3};

  EnumerationResult res;
  std::map<Encoding, CharDiagram> classes;

  for (std::size_t n = 1; n <= kMaxNodes; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);

    // multisets of pairs of size <= kMaxEdges, as nondecreasing index lists
    std::vector<std::vector<std::size_t>> multisets{{}};
    for (std::size_t k = 0; k < multisets.size(); ++k) {
      auto cur = multisets[k];
      if (cur.size() == kMaxEdges) continue;
      for (std::size_t p = cur.empty() ? 0 : cur.back(); p < pairs.size(); ++p) {
        auto next = cur;
        next.push_back(p);
        multisets.push_back(std::move(next));
      }
    }

    std::size_t attr_count = 1;
    for (std::size_t i = 0; i < n; ++i) attr_count *= 6;

    for (const auto &ms : multisets) {
      std::vector<std::pair<std::size_t, std::size_t>> ends;
      for (auto p : ms) ends.push_back(pairs[p]);
      if (!connected(n, ends)) continue;
      for (std::size_t code = 0; code < attr_count; ++code) {
        CharDiagram d;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 6)
          d.nodes.push_back({"n" + std::to_string(i), kinds[c % 6 / 3], genera[c % 3]});
        for (auto [a, b] : ends) d.edges.push_back({d.nodes[a].id, d.nodes[b].id});
        ++res.candidates;
        if (!validate(d, mask).empty()) continue;
        auto enc = canonical_form(d);
        if (!classes.count(enc)) classes.emplace(std::move(enc), canonical_relabel(d));
      }
    }
  }
  for (auto &[enc, d] : classes) res.classes.push_back(std::move(d));
  return res;
}

} // namespace hk
