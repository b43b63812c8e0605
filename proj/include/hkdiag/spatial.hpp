#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hk {

enum class GraphShape { Theta, Handcuff, Link };
enum class Level { Over, Under };
enum class LoopingKind { TunnelLooping, KnotLooping, Plain };

std::string to_string(GraphShape s);
std::string to_string(LoopingKind k);

struct EdgeEnd {
  std::string edge;
  int end = 0; // 0 = tail (from), 1 = head (to)
  friend bool operator==(const EdgeEnd &, const EdgeEnd &) = default;
};

struct Vertex {
  std::string id;
  std::vector<EdgeEnd> ends; // cyclic order; three when valid
  friend bool operator==(const Vertex &, const Vertex &) = default;
};

struct Pass {
  std::string crossing;
  Level level = Level::Over;
  int sign = 1;
  friend bool operator==(const Pass &, const Pass &) = default;
};

struct SgEdge {
  std::string id;
  bool closed = false;       // vertex-free circle
  std::string from, to;      // vertex ids unless closed
  std::vector<Pass> passes;  // traversal order, from -> to
  bool is_loop() const { return !closed && from == to; }
  friend bool operator==(const SgEdge &, const SgEdge &) = default;
};

// How a handcuff code was produced by looping; carried through files so the
// annulus prediction can be made from the output alone.
struct LoopingRecord {
  int count = 1;
  GraphShape source = GraphShape::Theta;
  LoopingKind kind = LoopingKind::Plain;
  std::vector<std::string> pair;           // source edges of the spliced ends
  std::optional<std::string> source_class; // "tau3", "h2", ...
  std::vector<std::pair<std::string, std::string>> source_asserted;
  std::vector<std::pair<std::string, std::string>> source_computed;
  friend bool operator==(const LoopingRecord &, const LoopingRecord &) = default;
};

struct SpatialGraphCode {
  GraphShape shape = GraphShape::Theta;
  std::vector<Vertex> vertices;
  std::vector<SgEdge> edges;
  std::vector<std::pair<std::string, std::string>> assertions; // key=value
  std::optional<LoopingRecord> looping;

  const SgEdge &edge(const std::string &id) const;
  const Vertex &vertex(const std::string &id) const;
  bool has_edge(const std::string &id) const;
  std::size_t crossing_count() const;
  friend bool operator==(const SpatialGraphCode &, const SpatialGraphCode &) = default;
};

struct CodeViolation {
  std::string what;
};

std::vector<CodeViolation> validate_code(const SpatialGraphCode &g);
// Throws StructuralError carrying the first violation.
void require_valid(const SpatialGraphCode &g);

SpatialGraphCode parse_spatial_graph(const std::string &text);
std::string format_spatial_graph(const SpatialGraphCode &g);

// theta: three knots named "e+f" for each edge pair; handcuff: the two loops;
// link: the code itself.
std::vector<SpatialGraphCode> constituent_links(const SpatialGraphCode &g);
// Constituent knot of a theta through the two named edges.
SpatialGraphCode constituent_knot(const SpatialGraphCode &g, const std::string &a,
                                  const std::string &b);
// Handcuff: the 2-component link of its loops. Link: unchanged.
SpatialGraphCode constituent_link(const SpatialGraphCode &g);

// Single closed component as its own knot code.
SpatialGraphCode component_knot(const SpatialGraphCode &link, const std::string &id);
std::size_t self_crossings(const SpatialGraphCode &link, const std::string &id);

int linking_number(const SpatialGraphCode &link, const std::string &a, const std::string &b);

struct LoopOptions {
  bool mirror = false;          // ring crossings negative instead of positive
  std::string strand, ring, vertex; // ids for the new pieces; generated when empty
};

struct LoopResult {
  SpatialGraphCode code;
  std::string strand, ring, vertex;
};

// Replace vertex v by a ring around the strand spliced from the two ends.
LoopResult loop_at(const SpatialGraphCode &g, const std::string &v,
                   const std::pair<EdgeEnd, EdgeEnd> &pair, const LoopOptions &opt = {});
// Resolve "e" or "e.k" against the ends at v.
EdgeEnd end_at(const SpatialGraphCode &g, const std::string &v, const std::string &spec);

// Loop a theta at both vertices with distinct edge pairs (edges named by id).
LoopResult double_loop(const SpatialGraphCode &g, const std::string &v,
                       std::pair<std::string, std::string> pair_v, const std::string &w,
                       std::pair<std::string, std::string> pair_w, const LoopOptions &opt = {});

LoopingKind looping_kind(const SpatialGraphCode &g, const std::optional<std::string> &tunnel_arc,
                         const std::pair<EdgeEnd, EdgeEnd> &pair);

// Closure of a braid word on the given number of strands; generator i > 0 is
// the positive crossing of strands i and i+1, -i its inverse. Components are
// named a, b, c, ... in order of their lowest starting position.
SpatialGraphCode closed_braid(int strands, const std::vector<int> &word);

SpatialGraphCode family_torus_link(int n, bool tunnel, bool mirror = false);
// family_torus_link(n, true) looped at the vertex on component a, pairing a with the tunnel.
SpatialGraphCode family_torus_looped(int n, bool mirror = false);

enum class RingVariant { Axis, Meridian };
// (n,2)-torus knot k, ring r, tunnel t joining them.
SpatialGraphCode family_odd_ringed(int n, RingVariant variant, bool mirror = false);

} // namespace hk
