#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hk {

enum class NodeKind { Solid, Hollow };

struct Node {
  std::string id;
  NodeKind kind = NodeKind::Solid;
  std::optional<int> genus;

  friend bool operator==(const Node &, const Node &) = default;
};

struct Edge {
  std::string a, b;
  bool is_loop() const { return a == b; }

  friend bool operator==(const Edge &, const Edge &) = default;
};

// Characteristic diagram: multigraph with loops, at most one genus label per node.
struct CharDiagram {
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  friend bool operator==(const CharDiagram &, const CharDiagram &) = default;
};

enum class Constraint { C_i, C_ii, C_iii, C_iv, C_vi, C_vii, C_cyl };
constexpr int kConstraintCount = 7;

struct ConstraintViolation {
  Constraint which;
  std::string detail;
};

// Enabled constraints; ablation runs disable one.
struct ConstraintMask {
  bool on[kConstraintCount] = {true, true, true, true, true, true, true};
  static ConstraintMask all() { return {}; }
  ConstraintMask without(Constraint c) const {
    ConstraintMask m = *this;
    m.on[static_cast<int>(c)] = false;
    return m;
  }
  bool has(Constraint c) const { return on[static_cast<int>(c)]; }
};

struct DiagramType {
  int e = 0, l = 0, b = 0;
  NodeKind square = NodeKind::Hollow;

  friend bool operator==(const DiagramType &, const DiagramType &) = default;
  friend auto operator<=>(const DiagramType &, const DiagramType &) = default;
};

enum class BundleBase { KleinBottle, MobiusBand, PairOfPants };

std::string to_string(Constraint c);
std::string to_string(NodeKind k);
std::string to_string(const DiagramType &t);     // "(3,0,3,solid)"
std::string to_string(BundleBase b);

// Throws StructuralError on dangling endpoints, duplicate ids or a
// disconnected graph.
void check_structure(const CharDiagram &d);

std::vector<ConstraintViolation> validate(const CharDiagram &d,
                                          const ConstraintMask &mask = {});

// Throws DomainError if the diagram does not validate.
DiagramType classify_type(const CharDiagram &d, const ConstraintMask &mask = {});

// Index of the node with a genus label; nullopt unless exactly one exists.
std::optional<std::size_t> labeled_node(const CharDiagram &d);
std::vector<int> degrees(const CharDiagram &d);

// Base surface of the I-bundle at a solid labeled node, read off its degree.
std::optional<BundleBase> bundle_base(const CharDiagram &d);

// An edge is a cut edge if deleting it disconnects the diagram.
std::vector<bool> cut_edges(const CharDiagram &d);

// Types with no known realization.
bool realization_unknown(const DiagramType &t);

using Encoding = std::vector<std::uint8_t>;
using EdgeTag = std::function<std::string(std::size_t edge)>;

// Minimum serialization over all node orderings. The optional edge tag folds
// per-edge data (labels) into the encoding.
Encoding canonical_form(const CharDiagram &d, const EdgeTag &tag = {});
// Node order attaining the canonical form.
std::vector<std::size_t> canonical_order(const CharDiagram &d,
                                         const EdgeTag &tag = {});
// Nodes renamed v0, v1, ... in canonical order, edges sorted.
CharDiagram canonical_relabel(const CharDiagram &d);
bool are_isomorphic(const CharDiagram &d1, const CharDiagram &d2);

struct EnumerationResult {
  std::vector<CharDiagram> classes; // canonical representatives, sorted by encoding
  std::size_t candidates = 0;       // connected candidates inspected
};

// All connected multigraphs with at most 4 nodes and 3 edges, node kinds
// solid/hollow, genus label none/2/3, filtered by the enabled constraints.
EnumerationResult enumerate_valid(const ConstraintMask &mask = {});

// Tokenized text format and JSON; format detected from the first character.
CharDiagram parse_diagram(const std::string &text);
std::string format_diagram(const CharDiagram &d);
std::string format_diagram_json(const CharDiagram &d);

} // namespace hk
