#pragma once

#include "hkdiag/diagram.hpp"
#include "hkdiag/rational.hpp"
#include "hkdiag/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

enum class LabelKind { H1, H2, K1, K2, L, L0, EM };

struct EdgeLabel {
  LabelKind kind = LabelKind::H1;
  Rational r;    // K2 parameter
  SlopePair sp;  // L parameter

  static EdgeLabel h1() { return {LabelKind::H1, {}, {}}; }
  static EdgeLabel h2() { return {LabelKind::H2, {}, {}}; }
  static EdgeLabel k1() { return {LabelKind::K1, {}, {}}; }
  static EdgeLabel l0() { return {LabelKind::L0, {}, {}}; }
  static EdgeLabel em() { return {LabelKind::EM, {}, {}}; }
  // Throw DomainError on parameters outside the label's range.
  static EdgeLabel k2(const Rational &r);
  static EdgeLabel l(const SlopePair &sp);

  bool is_type2() const { return kind == LabelKind::H1 || kind == LabelKind::H2; }
  bool is_k() const { return kind == LabelKind::K1 || kind == LabelKind::K2; }

  friend bool operator==(const EdgeLabel &, const EdgeLabel &) = default;
};

std::string to_string(const EdgeLabel &l);   // file syntax: h1, k2(2/3), l(2/3,3/2)
std::optional<EdgeLabel> parse_label(const std::string &s, std::string *why = nullptr);

// Characteristic diagram with one label slot per edge.
struct AnnulusDiagram {
  CharDiagram base;
  std::vector<std::optional<EdgeLabel>> labels;

  friend bool operator==(const AnnulusDiagram &, const AnnulusDiagram &) = default;
};

enum class LabelRule { R1, R2, R3, R4, R5, R6, R7, R8 };

struct LabelViolation {
  LabelRule rule;
  std::string detail;
};

std::string to_string(LabelRule r);

// Rules R1-R7 plus R8: an H2 label only occurs on the bases of the five
// diagrams of the type-2-2 classification. Throws StructuralError on an
// unlabeled edge and DomainError if the base does not validate.
std::vector<LabelViolation> validate_labels(const AnnulusDiagram &ad);

// True when no edge is H1 or H2; such diagrams are outside the classification.
bool unconstrained(const AnnulusDiagram &ad);

enum class PlusBound { Trivial, AtMostZ2, ExactlyZ2 };
enum class FullBound { Trivial, AtMostZ2, AtMostZ2xZ2, ExactlyZ2xZ2 };
enum class Group { Trivial, Z2, Z2xZ2 };

struct SymmetryBound {
  PlusBound sym_plus = PlusBound::AtMostZ2;
  FullBound sym = FullBound::AtMostZ2xZ2;
  bool exact = false;
};

struct SymmetryOutcome {
  bool derived = false;     // false: no type-2 edge, no bound available
  SymmetryBound bound;
  std::string basis;        // which lookup row applied, or why none did
};

SymmetryOutcome symmetry_bounds(const AnnulusDiagram &ad);

std::string to_string(PlusBound b);
std::string to_string(FullBound b);
std::string to_string(Group g);
bool admits(PlusBound b, Group g);
bool admits(FullBound b, Group g);

bool is_fourone(const AnnulusDiagram &ad);

enum class FactOrigin { PaperRule, Computed, Asserted };
std::string to_string(FactOrigin o);

struct DiagramFact {
  std::string text;
  FactOrigin origin = FactOrigin::PaperRule;
};

std::vector<DiagramFact> derived_facts(const AnnulusDiagram &ad);

// Canonical form including labels; isomorphism of labeled diagrams.
Encoding canonical_form(const AnnulusDiagram &ad);
bool are_isomorphic(const AnnulusDiagram &a, const AnnulusDiagram &b);
AnnulusDiagram canonical_relabel(const AnnulusDiagram &ad);

// Parametric representative of every label kind: h1, h2, k1, k2(2/3), l0, em,
// l(2/3,3/2), l(2/3,6).
std::vector<EdgeLabel> representative_labels();

struct CatalogEntry {
  AnnulusDiagram diagram;
  DiagramType type;
};

// Every assignment of representative labels over the enumerated bases that
// passes validate_labels, one per labeled isomorphism class.
std::vector<CatalogEntry> label_catalog();

// Builders for the labeled diagrams that appear in the classification.
AnnulusDiagram single_loop(const EdgeLabel &l);
AnnulusDiagram loop_and_edge(const EdgeLabel &loop, const EdgeLabel &edge);
AnnulusDiagram theta_shape(NodeKind square);

AnnulusDiagram parse_annulus_diagram(const std::string &text);
std::string format_annulus_diagram(const AnnulusDiagram &ad);
std::string format_annulus_diagram_json(const AnnulusDiagram &ad);
// Compact one-line rendering: "(2,1,0,hollow) {h2,k1}".
std::string summary(const AnnulusDiagram &ad);

} // namespace hk
