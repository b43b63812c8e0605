#pragma once

#include "hkdiag/annulus.hpp"
#include "hkdiag/spatial.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace hk {

enum class FactSource { User, Computed };

struct Fact {
  bool value = false;
  FactSource source = FactSource::User;
  std::string oracle; // producing certificate when computed
};

// Keys: planar, atoroidal, irreducible, split, trivial_link, and
// trivial_knot:<constituent> for each constituent knot or link component.
// Constituents of a theta are named "a+b" in edge order.
class FactSet {
public:
  // Accepts planar|atoroidal|irreducible|split|trivial_link=true|false,
  // tunnel=<edge>, knotting_arc=<edge>, trivial_knot=<c>, nontrivial_knot=<c>,
  // lk=<integer> (linking number of a handcuff's loops).
  // Throws DomainError on an unknown key or a malformed value.
  void assert_fact(const std::string &key, const std::string &value,
                   FactSource source = FactSource::User, const std::string &oracle = "");
  void assert_all(const std::vector<std::pair<std::string, std::string>> &kv,
                  FactSource source = FactSource::User);

  std::optional<bool> get(const std::string &key) const;
  const std::map<std::string, Fact> &booleans() const { return bools_; }
  const std::optional<std::string> &tunnel() const { return tunnel_; }
  const std::optional<int> &linking() const { return lk_; }
  const std::optional<std::string> &knotting_arc() const { return knotting_; }
  FactSource tunnel_source() const { return tunnel_src_; }

  // key=value lines; the same vocabulary assert_fact accepts.
  std::vector<std::pair<std::string, std::string>> as_assertions(FactSource which) const;

private:
  void set(const std::string &key, bool v, FactSource source, const std::string &oracle);
  std::map<std::string, Fact> bools_;
  std::optional<std::string> tunnel_, knotting_;
  std::optional<int> lk_;
  FactSource tunnel_src_ = FactSource::User, knotting_src_ = FactSource::User,
             lk_src_ = FactSource::User;
};

// Names of the constituents facts can talk about, in a fixed order.
std::vector<std::string> constituent_names(const SpatialGraphCode &g);
// "b+a" -> "a+b" for a theta; throws DomainError on unknown names.
std::string normalize_constituent(const SpatialGraphCode &g, const std::string &name);

// Sound certificates: Alexander polynomial != 1, no self-crossings,
// linking number != 0, no crossings between components, no crossings at all.
// Throws ContradictionError when an asserted fact disagrees with one.
FactSet with_certificates(const SpatialGraphCode &g, const FactSet &user);

// Throws ContradictionError on mutually exclusive facts.
void check_consistency(const SpatialGraphCode &g, const FactSet &f);

struct GraphClass {
  enum class Variant { Theta, Handcuff, Unclassified };
  Variant variant = Variant::Unclassified;
  int type = 0; // 1..4
  std::string reason;
  std::vector<std::string> needed;

  static GraphClass theta(int t) { return {Variant::Theta, t, "", {}}; }
  static GraphClass handcuff(int t) { return {Variant::Handcuff, t, "", {}}; }
  static GraphClass unclassified(std::string why, std::vector<std::string> needed = {}) {
    return {Variant::Unclassified, 0, std::move(why), std::move(needed)};
  }
  friend bool operator==(const GraphClass &, const GraphClass &) = default;
  friend auto operator<=>(const GraphClass &a, const GraphClass &b) {
    return std::tie(a.variant, a.type) <=> std::tie(b.variant, b.type);
  }
};

std::string to_string(const GraphClass &c); // "tau3", "h2", "unclassified"
std::optional<GraphClass> parse_graph_class(const std::string &s);

// Facts must already include certificates.
GraphClass classify_atoroidal(const SpatialGraphCode &g, const FactSet &f);

struct Transition {
  std::vector<GraphClass> outcomes; // more than one when indeterminate
  std::string note;
};

Transition looping_transition(const GraphClass &c, LoopingKind kind);

struct TransitionRow {
  GraphClass from;
  std::optional<LoopingKind> kind; // nullopt: any looping
  GraphClass to;
  std::string note;
};

// Every (source, kind, outcome) triple of the looping lemmas; the tunnel
// looping of tau3 contributes two rows.
std::vector<TransitionRow> transition_table();

struct AnnulusPrediction {
  std::optional<std::string> type; // "2-1" or "2-2"
  int count = 0;                   // number of such annuli produced
  bool unique = false;
  std::optional<bool> unknotting, irreducible_atoroidal;
  std::optional<GraphClass> source_class;
  std::vector<AnnulusDiagram> candidates;
  std::vector<std::string> notes;
};

// Uses the looping record of g; without one every field is unknown.
AnnulusPrediction predicted_annulus(const SpatialGraphCode &g);

// Source class and facts of a code about to be looped, written into the record.
void record_source(LoopingRecord &rec, const SpatialGraphCode &source, const FactSet &facts);

} // namespace hk
