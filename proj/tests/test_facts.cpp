#include <doctest.h>

#include "hkdiag/errors.hpp"
#include "hkdiag/facts.hpp"
#include "hkdiag/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace hk;

namespace {

SpatialGraphCode load(const std::string &name) {
  std::ifstream in(std::string(HKDIAG_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spatial_graph(ss.str());
}

FactSet facts(const SpatialGraphCode &g, std::vector<std::pair<std::string, std::string>> extra = {}) {
  FactSet u;
  u.assert_all(g.assertions);
  u.assert_all(extra);
  return with_certificates(g, u);
}

GraphClass classify(const SpatialGraphCode &g, std::vector<std::pair<std::string, std::string>> extra) {
  return classify_atoroidal(g, facts(g, std::move(extra)));
}

// Theta with no crossings but no planarity certificate either: a crossing
// pair on a single edge (a kink) keeps the count nonzero.
SpatialGraphCode kinked_theta() {
  auto g = load("planar_theta.sgc");
  g.edges[0].passes = {{"x", Level::Over, 1}, {"x", Level::Under, 1}};
  g.assertions = {{"trivial_knot", "a+b"}, {"trivial_knot", "a+c"}};
  return g;
}

const GraphClass T1 = GraphClass::theta(1), T2 = GraphClass::theta(2), T3 = GraphClass::theta(3),
                 T4 = GraphClass::theta(4), H1 = GraphClass::handcuff(1), H2 = GraphClass::handcuff(2),
                 H3 = GraphClass::handcuff(3), H4 = GraphClass::handcuff(4);

} // namespace

TEST_CASE("fact set vocabulary") {
  FactSet f;
  f.assert_fact("planar", "false");
  f.assert_fact("tunnel", "t");
  f.assert_fact("lk", "-3");
  CHECK(f.get("planar") == false);
  CHECK(f.tunnel() == std::string("t"));
  CHECK(f.linking() == -3);
  CHECK_FALSE(f.get("split"));
  CHECK_THROWS_AS(f.assert_fact("colour", "red"), DomainError);
  CHECK_THROWS_AS(f.assert_fact("split", "maybe"), DomainError);
  CHECK_THROWS_AS(f.assert_fact("lk", "x"), DomainError);
  CHECK_THROWS_AS(f.assert_fact("planar", "true"), ContradictionError);
  CHECK_THROWS_AS(f.assert_fact("tunnel", "u"), ContradictionError);
  auto back = f.as_assertions(FactSource::User);
  FactSet g;
  g.assert_all(back);
  CHECK(g.get("planar") == false);
  CHECK(g.linking() == -3);
}

TEST_CASE("constituent names") {
  auto g = load("trefoil_tunnel.sgc");
  CHECK(constituent_names(g) == std::vector<std::string>{"k1+k2", "k1+t", "k2+t"});
  CHECK(normalize_constituent(g, "t+k1") == "k1+t");
  CHECK_THROWS_AS(normalize_constituent(g, "k1+x"), DomainError);
  CHECK(constituent_names(load("hopf_tunnel.sgc")) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("certificates") {
  auto planar = facts(load("planar_theta.sgc"));
  CHECK(planar.get("planar") == true);
  CHECK(planar.booleans().at("planar").source == FactSource::Computed);

  auto tref = facts(load("trefoil_tunnel.sgc"));
  CHECK(tref.get("trivial_knot:k1+k2") == false);
  CHECK(tref.get("trivial_knot:k1+t") == true);
  CHECK_FALSE(tref.get("planar"));

  auto hopf = facts(load("hopf_tunnel.sgc"));
  CHECK(hopf.get("split") == false);
  CHECK(std::abs(*hopf.linking()) == 1);
  CHECK(hopf.get("trivial_knot:a") == true);

  CHECK_THROWS_AS(facts(load("trefoil_tunnel.sgc"), {{"planar", "true"}}), ContradictionError);
  CHECK_THROWS_AS(facts(load("hopf_tunnel.sgc"), {{"split", "true"}}), ContradictionError);
  CHECK_THROWS_AS(facts(load("trefoil_tunnel.sgc"), {{"trivial_knot", "k1+k2"}}), ContradictionError);
}

TEST_CASE("consistency") {
  auto g = load("hopf_tunnel.sgc");
  FactSet f;
  f.assert_fact("tunnel", "t");
  f.assert_fact("irreducible", "true");
  CHECK_THROWS_AS(check_consistency(g, f), ContradictionError);
  FactSet loop;
  loop.assert_fact("tunnel", "a");
  CHECK_THROWS_AS(check_consistency(g, loop), DomainError);
  FactSet unknown;
  unknown.assert_fact("knotting_arc", "zz");
  CHECK_THROWS_AS(check_consistency(g, unknown), DomainError);
}

TEST_CASE("classification: theta") {
  auto th = kinked_theta();
  CHECK(classify(load("planar_theta.sgc"), {{"atoroidal", "true"}}) == T1);
  CHECK(classify(th, {{"atoroidal", "true"}, {"tunnel", "c"}}) == T1);
  CHECK(classify(th, {{"atoroidal", "true"}, {"irreducible", "true"}}) == T2);
  CHECK(classify(th, {{"atoroidal", "true"}, {"planar", "false"}}) == T2);
  auto tref = load("trefoil_tunnel.sgc");
  CHECK(classify(tref, {{"atoroidal", "true"}}) == T3);
  FactSet u;
  u.assert_fact("atoroidal", "true");
  u.assert_fact("knotting_arc", "t");
  auto stripped = tref;
  stripped.assertions.clear();
  CHECK(classify_atoroidal(stripped, with_certificates(stripped, u)) == T4);

  auto open = classify(th, {{"atoroidal", "true"}});
  CHECK(open.variant == GraphClass::Variant::Unclassified);
  CHECK_FALSE(open.needed.empty());
  auto no_atoroidal = classify(th, {});
  CHECK(no_atoroidal.needed == std::vector<std::string>{"atoroidal"});
}

TEST_CASE("classification: handcuff") {
  auto hopf = load("hopf_tunnel.sgc");
  CHECK(classify(hopf, {{"atoroidal", "true"}}) == H3);
  auto bare = hopf;
  bare.assertions.clear();
  CHECK(classify(bare, {{"atoroidal", "true"}, {"irreducible", "true"}}) == H4);
  auto unlinked = bare;
  for (auto &e : unlinked.edges) e.passes.clear();
  CHECK(classify(unlinked, {{"atoroidal", "true"}}) == H1);
  auto kinked = unlinked;
  kinked.edges[0].passes = {{"x", Level::Over, 1}, {"x", Level::Under, 1}};
  kinked.assertions = {{"trivial_knot", "a"}};
  CHECK(classify(kinked, {{"atoroidal", "true"}, {"tunnel", "t"}}) == H1);
  CHECK(classify(kinked, {{"atoroidal", "true"}, {"planar", "false"}}) == H2);
  CHECK(classify(kinked, {{"atoroidal", "true"}}).needed.size() == 1);
  CHECK(classify(closed_braid(2, {1, 1}), {{"atoroidal", "true"}}).variant ==
        GraphClass::Variant::Unclassified);
}

TEST_CASE("graph class names") {
  for (const auto &c : {T1, T2, T3, T4, H1, H2, H3, H4}) CHECK(parse_graph_class(to_string(c)) == c);
  CHECK_FALSE(parse_graph_class("tau5"));
}

TEST_CASE("looping transitions") {
  CHECK(looping_transition(T1, LoopingKind::Plain).outcomes == std::vector<GraphClass>{H3});
  CHECK(looping_transition(T2, LoopingKind::Plain).outcomes == std::vector<GraphClass>{H4});
  CHECK(looping_transition(T3, LoopingKind::KnotLooping).outcomes == std::vector<GraphClass>{H4});
  CHECK(looping_transition(T3, LoopingKind::TunnelLooping).outcomes == std::vector<GraphClass>{H3, H4});
  CHECK(looping_transition(T4, LoopingKind::KnotLooping).outcomes == std::vector<GraphClass>{H4});
  CHECK(looping_transition(H1, LoopingKind::Plain).outcomes == std::vector<GraphClass>{H1});
  CHECK(looping_transition(H3, LoopingKind::Plain).outcomes == std::vector<GraphClass>{H2});
  auto u = looping_transition(GraphClass::unclassified("x"), LoopingKind::Plain);
  CHECK(u.outcomes.size() == 1);
  CHECK(u.outcomes[0].variant == GraphClass::Variant::Unclassified);

  // table and transition function agree
  for (const auto &row : transition_table()) {
    auto kinds = row.kind ? std::vector<LoopingKind>{*row.kind}
                          : std::vector<LoopingKind>{LoopingKind::Plain, LoopingKind::KnotLooping,
                                                     LoopingKind::TunnelLooping};
    for (auto k : kinds) {
      auto out = looping_transition(row.from, k).outcomes;
      CHECK(std::find(out.begin(), out.end(), row.to) != out.end());
    }
  }
}

TEST_CASE("predictions need a looping record") {
  auto p = predicted_annulus(load("hopf_tunnel.sgc"));
  CHECK_FALSE(p.type);
  CHECK(p.candidates.empty());
}

TEST_CASE("prediction after a plain looping of a planar theta") {
  auto th = load("planar_theta.sgc");
  auto f = facts(th, {{"atoroidal", "true"}});
  auto r = loop_at(th, "v", {end_at(th, "v", "a"), end_at(th, "v", "b")});
  record_source(*r.code.looping, th, f);
  auto p = predicted_annulus(r.code);
  CHECK(p.type == std::string("2-1"));
  CHECK(p.source_class == T1);
  CHECK(p.unknotting == true);
  // the looped planar theta is reducible: no annulus diagram applies
  CHECK(p.irreducible_atoroidal == false);
  CHECK(p.candidates.empty());
}

TEST_CASE("prediction for a handcuff source") {
  auto src = family_torus_link(4, true);
  auto f = facts(src, {{"atoroidal", "true"}});
  auto h = loop_at(src, "va", {end_at(src, "va", "a.1"), end_at(src, "va", "t")}).code;
  record_source(*h.looping, src, f);
  auto p = predicted_annulus(h);
  CHECK(p.source_class == H3);
  CHECK(p.type == std::string("2-2"));
  CHECK(p.irreducible_atoroidal == true);
  CHECK_FALSE(p.candidates.empty());
  for (const auto &c : p.candidates) {
    CHECK(validate_labels(c).empty());
  }
}

TEST_CASE("report renderings agree") {
  Report r;
  r.subject = "x";
  r.section("a").add("k", "v", FactOrigin::Asserted);
  r.section("a").add("k2", "v2");
  auto text = render_text(r);
  CHECK(text.find("k2") != std::string::npos);
  CHECK(text.find("(asserted)") != std::string::npos);
  auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["subject"] == "x");
  CHECK(j["sections"].size() == 1);
  CHECK(j["sections"][0]["facts"].size() == 2);
}
