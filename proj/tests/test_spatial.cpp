#include <doctest.h>

#include "hkdiag/errors.hpp"
#include "hkdiag/spatial.hpp"
#include "hkdiag/wirtinger.hpp"
#include "oracles.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace hk;

namespace {

SpatialGraphCode load(const std::string &name) {
  std::ifstream in(std::string(HKDIAG_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spatial_graph(ss.str());
}

LaurentPoly poly(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return LaurentPoly(v);
}

bool mentions(const std::vector<CodeViolation> &vs, const std::string &word) {
  for (const auto &v : vs)
    if (v.what.find(word) != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("validate_code") {
  CHECK(validate_code(load("planar_theta.sgc")).empty());
  CHECK(validate_code(load("hopf_tunnel.sgc")).empty());
  CHECK(validate_code(load("trefoil_tunnel.sgc")).empty());
  CHECK_FALSE(validate_code(load("bad_parity.sgc")).empty());

  auto g = load("planar_theta.sgc");
  g.vertices[0].ends.pop_back();
  CHECK_FALSE(validate_code(g).empty());
  CHECK_THROWS_AS(require_valid(g), StructuralError);

  auto h = load("hopf_tunnel.sgc");
  h.edges[0].passes[0].sign = -1; // crossing signs disagree
  CHECK(mentions(validate_code(h), "x1"));
}

TEST_CASE("constituents of a theta") {
  auto g = load("trefoil_tunnel.sgc");
  auto cs = constituent_links(g);
  REQUIRE(cs.size() == 3);
  auto k = constituent_knot(g, "k1", "k2");
  CHECK(k.shape == GraphShape::Link);
  CHECK(k.edges.size() == 1);
  CHECK(k.crossing_count() == 3);
  CHECK(alexander_polynomial(k) == poly({1, -1, 1}));
  // the tunnel arc carries no crossings
  CHECK(constituent_knot(g, "k1", "t").crossing_count() == 0);
  CHECK(alexander_polynomial(constituent_knot(g, "k2", "t")) == poly({1}));
}

TEST_CASE("constituent link of a handcuff") {
  auto g = load("hopf_tunnel.sgc");
  auto l = constituent_link(g);
  CHECK(l.shape == GraphShape::Link);
  CHECK(l.edges.size() == 2);
  CHECK(std::abs(linking_number(l, "a", "b")) == 1);
  CHECK(self_crossings(l, "a") == 0);
  CHECK(component_knot(l, "a").crossing_count() == 0);
}

TEST_CASE("closed braids") {
  auto trefoil = closed_braid(2, {1, 1, 1});
  CHECK(trefoil.edges.size() == 1);
  CHECK(alexander_polynomial(trefoil) == poly({1, -1, 1}));
  auto fig8 = closed_braid(3, {1, -2, 1, -2});
  CHECK(alexander_polynomial(fig8) == poly({1, -3, 1}));
  auto five2 = closed_braid(3, {1, 1, 1, 2, -1, 2});
  CHECK(alexander_polynomial(five2) == poly({2, -3, 2}));
  auto unknot = closed_braid(2, {1});
  CHECK(alexander_polynomial(unknot) == poly({1}));
  CHECK_THROWS_AS(closed_braid(2, {2}), DomainError);
  CHECK_THROWS_AS(closed_braid(2, {0}), DomainError);
}

TEST_CASE("linking number matches the brute count and is antisymmetric under mirroring") {
  for (int n = 2; n <= 10; n += 2) {
    auto l = constituent_link(family_torus_link(n, true));
    int lk = linking_number(l, "a", "b");
    CHECK(lk == n / 2);
    CHECK(lk == oracle::brute_lk(l, "a", "b"));
    CHECK(linking_number(l, "b", "a") == lk);
    auto m = constituent_link(family_torus_link(n, true, true));
    CHECK(linking_number(m, "a", "b") == -lk);
    CHECK(oracle::brute_lk(m, "a", "b") == -lk);
  }
  CHECK_THROWS_AS(family_torus_link(1, false), DomainError);
}

TEST_CASE("torus link complements") {
  for (int n = 2; n <= 6; n += 2) {
    auto g = family_torus_link(n, false);
    CHECK(validate_code(g).empty());
    CHECK(to_string(h1_complement(g).group) == "Z^2");
  }
  auto odd = family_torus_link(5, true);
  CHECK(odd.shape == GraphShape::Theta);
  CHECK(validate_code(odd).empty());
  CHECK(to_string(h1_complement(odd).group) == "Z^2");
  CHECK(alexander_polynomial(constituent_knot(odd, "k1", "k2")) == poly({1, -1, 1, -1, 1}));
}

TEST_CASE("odd ringed family") {
  for (int n : {3, 5, 7})
    for (auto v : {RingVariant::Axis, RingVariant::Meridian}) {
      auto g = family_odd_ringed(n, v);
      CHECK(validate_code(g).empty());
      auto l = constituent_link(g);
      CHECK(linking_number(l, "k", "r") == oracle::brute_lk(l, "k", "r"));
      auto m = constituent_link(family_odd_ringed(n, v, true));
      CHECK(linking_number(m, "k", "r") == -linking_number(l, "k", "r"));
    }
  CHECK(linking_number(constituent_link(family_odd_ringed(3, RingVariant::Axis)), "k", "r") == 2);
  CHECK_THROWS_AS(family_odd_ringed(4, RingVariant::Axis), DomainError);
}

TEST_CASE("looping a planar theta") {
  auto g = load("planar_theta.sgc");
  auto r = loop_at(g, "v", {end_at(g, "v", "a"), end_at(g, "v", "b")});
  const auto &h = r.code;
  CHECK(h.shape == GraphShape::Handcuff);
  CHECK(validate_code(h).empty());
  REQUIRE(h.looping);
  CHECK(h.looping->count == 1);
  CHECK(h.looping->pair == std::vector<std::string>{"a", "b"});
  CHECK(h.has_edge(r.strand));
  CHECK(h.has_edge(r.ring));
  // vertex count and Euler characteristic are preserved
  CHECK(h.vertices.size() == g.vertices.size());
  CHECK(h.edges.size() == g.edges.size());
  auto l = constituent_link(h);
  CHECK(std::abs(linking_number(l, l.edges[0].id, l.edges[1].id)) == 1);
  CHECK(to_string(h1_complement(h).group) == "Z^2");
}

TEST_CASE("looping invariants on the families") {
  for (int n = 2; n <= 8; n += 2) {
    auto h = family_torus_looped(n);
    CHECK(validate_code(h).empty());
    CHECK(to_string(h1_complement(h).group) == "Z^2");
    auto m = family_torus_looped(n, true);
    CHECK(validate_code(m).empty());
  }
}

TEST_CASE("looping preconditions") {
  auto g = load("hopf_tunnel.sgc");
  CHECK_THROWS_AS(loop_at(g, "va", {end_at(g, "va", "a.0"), end_at(g, "va", "a.1")}), DomainError);
  CHECK_THROWS_AS(end_at(g, "va", "b"), DomainError);
  auto th = load("planar_theta.sgc");
  CHECK_THROWS_AS(loop_at(th, "v", {end_at(th, "v", "a"), end_at(th, "v", "a")}), DomainError);
  CHECK_THROWS_AS(loop_at(closed_braid(2, {1, 1}), "v", {{"a", 0}, {"b", 0}}), DomainError);
  CHECK_THROWS_AS(double_loop(th, "v", {"a", "b"}, "w", {"a", "b"}), DomainError);
  CHECK_THROWS_AS(double_loop(th, "v", {"a", "b"}, "v", {"a", "c"}), DomainError);
}

TEST_CASE("double looping") {
  auto th = load("planar_theta.sgc");
  auto r = double_loop(th, "v", {"a", "b"}, "w", {"a", "c"});
  CHECK(validate_code(r.code).empty());
  REQUIRE(r.code.looping);
  CHECK(r.code.looping->count == 2);
}

TEST_CASE("looping kind") {
  auto g = load("trefoil_tunnel.sgc");
  auto kind = [&](const char *x, const char *y) {
    return looping_kind(g, std::string("t"), {end_at(g, "va", x), end_at(g, "va", y)});
  };
  CHECK(kind("k1", "k2") == LoopingKind::TunnelLooping);
  CHECK(kind("k1", "t") == LoopingKind::KnotLooping);
  CHECK(looping_kind(g, std::nullopt, {end_at(g, "va", "k1"), end_at(g, "va", "k2")}) ==
        LoopingKind::Plain);
}

TEST_CASE("loop classes") {
  auto g = load("hopf_tunnel.sgc");
  auto cs = loop_classes(g, {{"a", {{"a", 1}}}, {"b", {{"b", 1}}}});
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].coords.size() == 2);
  CHECK_THROWS_AS(loop_classes(g, {{"broken", {{"t", 1}}}}), DomainError);
}

TEST_CASE("spatial code round trip") {
  for (const auto &g : {load("planar_theta.sgc"), load("hopf_tunnel.sgc"), load("trefoil_tunnel.sgc"),
                        family_torus_looped(4), family_odd_ringed(5, RingVariant::Meridian)})
    CHECK(parse_spatial_graph(format_spatial_graph(g)) == g);
}
