#include <doctest.h>

#include "hkdiag/annulus.hpp"
#include "hkdiag/errors.hpp"
#include "hkdiag/spatial.hpp"

#include <fstream>
#include <sstream>

using namespace hk;

namespace {

std::string slurp(const std::string &name) {
  std::ifstream in(std::string(HKDIAG_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F> std::pair<std::size_t, std::size_t> where(F f) {
  try {
    f();
  } catch (const ParseError &e) {
    return {e.line, e.column};
  }
  return {0, 0};
}

} // namespace

TEST_CASE("diagram text and json round trip") {
  for (const auto &d : enumerate_valid().classes) {
    CHECK(parse_diagram(format_diagram(d)) == d);
    CHECK(parse_diagram(format_diagram_json(d)) == d);
  }
}

TEST_CASE("annulus diagram files") {
  auto four = parse_annulus_diagram(slurp("fourone.hkd"));
  CHECK(are_isomorphic(four, theta_shape(NodeKind::Solid)));
  auto h1 = parse_annulus_diagram(slurp("h1_extra_edge.hkd"));
  CHECK(h1.labels.size() == 2);
  CHECK(parse_annulus_diagram(slurp("single_h2.hkd")) == single_loop(EdgeLabel::h2()));
  CHECK(where([] { parse_annulus_diagram(slurp("truncated.hkd")); }).first == 2);
}

TEST_CASE("annulus parse errors carry positions") {
  CHECK(where([] { parse_annulus_diagram("node o hollow genus=2\nedge o o label=h9\n"); }).first == 2);
  CHECK(where([] { parse_annulus_diagram("node o wobbly\n"); }).first == 1);
  CHECK(where([] { parse_annulus_diagram("{\"nodes\": ["); }).first >= 1);
  CHECK_THROWS_AS(parse_annulus_diagram("node o hollow genus=x\n"), ParseError);
}

TEST_CASE("spatial parse errors carry positions") {
  CHECK(where([] { parse_spatial_graph(slurp("truncated.sgc")); }) == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(where([] { parse_spatial_graph("graph blob\n"); }).first == 1);
  CHECK(where([] { parse_spatial_graph("graph link\nedge a closed\npass a x1 sideways sign=+\n"); }).first == 3);
  CHECK(where([] { parse_spatial_graph("graph link\nedge a closed\npass a x1 over sign=*\n"); }).first == 3);
  CHECK_THROWS_AS(parse_spatial_graph("graph theta\nvertex v ends a.2\n"), ParseError);
}

TEST_CASE("spatial files keep assertions and looping records") {
  auto g = parse_spatial_graph(slurp("trefoil_tunnel.sgc"));
  REQUIRE(g.assertions.size() == 1);
  CHECK(g.assertions[0] == std::pair<std::string, std::string>{"tunnel", "t"});

  auto h = family_torus_looped(6);
  REQUIRE(h.looping);
  auto text = format_spatial_graph(h);
  CHECK(text.find("looped 1 from") != std::string::npos);
  auto back = parse_spatial_graph(text);
  CHECK(back == h);
  CHECK(back.looping->pair == h.looping->pair);
}

TEST_CASE("comments and blank lines are ignored") {
  auto a = parse_spatial_graph("# c\n\ngraph link\n  edge a closed   # inline\n");
  CHECK(a.edges.size() == 1);
  CHECK(a.edges[0].closed);
}
