#include <doctest.h>

#include "hkdiag/diagram.hpp"
#include "hkdiag/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace hk;

namespace {

CharDiagram loop_hollow() { return {{{"o", NodeKind::Hollow, 2}}, {{"o", "o"}}}; }

CharDiagram triple(NodeKind sq) {
  return {{{"o", sq, 2}, {"s", NodeKind::Solid, std::nullopt}}, {{"o", "s"}, {"o", "s"}, {"o", "s"}}};
}

bool has(const std::vector<ConstraintViolation> &vs, Constraint c) {
  return std::any_of(vs.begin(), vs.end(), [&](const auto &v) { return v.which == c; });
}

const std::set<std::string> kTable = {
    "(1,1,0,hollow)", "(1,0,0,hollow)", "(1,0,0,solid)", "(2,1,0,hollow)", "(2,0,1,hollow)",
    "(2,0,0,hollow)", "(2,0,0,solid)",  "(3,0,3,hollow)", "(3,0,3,solid)",  "(3,0,1,hollow)",
    "(3,0,1,solid)",  "(3,0,0,hollow)", "(3,0,0,solid)"};

} // namespace

TEST_CASE("validate: table examples") {
  CHECK(validate(loop_hollow()).empty());

  CharDiagram bigon{{{"o", NodeKind::Solid, 2}, {"s", NodeKind::Solid, std::nullopt}},
                    {{"o", "s"}, {"o", "s"}}};
  auto vs = validate(bigon);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].which == Constraint::C_vi);

  CharDiagram bare{{{"o", NodeKind::Hollow, 2}}, {}};
  CHECK(has(validate(bare), Constraint::C_cyl));
}

TEST_CASE("validate: each constraint fires") {
  CharDiagram two_labels{{{"o", NodeKind::Hollow, 2}, {"p", NodeKind::Solid, 2}}, {{"o", "p"}}};
  CHECK(has(validate(two_labels), Constraint::C_i));
  CharDiagram genus3{{{"o", NodeKind::Hollow, 3}}, {{"o", "o"}}};
  CHECK(has(validate(genus3), Constraint::C_i));
  CharDiagram hollow_plain{{{"o", NodeKind::Hollow, 2}, {"h", NodeKind::Hollow, std::nullopt}},
                           {{"o", "h"}}};
  CHECK(has(validate(hollow_plain), Constraint::C_ii));
  CharDiagram solid_loop{{{"o", NodeKind::Solid, 2}}, {{"o", "o"}}};
  CHECK(has(validate(solid_loop), Constraint::C_iii));
  CharDiagram far{{{"o", NodeKind::Hollow, 2}, {"a", NodeKind::Solid, std::nullopt},
                   {"b", NodeKind::Solid, std::nullopt}},
                  {{"o", "a"}, {"a", "b"}}};
  CHECK(has(validate(far), Constraint::C_iv));
  CharDiagram deg4{{{"o", NodeKind::Hollow, 2}}, {{"o", "o"}, {"o", "o"}}};
  CHECK(has(validate(deg4), Constraint::C_vii));
}

TEST_CASE("structural errors are not constraint violations") {
  CharDiagram dangling{{{"o", NodeKind::Hollow, 2}}, {{"o", "x"}}};
  CHECK_THROWS_AS(validate(dangling), StructuralError);
  CharDiagram split{{{"o", NodeKind::Hollow, 2}, {"s", NodeKind::Solid, std::nullopt}}, {{"o", "o"}}};
  CHECK_THROWS_AS(validate(split), StructuralError);
}

TEST_CASE("classify_type") {
  CHECK(to_string(classify_type(triple(NodeKind::Hollow))) == "(3,0,3,hollow)");
  CharDiagram le{{{"o", NodeKind::Hollow, 2}, {"s", NodeKind::Solid, std::nullopt}},
                 {{"o", "o"}, {"o", "s"}}};
  CHECK(to_string(classify_type(le)) == "(2,1,0,hollow)");
  CharDiagram one{{{"o", NodeKind::Solid, 2}, {"s", NodeKind::Solid, std::nullopt}}, {{"o", "s"}}};
  CHECK(to_string(classify_type(one)) == "(1,0,0,solid)");
  CharDiagram bare{{{"o", NodeKind::Hollow, 2}}, {}};
  CHECK_THROWS_AS(classify_type(bare), DomainError);
}

TEST_CASE("bundle base follows the degree of a solid labeled node") {
  CHECK(bundle_base(triple(NodeKind::Solid)) == BundleBase::PairOfPants);
  CHECK_FALSE(bundle_base(triple(NodeKind::Hollow)));
  CharDiagram one{{{"o", NodeKind::Solid, 2}, {"s", NodeKind::Solid, std::nullopt}}, {{"o", "s"}}};
  CHECK(bundle_base(one) == BundleBase::KleinBottle);
}

TEST_CASE("isomorphism") {
  auto d = triple(NodeKind::Hollow);
  CharDiagram renamed{{{"zz", NodeKind::Solid, std::nullopt}, {"aa", NodeKind::Hollow, 2}},
                      {{"zz", "aa"}, {"aa", "zz"}, {"zz", "aa"}}};
  CHECK(are_isomorphic(d, renamed));
  CHECK(canonical_form(d) == canonical_form(renamed));
  CHECK_FALSE(are_isomorphic(triple(NodeKind::Hollow), triple(NodeKind::Solid)));

  CharDiagram two_leaves{{{"o", NodeKind::Hollow, 2}, {"a", NodeKind::Solid, std::nullopt},
                          {"b", NodeKind::Solid, std::nullopt}},
                         {{"o", "a"}, {"o", "b"}}};
  CharDiagram bigon{{{"o", NodeKind::Hollow, 2}, {"a", NodeKind::Solid, std::nullopt}},
                    {{"o", "a"}, {"o", "a"}}};
  CHECK(to_string(classify_type(two_leaves)) == "(2,0,0,hollow)");
  CHECK(to_string(classify_type(bigon)) == "(2,0,1,hollow)");
  CHECK_FALSE(are_isomorphic(two_leaves, bigon));
  CHECK(canonical_form(loop_hollow()) !=
        canonical_form(CharDiagram{{{"o", NodeKind::Hollow, 2}, {"s", NodeKind::Solid, std::nullopt}},
                                   {{"o", "s"}}}));
}

TEST_CASE("canonical_relabel is idempotent and isomorphic") {
  for (const auto &d : enumerate_valid().classes) {
    auto c = canonical_relabel(d);
    CHECK(are_isomorphic(c, d));
    CHECK(canonical_relabel(c) == c);
  }
}

TEST_CASE("enumeration reproduces the table") {
  auto r = enumerate_valid();
  REQUIRE(r.classes.size() == 13);
  std::multiset<std::string> types;
  std::size_t solid = 0;
  for (const auto &d : r.classes) {
    auto t = classify_type(d);
    types.insert(to_string(t));
    solid += t.square == NodeKind::Solid;
  }
  CHECK(std::set<std::string>(types.begin(), types.end()) == kTable);
  CHECK(types.size() == 13);
  CHECK(solid == 5);

  for (std::size_t i = 0; i < r.classes.size(); ++i)
    for (std::size_t j = i + 1; j < r.classes.size(); ++j)
      CHECK_FALSE(are_isomorphic(r.classes[i], r.classes[j]));
  CHECK_FALSE(kTable.count("(2,0,1,solid)"));
}

TEST_CASE("enumeration completeness against a relabeled sweep") {
  // every valid member of a permuted copy of the search space lands on one class
  auto r = enumerate_valid();
  std::map<Encoding, int> hits;
  for (const auto &d : r.classes) hits[canonical_form(d)] = 0;
  for (const auto &d : r.classes) {
    CharDiagram p = d;
    std::reverse(p.nodes.begin(), p.nodes.end());
    std::reverse(p.edges.begin(), p.edges.end());
    for (auto &e : p.edges) std::swap(e.a, e.b);
    CHECK(validate(p).empty());
    CHECK(classify_type(p) == classify_type(d));
    ++hits.at(canonical_form(p));
  }
  for (const auto &[enc, n] : hits) CHECK(n == 1);
}

TEST_CASE("realization status") {
  CHECK(realization_unknown({2, 0, 0, NodeKind::Solid}));
  CHECK(realization_unknown({3, 0, 1, NodeKind::Hollow}));
  CHECK(realization_unknown({3, 0, 0, NodeKind::Solid}));
  CHECK_FALSE(realization_unknown({3, 0, 3, NodeKind::Solid}));
}
