// One line per acceptance criterion; exit status is the number of failures.

#include "commands.hpp"
#include "hkdiag/annulus.hpp"
#include "hkdiag/facts.hpp"
#include "hkdiag/known.hpp"
#include "hkdiag/wirtinger.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

using namespace hk;

namespace {

int failures = 0;

void criterion(int n, const std::string &what, const std::function<std::string()> &run) {
  std::string why;
  try {
    why = run();
  } catch (const std::exception &e) {
    why = std::string("exception: ") + e.what();
  }
  if (!why.empty()) ++failures;
  std::printf("[%s] %2d %s%s\n", why.empty() ? "PASS" : "FAIL", n, what.c_str(),
              why.empty() ? "" : (" -- " + why).c_str());
}

std::string data(const std::string &name) { return std::string(HKDIAG_TEST_DATA) + "/" + name; }

std::string json_value(const std::string &doc, const std::string &key) {
  auto j = nlohmann::json::parse(doc);
  for (const auto &s : j["sections"])
    for (const auto &f : s["facts"])
      if (f["key"] == key) return f["value"];
  return "";
}

LaurentPoly poly(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.emplace_back(x);
  return LaurentPoly(v);
}

} // namespace

int main() {
  criterion(1, "enumeration yields the 13 classes of the type table in under 1 s", [] {
    const std::multiset<std::string> table = {
        "(1,1,0,hollow)", "(1,0,0,hollow)", "(1,0,0,solid)", "(2,1,0,hollow)", "(2,0,1,hollow)",
        "(2,0,0,hollow)", "(2,0,0,solid)",  "(3,0,3,hollow)", "(3,0,3,solid)",  "(3,0,1,hollow)",
        "(3,0,1,solid)",  "(3,0,0,hollow)", "(3,0,0,solid)"};
    auto t0 = std::chrono::steady_clock::now();
    auto r = enumerate_valid();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::multiset<std::string> got;
    for (const auto &d : r.classes) got.insert(to_string(classify_type(d)));
    if (got != table) return std::string("type multiset differs");
    if (s >= 1.0) return "took " + std::to_string(s) + " s";
    return std::string();
  });

  criterion(2, "dropping the bigon constraint adds exactly (2,0,1,solid)", [] {
    auto full = enumerate_valid().classes;
    auto mask = ConstraintMask::all().without(Constraint::C_vi);
    auto more = enumerate_valid(mask).classes;
    std::vector<std::string> extra;
    for (const auto &d : more) {
      bool seen = false;
      for (const auto &e : full) seen |= are_isomorphic(d, e);
      if (!seen) extra.push_back(to_string(classify_type(d, mask)));
    }
    if (more.size() != full.size() + 1 || extra != std::vector<std::string>{"(2,0,1,solid)"})
      return "got " + std::to_string(more.size()) + " classes, " + std::to_string(extra.size()) +
             " new";
    return std::string();
  });

  criterion(3, "label catalog: one diagram with h1, five with h2", [] {
    int h1 = 0, h2 = 0;
    for (const auto &e : label_catalog()) {
      bool a = false, b = false;
      for (const auto &l : e.diagram.labels) {
        a |= l->kind == LabelKind::H1;
        b |= l->kind == LabelKind::H2;
      }
      h1 += a;
      h2 += b;
    }
    if (h1 != 1 || h2 != 5) return "h1=" + std::to_string(h1) + " h2=" + std::to_string(h2);
    return std::string();
  });

  criterion(4, "classify and symmetry of the solid theta-shape", [] {
    cli::Global g;
    g.format = "json";
    auto c = cli::cmd_classify(g, data("fourone.hkd"));
    auto s = cli::cmd_symmetry(g, data("fourone.hkd"));
    if (c.code || s.code) return std::string("nonzero exit");
    if (json_value(c.out, "verdict") != "(3,0,3,solid); equivalent to 4_1")
      return "verdict '" + json_value(c.out, "verdict") + "'";
    if (json_value(s.out, "Sym+") != "Z2" || json_value(s.out, "Sym") != "Z2xZ2" ||
        json_value(s.out, "exact") != "true")
      return std::string("symmetry bounds differ");
    return std::string();
  });

  criterion(5, "known symmetry groups lie within the derived bounds", [] {
    for (const auto &k : known_handlebody_knots()) {
      auto o = symmetry_bounds(k.diagram);
      if (!o.derived || !admits(o.bound.sym_plus, k.sym_plus) || !admits(o.bound.sym, k.sym))
        return k.name + " outside its bounds";
    }
    return std::string();
  });

  criterion(6, "torus links T(2,n): lk = +-n/2, and lk != +-1 fails only at n = 2", [] {
    for (int n = 2; n <= 12; n += 2)
      for (bool mirror : {false, true}) {
        auto l = constituent_link(family_torus_link(n, true, mirror));
        int lk = linking_number(l, "a", "b"), brute = oracle::brute_lk(l, "a", "b");
        int want = mirror ? -n / 2 : n / 2;
        if (lk != want || brute != want)
          return "n=" + std::to_string(n) + " lk=" + std::to_string(lk) + " brute=" +
                 std::to_string(brute);
        if ((std::abs(lk) != 1) != (n != 2)) return "lk != +-1 test wrong at n=" + std::to_string(n);
      }
    return std::string();
  });

  criterion(7, "meridional pairs: 100 random |p| <= 50 give index |p|", [] {
    std::mt19937 rng(1729);
    std::uniform_int_distribution<long> pd(-50, 50), p1d(-20, 20);
    for (int k = 0; k < 100; ++k) {
      long p = pd(rng), p1 = p1d(rng);
      auto [a, b] = meridional_pair_predict(p, 1, p1);
      long d = std::abs(oracle::det2(a.coords[0].get_si(), a.coords[1].get_si(),
                                     b.coords[0].get_si(), b.coords[1].get_si()));
      auto i = subgroup_index({a, b});
      bool ok = p == 0 ? (i.infinite && d == 0) : (!i.infinite && i.value == std::abs(p) && d == std::abs(p));
      if (!ok) return "p=" + std::to_string(p) + " index " + to_string(i);
    }
    return std::string();
  });

  criterion(8, "1000 random Smith forms up to 6x6 match determinantal divisors and survive unimodular change", [] {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int k = 0; k < 1000; ++k) {
      auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -20, 20);
      auto f = smith_normal_form(m);
      if (!(f.U * m * f.V == f.D)) return std::string("U M V != D");
      auto du = determinant(f.U), dv = determinant(f.V);
      if (abs(du) != 1 || abs(dv) != 1) return std::string("transform not unimodular");
      auto want = oracle::determinantal_factors(m);
      if (f.rank != want.size()) return std::string("rank differs");
      for (std::size_t i = 0; i < f.D.rows(); ++i)
        for (std::size_t j = 0; j < f.D.cols(); ++j) {
          if (i == j && i < f.rank && f.D(i, i) != want[i]) return std::string("invariant factor differs");
          if (i == j && i >= f.rank && f.D(i, i) != 0) return std::string("nonzero beyond rank");
          if (i != j && f.D(i, j) != 0) return std::string("off-diagonal entry");
        }
      for (std::size_t i = 0; i + 1 < f.rank; ++i)
        if (f.D(i + 1, i + 1) % f.D(i, i) != 0) return std::string("divisibility chain broken");
      auto moved = oracle::random_unimodular(rng, m.rows()) * m * oracle::random_unimodular(rng, m.cols());
      if (!(present(moved).group == present(m).group)) return std::string("group changed under perturbation");
    }
    return std::string();
  });

  criterion(9, "Alexander polynomials of 3_1, 4_1, 5_2, 3_1#3_1 and the unknot", [] {
    auto tref = poly({1, -1, 1});
    struct Case {
      std::string name;
      SpatialGraphCode knot;
      LaurentPoly want;
    };
    std::vector<Case> cases = {
        {"3_1", closed_braid(2, {1, 1, 1}), tref},
        {"3_1 mirror", closed_braid(2, {-1, -1, -1}), tref},
        {"4_1", closed_braid(3, {1, -2, 1, -2}), poly({1, -3, 1})},
        {"5_2", closed_braid(3, {1, 1, 1, 2, -1, 2}), poly({2, -3, 2})},
        {"3_1#3_1", closed_braid(3, {1, 1, 1, 2, 2, 2}), tref * tref},
        {"unknot", closed_braid(3, {1, 2}), poly({1})},
    };
    for (const auto &c : cases) {
      auto got = alexander_polynomial(c.knot);
      if (!got.equal_up_to_units(c.want)) return c.name + " gave " + got.str();
    }
    return std::string();
  });

  criterion(10, "looping transition table", [] {
    using K = LoopingKind;
    std::set<std::tuple<std::string, std::string, std::string>> want = {
        {"tau1", "any", "h3"},          {"tau2", "any", "h4"},     {"tau3", "knot", "h4"},
        {"tau3", "tunnel", "h3"},       {"tau3", "tunnel", "h4"},  {"tau4", "any", "h4"},
        {"h1", "any", "h1"},            {"h2", "any", "h2"},       {"h3", "any", "h2"},
        {"h4", "any", "h2"}};
    auto kind = [](const std::optional<K> &k) -> std::string {
      if (!k) return "any";
      return *k == K::KnotLooping ? "knot" : *k == K::TunnelLooping ? "tunnel" : "plain";
    };
    std::set<std::tuple<std::string, std::string, std::string>> got;
    auto rows = transition_table();
    for (const auto &r : rows) got.insert({to_string(r.from), kind(r.kind), to_string(r.to)});
    if (rows.size() != 10 || got != want) return "table has " + std::to_string(rows.size()) + " rows";
    return std::string();
  });

  criterion(11, "5_2 spine: looping predicts single_loop(h1), double looping theta_shape(hollow)", [] {
    cli::Global g;
    cli::FamilyArgs once{"spine-5_2", 0, false, true, false, "axis", ""};
    cli::FamilyArgs twice{"spine-5_2", 0, false, false, true, "axis", ""};
    auto a = cli::cmd_family(g, once), b = cli::cmd_family(g, twice);
    if (a.code || b.code) return "family failed: " + a.err + b.err;
    auto pa = predicted_annulus(parse_spatial_graph(a.out));
    auto pb = predicted_annulus(parse_spatial_graph(b.out));
    if (pa.type != std::optional<std::string>("2-1") || pa.candidates.size() != 1 ||
        !are_isomorphic(pa.candidates[0], single_loop(EdgeLabel::h1())))
      return std::string("single looping prediction differs");
    if (pb.type != std::optional<std::string>("2-2") || pb.candidates.size() != 1 ||
        !are_isomorphic(pb.candidates[0], theta_shape(NodeKind::Hollow)))
      return "double looping gave " + std::to_string(pb.candidates.size()) + " candidates";
    return std::string();
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
