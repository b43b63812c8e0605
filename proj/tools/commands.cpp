#include "commands.hpp"

#include "hkdiag/annulus.hpp"
#include "hkdiag/diagram.hpp"
#include "hkdiag/errors.hpp"
#include "hkdiag/facts.hpp"
#include "hkdiag/known.hpp"
#include "hkdiag/report.hpp"
#include "hkdiag/spatial.hpp"
#include "hkdiag/wirtinger.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace hk::cli {

namespace {

template <class F> Outcome guarded(const std::string &subject, F &&f) {
  auto fail = [&](int code, const std::string &msg) {
    return Outcome{"", "hkdiag: " + (subject.empty() ? "" : subject + ":") + msg + "\n", code};
  };
  try {
    return f();
  } catch (const ParseError &e) {
    return fail(2, e.what());
  } catch (const StructuralError &e) {
    return fail(2, std::string(subject.empty() ? "" : " ") + "malformed input: " + e.what());
  } catch (const ContradictionError &e) {
    return fail(1, std::string(subject.empty() ? "" : " ") + e.what());
  } catch (const DomainError &e) {
    return fail(1, std::string(subject.empty() ? "" : " ") + e.what());
  } catch (const std::ios_base::failure &e) {
    return fail(2, std::string(subject.empty() ? "" : " ") + e.what());
  }
}

Outcome emit(const Global &g, const Report &r, int code = 0) {
  return {g.format == "json" ? render_json(r) : render_text(r), "", code};
}

std::pair<std::string, std::string> split_pair(const std::string &s, const std::string &what) {
  auto c = s.find(',');
  if (c == std::string::npos || c == 0 || c + 1 == s.size() || s.find(',', c + 1) != std::string::npos)
    throw DomainError(what + " must be two comma-separated ids, got '" + s + "'");
  return {s.substr(0, c), s.substr(c + 1)};
}

std::vector<std::pair<std::string, std::string>> parse_asserts(const std::vector<std::string> &as) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &a : as) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == a.size())
      throw DomainError("--assert needs key=value, got '" + a + "'");
    out.push_back({a.substr(0, eq), a.substr(eq + 1)});
  }
  return out;
}

std::string one_line(const CharDiagram &d) {
  std::string s;
  for (const auto &n : d.nodes) {
    s += (s.empty() ? "" : " ") + n.id + ":" + to_string(n.kind);
    if (n.genus) s += "/g" + std::to_string(*n.genus);
  }
  s += " |";
  for (const auto &e : d.edges) s += " " + e.a + "-" + e.b;
  return s;
}

std::string yes_no(const std::optional<bool> &b) {
  return b ? (*b ? "true" : "false") : "unknown";
}

Outcome write_code(const SpatialGraphCode &code, const std::string &output) {
  auto text = format_spatial_graph(code);
  if (parse_spatial_graph(text) != code) throw DomainError("internal: code does not round-trip");
  if (output.empty() || output == "-") return {text, "", 0};
  std::ofstream f(output);
  if (!f) throw std::ios_base::failure("cannot write '" + output + "'");
  f << text;
  return {"", "", 0};
}

SpatialGraphCode spine_5_2() {
  const char *env = std::getenv("HKDIAG_DATA");
  std::string path = env && *env ? env : HKDIAG_DEFAULT_DATA;
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read 5_2 spine data '" + path + "' (set HKDIAG_DATA)");
  std::stringstream ss;
  ss << f.rdbuf();
  auto g = parse_spatial_graph(ss.str());
  require_valid(g);
  return g;
}

FactSet facts_of(const SpatialGraphCode &g) {
  FactSet user;
  user.assert_all(g.assertions);
  return with_certificates(g, user);
}

// Loop g, recording the source class and facts in the result.
SpatialGraphCode loop_recorded(const SpatialGraphCode &g, const std::string &v,
                               const std::pair<std::string, std::string> &pair,
                               const std::string &w, const std::pair<std::string, std::string> &pair2,
                               bool mirror) {
  auto facts = facts_of(g);
  LoopOptions opt;
  opt.mirror = mirror;
  LoopResult r = w.empty() ? loop_at(g, v, {end_at(g, v, pair.first), end_at(g, v, pair.second)}, opt)
                           : double_loop(g, v, pair, w, pair2, opt);
  record_source(*r.code.looping, g, facts);
  r.code.assertions.clear();
  return r.code;
}

} // namespace

std::string read_input(const std::string &path) {
  std::stringstream ss;
  if (path == "-" || path.empty()) {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

Outcome cmd_enumerate(const Global &g) {
  return guarded("", [&] {
    auto res = enumerate_valid();
    Report r;
    r.subject = "characteristic diagrams: " + std::to_string(res.classes.size()) + " classes";
    auto &s = r.section("summary");
    s.add("classes", std::to_string(res.classes.size()));
    s.add("candidates inspected", std::to_string(res.candidates));
    for (const auto &d : res.classes) {
      auto t = classify_type(d);
      auto &sec = r.section(to_string(t));
      sec.add("type", to_string(t));
      sec.add("canonical", one_line(d));
      if (realization_unknown(t))
        sec.add("realization", "no handlebody-knot known", FactOrigin::PaperRule);
    }
    return emit(g, r);
  });
}

Outcome cmd_validate(const Global &g, const std::vector<std::string> &files) {
  std::vector<Outcome> results(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < files.size();) {
      results[i] = guarded(files[i], [&] {
        auto ad = parse_annulus_diagram(read_input(files[i]));
        Report r;
        r.subject = files[i];
        auto &s = r.section("constraints");
        auto vs = validate(ad.base);
        for (const auto &v : vs) s.add(to_string(v.which), v.detail, FactOrigin::PaperRule);
        bool labeled = std::any_of(ad.labels.begin(), ad.labels.end(),
                                   [](const auto &l) { return l.has_value(); });
        std::size_t bad = vs.size();
        if (vs.empty()) {
          s.add("status", "ok");
          if (labeled) {
            auto &ls = r.section("labels");
            auto lv = validate_labels(ad);
            for (const auto &v : lv) ls.add(to_string(v.rule), v.detail, FactOrigin::PaperRule);
            if (lv.empty()) ls.add("status", "ok");
            bad += lv.size();
          }
        }
        r.section("verdict").add("violations", std::to_string(bad));
        return emit(g, r, bad ? 1 : 0);
      });
    }
  };
  std::vector<std::thread> pool;
  int n = std::max(1, std::min<int>(g.jobs, static_cast<int>(files.size())));
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto &t : pool) t.join();
  Outcome all;
  for (const auto &o : results) {
    all.out += o.out;
    all.err += o.err;
    all.code = std::max(all.code, o.code);
  }
  return all;
}

namespace {

AnnulusDiagram load_checked(const std::string &file) {
  auto ad = parse_annulus_diagram(read_input(file));
  auto vs = validate(ad.base);
  if (!vs.empty())
    throw DomainError("diagram violates constraint " + to_string(vs.front().which) + ": " +
                      vs.front().detail);
  return ad;
}

bool fully_labeled(const AnnulusDiagram &ad) {
  return !ad.labels.empty() && std::all_of(ad.labels.begin(), ad.labels.end(),
                                           [](const auto &l) { return l.has_value(); }) &&
         ad.labels.size() == ad.base.edges.size();
}

void require_labels(const AnnulusDiagram &ad) {
  if (!fully_labeled(ad)) return;
  auto lv = validate_labels(ad);
  if (!lv.empty())
    throw DomainError("labels violate rule " + to_string(lv.front().rule) + ": " + lv.front().detail);
}

} // namespace

Outcome cmd_classify(const Global &g, const std::string &file) {
  return guarded(file, [&] {
    auto ad = load_checked(file);
    require_labels(ad);
    auto t = classify_type(ad.base);
    Report r;
    r.subject = file;
    auto &s = r.section("classification");
    s.add("type", to_string(t));
    if (fully_labeled(ad)) {
      s.add("labels", summary(ad));
      bool four = is_fourone(ad);
      s.add("verdict", to_string(t) + (four ? "; equivalent to 4_1" : ""),
            four ? FactOrigin::PaperRule : FactOrigin::Computed);
      auto &f = r.section("derived facts");
      for (const auto &d : derived_facts(ad)) f.add("fact", d.text, d.origin);
    } else {
      s.add("verdict", to_string(t));
      if (realization_unknown(t))
        s.add("realization", "no handlebody-knot known", FactOrigin::PaperRule);
    }
    return emit(g, r);
  });
}

Outcome cmd_symmetry(const Global &g, const std::string &file) {
  return guarded(file, [&] {
    auto ad = load_checked(file);
    if (!fully_labeled(ad)) throw DomainError("symmetry bounds need every edge labeled");
    require_labels(ad);
    auto o = symmetry_bounds(ad);
    Report r;
    r.subject = file;
    auto &s = r.section("symmetry");
    s.add("labels", summary(ad));
    if (o.derived) {
      s.add("Sym+", to_string(o.bound.sym_plus), FactOrigin::PaperRule);
      s.add("Sym", to_string(o.bound.sym), FactOrigin::PaperRule);
      s.add("exact", o.bound.exact ? "true" : "false", FactOrigin::PaperRule);
    }
    s.add("basis", o.basis, o.derived ? FactOrigin::PaperRule : FactOrigin::Computed);
    if (is_fourone(ad)) s.add("verdict", "equivalent to 4_1", FactOrigin::PaperRule);
    for (const auto &k : known_handlebody_knots()) {
      if (!are_isomorphic(k.diagram, ad)) continue;
      bool ok = !o.derived || (admits(o.bound.sym_plus, k.sym_plus) && admits(o.bound.sym, k.sym));
      r.section("known").add(k.name, "Sym+=" + to_string(k.sym_plus) + " Sym=" + to_string(k.sym) +
                                         (ok ? " within bounds" : " OUTSIDE bounds"),
                             FactOrigin::Asserted);
    }
    return emit(g, r);
  });
}

Outcome cmd_loop(const Global &g, const LoopArgs &a) {
  return guarded(a.file, [&] {
    auto code = parse_spatial_graph(read_input(a.file));
    require_valid(code);
    for (const auto &kv : parse_asserts(a.asserts)) code.assertions.push_back(kv);
    auto pair = split_pair(a.pair, "--pair");
    std::pair<std::string, std::string> pair2;
    if (!a.vertex2.empty()) pair2 = split_pair(a.pair2, "--pair2");
    return write_code(loop_recorded(code, a.vertex, pair, a.vertex2, pair2, g.mirror), a.output);
  });
}

Outcome cmd_family(const Global &g, const FamilyArgs &a) {
  return guarded("", [&] {
    SpatialGraphCode code;
    if (a.name == "torus-link") {
      if (a.looped) {
        code = family_torus_link(a.n, true, g.mirror);
        auto v = a.n % 2 == 0 ? std::make_pair(std::string("a"), std::string("t"))
                              : std::make_pair(std::string("k2"), std::string("t"));
        code = loop_recorded(code, "va", v, "", {}, g.mirror);
      } else {
        code = family_torus_link(a.n, a.tunnel, g.mirror);
      }
    } else if (a.name == "odd-ringed") {
      RingVariant v;
      if (a.variant == "axis") v = RingVariant::Axis;
      else if (a.variant == "meridian") v = RingVariant::Meridian;
      else throw DomainError("--variant must be axis or meridian");
      code = family_odd_ringed(a.n, v, g.mirror);
    } else if (a.name == "spine-5_2") {
      code = spine_5_2();
      if (a.twice) code = loop_recorded(code, "va", {"k1", "k2"}, "vb", {"k1", "t"}, g.mirror);
      else if (a.looped) code = loop_recorded(code, "va", {"k1", "t"}, "", {}, g.mirror);
    } else {
      throw DomainError("unknown family '" + a.name + "'");
    }
    return write_code(code, a.output);
  });
}

Outcome cmd_linking(const Global &g, const std::string &file, const std::string &components) {
  return guarded(file, [&] {
    auto code = parse_spatial_graph(read_input(file));
    require_valid(code);
    auto [a, b] = split_pair(components, "--components");
    if (code.shape == GraphShape::Theta) throw DomainError("a theta graph has no link components");
    auto link = constituent_link(code);
    int lk = linking_number(link, a, b);
    if (g.format != "json") return Outcome{std::to_string(lk) + "\n", "", 0};
    Report r;
    r.subject = file;
    r.section("linking").add("lk(" + a + "," + b + ")", std::to_string(lk));
    return emit(g, r);
  });
}

Outcome cmd_analyze(const Global &g, const std::string &file, const std::vector<std::string> &asserts) {
  return guarded(file, [&] {
    auto code = parse_spatial_graph(read_input(file));
    require_valid(code);
    FactSet user;
    user.assert_all(code.assertions);
    user.assert_all(parse_asserts(asserts));
    auto facts = with_certificates(code, user);

    Report r;
    r.subject = file;
    auto &c = r.section("code");
    c.add("shape", to_string(code.shape));
    c.add("vertices", std::to_string(code.vertices.size()));
    c.add("edges", std::to_string(code.edges.size()));
    c.add("crossings", std::to_string(code.crossing_count()));

    auto &f = r.section("facts");
    for (const auto &[k, fact] : facts.booleans())
      f.add(k, std::string(fact.value ? "true" : "false") +
                   (fact.oracle.empty() ? "" : " [" + fact.oracle + "]"),
            fact.source == FactSource::User ? FactOrigin::Asserted : FactOrigin::Computed);
    if (facts.tunnel()) f.add("tunnel", *facts.tunnel(), FactOrigin::Asserted);
    if (facts.knotting_arc()) f.add("knotting_arc", *facts.knotting_arc(), FactOrigin::Asserted);

    auto &cons = r.section("constituents");
    if (code.shape == GraphShape::Theta) {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
          auto k = constituent_knot(code, code.edges[i].id, code.edges[j].id);
          cons.add(k.edges[0].id, std::to_string(k.crossing_count()) + " crossings, alexander " +
                                      alexander_polynomial(k).str());
        }
    } else {
      auto link = constituent_link(code);
      for (const auto &e : link.edges) {
        auto k = component_knot(link, e.id);
        cons.add(e.id, std::to_string(k.crossing_count()) + " crossings, alexander " +
                           alexander_polynomial(k).str());
      }
      for (std::size_t i = 0; i < link.edges.size(); ++i)
        for (std::size_t j = i + 1; j < link.edges.size(); ++j)
          cons.add("lk(" + link.edges[i].id + "," + link.edges[j].id + ")",
                   std::to_string(linking_number(link, link.edges[i].id, link.edges[j].id)));
    }

    auto h = h1_complement(code);
    auto &hs = r.section("homology");
    hs.add("H1(complement)", to_string(h.group));
    for (const auto &e : code.edges) hs.add("meridian " + e.id, to_string(h.meridian(e.id)));

    if (code.shape != GraphShape::Link) {
      auto cls = classify_atoroidal(code, facts);
      auto &cs = r.section("classification");
      cs.add("class", to_string(cls), FactOrigin::PaperRule);
      if (!cls.reason.empty()) cs.add("reason", cls.reason);
      for (const auto &n : cls.needed) cs.add("needs", n);
      if (cls.variant != GraphClass::Variant::Unclassified) {
        auto &ts = r.section("looping transitions");
        std::vector<std::pair<std::string, LoopingKind>> kinds = {{"any looping", LoopingKind::Plain}};
        if (cls == GraphClass::theta(3))
          kinds = {{"knot looping", LoopingKind::KnotLooping},
                   {"tunnel looping", LoopingKind::TunnelLooping}};
        for (const auto &[name, kind] : kinds) {
          auto t = looping_transition(cls, kind);
          std::string out;
          for (const auto &o : t.outcomes) out += (out.empty() ? "" : " or ") + to_string(o);
          if (!t.note.empty()) out += " (" + t.note + ")";
          ts.add(name, out, FactOrigin::PaperRule);
        }
      }
    }

    if (code.looping) {
      const auto &rec = *code.looping;
      auto p = predicted_annulus(code);
      auto &ps = r.section("predicted annulus");
      ps.add("looping", std::to_string(rec.count) + "x from " + to_string(rec.source) + ", kind " +
                            to_string(rec.kind), FactOrigin::Asserted);
      if (p.source_class) ps.add("source class", to_string(*p.source_class), FactOrigin::PaperRule);
      ps.add("type", p.type ? *p.type : "unknown", FactOrigin::PaperRule);
      if (p.count > 0) ps.add("count", std::to_string(p.count), FactOrigin::PaperRule);
      ps.add("unique", p.unique ? "true" : "false", FactOrigin::PaperRule);
      ps.add("unknotting", yes_no(p.unknotting), FactOrigin::PaperRule);
      ps.add("irreducible+atoroidal", yes_no(p.irreducible_atoroidal), FactOrigin::PaperRule);
      for (const auto &d : p.candidates) ps.add("annulus diagram", summary(d), FactOrigin::PaperRule);
      for (const auto &n : p.notes) ps.add("note", n, FactOrigin::PaperRule);
    }
    return emit(g, r);
  });
}

} // namespace hk::cli
