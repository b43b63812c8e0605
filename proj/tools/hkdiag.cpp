#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hk::cli;

int main(int argc, char **argv) {
  CLI::App app{"hkdiag: characteristic and annulus diagrams of genus-2 handlebody-knots"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--mirror", g.mirror, "negative ring crossings and mirrored families");
  app.add_option("--jobs", g.jobs, "files processed concurrently")->check(CLI::PositiveNumber);

  auto *enumerate = app.add_subcommand("enumerate", "list the valid characteristic diagrams");

  std::vector<std::string> vfiles;
  auto *validate = app.add_subcommand("validate", "check diagram files against the constraints");
  validate->add_option("files", vfiles, "diagram files")->required();

  std::string file;
  auto *classify = app.add_subcommand("classify", "type and derived facts of a diagram");
  classify->add_option("file", file)->required();
  auto *symmetry = app.add_subcommand("symmetry", "symmetry-group bounds of an annulus diagram");
  symmetry->add_option("file", file)->required();

  LoopArgs la;
  auto *loop = app.add_subcommand("loop", "loop a spatial graph code at a vertex");
  loop->add_option("file", la.file)->required();
  loop->add_option("--vertex", la.vertex)->required();
  loop->add_option("--pair", la.pair, "two edge ends at the vertex, e.g. e1,e2.1")->required();
  auto *v2 = loop->add_option("--vertex2", la.vertex2, "second vertex for a double looping");
  loop->add_option("--pair2", la.pair2)->needs(v2);
  v2->needs(loop->get_option("--pair2"));
  loop->add_option("--assert", la.asserts, "fact key=value")->allow_extra_args(false);
  loop->add_option("-o,--output", la.output);

  FamilyArgs fa;
  auto *family = app.add_subcommand("family", "generate a parametric spatial graph code");
  family->require_subcommand(1);
  auto *torus = family->add_subcommand("torus-link", "(n,2)-torus link, optionally with tunnel");
  torus->add_option("--n", fa.n)->required();
  torus->add_flag("--tunnel", fa.tunnel);
  torus->add_flag("--looped", fa.looped, "loop the knot end and the tunnel at va");
  auto *ringed = family->add_subcommand("odd-ringed", "(n,2)-torus knot with ring and tunnel");
  ringed->add_option("--n", fa.n)->required();
  ringed->add_option("--variant", fa.variant)->check(CLI::IsMember({"axis", "meridian"}));
  auto *spine = family->add_subcommand("spine-5_2", "5_2 spine from HKDIAG_DATA");
  spine->add_flag("--looped", fa.looped);
  spine->add_flag("--double", fa.twice, "loop at both vertices");
  for (auto *s : {torus, ringed, spine}) s->add_option("-o,--output", fa.output);

  std::string components;
  auto *linking = app.add_subcommand("linking", "linking number of two components");
  linking->add_option("file", file, "code file, - for standard input")->default_val("-");
  linking->add_option("--components", components)->required();

  std::vector<std::string> asserts;
  auto *analyze = app.add_subcommand("analyze", "facts, class, homology and predictions");
  analyze->add_option("file", file)->required();
  analyze->add_option("--assert", asserts, "fact key=value")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  Outcome o;
  if (*enumerate) o = cmd_enumerate(g);
  else if (*validate) o = cmd_validate(g, vfiles);
  else if (*classify) o = cmd_classify(g, file);
  else if (*symmetry) o = cmd_symmetry(g, file);
  else if (*loop) o = cmd_loop(g, la);
  else if (*family) {
    fa.name = *torus ? "torus-link" : *ringed ? "odd-ringed" : "spine-5_2";
    o = cmd_family(g, fa);
  } else if (*linking) o = cmd_linking(g, file, components);
  else if (*analyze) o = cmd_analyze(g, file, asserts);

  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}
