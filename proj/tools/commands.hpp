#pragma once

#include <string>
#include <vector>

namespace hk::cli {

struct Global {
  std::string format = "text";
  bool mirror = false;
  int jobs = 1;
};

struct Outcome {
  std::string out, err;
  int code = 0;
};

// Reads a path, or standard input for "-".
std::string read_input(const std::string &path);

Outcome cmd_enumerate(const Global &g);
Outcome cmd_validate(const Global &g, const std::vector<std::string> &files);
Outcome cmd_classify(const Global &g, const std::string &file);
Outcome cmd_symmetry(const Global &g, const std::string &file);

struct LoopArgs {
  std::string file, vertex, pair, vertex2, pair2, output;
  std::vector<std::string> asserts;
};
Outcome cmd_loop(const Global &g, const LoopArgs &a);

struct FamilyArgs {
  std::string name; // torus-link, odd-ringed, spine-5_2
  int n = 0;
  bool tunnel = false, looped = false, twice = false;
  std::string variant = "axis";
  std::string output;
};
Outcome cmd_family(const Global &g, const FamilyArgs &a);

Outcome cmd_linking(const Global &g, const std::string &file, const std::string &components);
Outcome cmd_analyze(const Global &g, const std::string &file, const std::vector<std::string> &asserts);

} // namespace hk::cli
