#pragma once

#include "hkdiag/homology.hpp"
#include "hkdiag/laurent.hpp"
#include "hkdiag/spatial.hpp"

#include <map>
#include <string>
#include <vector>

namespace hk {

// Abelianized Wirtinger presentation: one generator per arc, arcs broken at
// under-passes.
struct ComplementH1 {
  AbelianGroup group;
  Presentation presentation;
  std::size_t arc_count = 0;
  std::map<std::string, std::vector<std::size_t>> arcs; // edge -> arcs in traversal order

  LoopClass of_arcs(const std::vector<Int> &x) const;
  LoopClass meridian(const std::string &edge) const; // meridian of the edge's first arc
};

ComplementH1 h1_complement(const SpatialGraphCode &g);

// Closed walk along edges; dir +1 follows the edge orientation. The class is
// that of the blackboard pushoff.
struct MarkedLoop {
  std::string name;
  std::vector<std::pair<std::string, int>> walk;
};

std::vector<LoopClass> loop_classes(const SpatialGraphCode &g, const std::vector<MarkedLoop> &loops);

LaurentPoly alexander_polynomial(const SpatialGraphCode &knot);

} // namespace hk
