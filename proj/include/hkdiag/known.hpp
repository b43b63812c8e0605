#pragma once

#include "hkdiag/annulus.hpp"

#include <string>
#include <vector>

namespace hk {

// Table entries with a computed symmetry group, paired with the annulus
// diagram this library assigns them.
struct KnownHandlebodyKnot {
  std::string name;
  AnnulusDiagram diagram;
  Group sym_plus, sym;
  std::string diagram_source;
};

std::vector<KnownHandlebodyKnot> known_handlebody_knots();

} // namespace hk
