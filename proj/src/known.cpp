#include "hkdiag/known.hpp"

namespace hk {

std::vector<KnownHandlebodyKnot> known_handlebody_knots() {
  return {
      {"4_1", theta_shape(NodeKind::Solid), Group::Z2, Group::Z2xZ2,
       "solid theta-shape characterization"},
      {"5_1", single_loop(EdgeLabel::h2()), Group::Trivial, Group::Trivial,
       "assumed: same exterior as 6_4, different label"},
      {"6_1", single_loop(EdgeLabel::h2()), Group::Trivial, Group::Trivial,
       "assumed: a unique type 2-2 annulus"},
      {"6_11", loop_and_edge(EdgeLabel::h2(), EdgeLabel::k1()), Group::Trivial, Group::Trivial,
       "assumed: group obtained from the type-2-2 lookup, which forces an extra type 3-2 annulus"},
      {"6_4", single_loop(EdgeLabel::h1()), Group::Z2, Group::Z2,
       "assumed: a type 2-1 annulus"},
  };
}

} // namespace hk
