#pragma once

#include "hkdiag/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace hk {

enum class SlopeShape { Reciprocal, ProductForm, Trivial };

// Boundary slope pair; r1, r2 are stored in the canonical order of the shape:
// Reciprocal(p,q) = (p/q, q/p), ProductForm(p,q) = (p/q, pq), Trivial = (0,0).
struct SlopePair {
  SlopeShape shape = SlopeShape::Trivial;
  std::int64_t p = 0, q = 1;
  Rational r1, r2;

  friend bool operator==(const SlopePair &, const SlopePair &) = default;
};

struct InvalidSlope {
  std::string reason;
};

// Unordered matching against the two admissible shapes. Pairs of the form
// (±1/q, ±q) fit both shapes; they are reported as Reciprocal.
std::variant<SlopePair, InvalidSlope> slope_pair_classify(const Rational &r1,
                                                         const Rational &r2);

std::string to_string(const SlopePair &sp);

} // namespace hk
