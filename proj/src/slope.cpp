#include "hkdiag/slope.hpp"

#include <cstdlib>
#include <optional>

namespace hk {

namespace {

std::optional<SlopePair> as_reciprocal(const Rational &a, const Rational &b) {
  if (a.is_zero() || b.is_zero() || a.inverse() != b) return std::nullopt;
  // representative with |p| <= |q|, ties broken by the larger fraction first
  Rational x = a, y = b;
  if (std::llabs(x.num()) > std::llabs(x.den()) ||
      (std::llabs(x.num()) == std::llabs(x.den()) && x < y))
    std::swap(x, y);
  return SlopePair{SlopeShape::Reciprocal, x.num(), x.den(), x, y};
}

std::optional<SlopePair> as_product(const Rational &a, const Rational &b) {
  if (a.is_zero() || !b.is_integer()) return std::nullopt;
  if (Rational(a.num()) * Rational(a.den()) != b) return std::nullopt;
  return SlopePair{SlopeShape::ProductForm, a.num(), a.den(), a, b};
}

} // namespace

std::variant<SlopePair, InvalidSlope> slope_pair_classify(const Rational &r1,
                                                         const Rational &r2) {
  if (r1.is_zero() && r2.is_zero())
    return SlopePair{SlopeShape::Trivial, 0, 1, Rational(0), Rational(0)};
  if (auto s = as_reciprocal(r1, r2)) return *s;
  if (auto s = as_product(r1, r2)) return *s;
  if (auto s = as_product(r2, r1)) return *s;
  if (r1.is_zero() || r2.is_zero())
    return InvalidSlope{"exactly one slope is 0"};
  return InvalidSlope{"(" + r1.str() + ", " + r2.str() +
                      ") is neither (p/q, q/p) nor (p/q, pq)"};
}

std::string to_string(const SlopePair &sp) {
  return "(" + sp.r1.str() + "," + sp.r2.str() + ")";
}

} // namespace hk
