#include "hkdiag/rational.hpp"
#include "hkdiag/errors.hpp"

#include <charconv>
#include <numeric>

namespace hk {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) n = -n, d = -d;
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::inverse() const { return Rational(den_, num_); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  auto part = [](std::string_view t) -> std::optional<std::int64_t> {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty())
      return std::nullopt;
    if (v > (std::int64_t(1) << 40) || v < -(std::int64_t(1) << 40))
      return std::nullopt;
    return v;
  };
  auto n = part(s.substr(0, slash));
  if (!n) return std::nullopt;
  std::int64_t d = 1;
  if (slash != std::string_view::npos) {
    auto dd = part(s.substr(slash + 1));
    if (!dd || *dd == 0) return std::nullopt;
    d = *dd;
  }
  return Rational(*n, d);
}

Rational operator*(const Rational &a, const Rational &b) {
  std::int64_t g1 = std::gcd(a.num(), b.den()), g2 = std::gcd(b.num(), a.den());
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((a.num() / g1) * (b.num() / g2),
                  (a.den() / g2) * (b.den() / g1));
}

} // namespace hk
