#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hk {

// Reduced fraction with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  // 1/n for some integer n
  bool is_integer_reciprocal() const { return num_ == 1 || num_ == -1; }

  Rational inverse() const;
  std::string str() const;
  static std::optional<Rational> parse(std::string_view s);

  friend bool operator==(const Rational &, const Rational &) = default;
  friend auto operator<=>(const Rational &a, const Rational &b) {
    return static_cast<__int128>(a.num_) * b.den_ <=>
           static_cast<__int128>(b.num_) * a.den_;
  }

private:
  std::int64_t num_ = 0, den_ = 1;
};

Rational operator*(const Rational &a, const Rational &b);

} // namespace hk
