#pragma once

#include "hkdiag/homology.hpp"

#include <string>
#include <vector>

namespace hk {

// Finitely supported integer Laurent polynomial: coeffs[i] multiplies t^(low + i).
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(std::vector<Int> coeffs, int low = 0);
  static LaurentPoly constant(long c) { return LaurentPoly({Int(c)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int e) const;
  const std::vector<Int> &coeffs() const { return coeffs_; }

  // Shift so the lowest exponent is 0 and flip sign so the top coefficient is positive.
  LaurentPoly normalized() const;
  bool equal_up_to_units(const LaurentPoly &o) const { return normalized() == o.normalized(); }
  std::string str() const; // "t^2 - 3t + 1"

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

private:
  void trim();
  std::vector<Int> coeffs_;
  int low_ = 0;
};

// Exact quotient; throws DomainError when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly &a, const LaurentPoly &b);

// Determinant of a square matrix over Z[t, 1/t] by fraction-free elimination.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

} // namespace hk
