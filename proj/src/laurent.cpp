#include "hkdiag/laurent.hpp"
#include "hkdiag/errors.hpp"

namespace hk {

LaurentPoly::LaurentPoly(std::vector<Int> coeffs, int low) : coeffs_(std::move(coeffs)), low_(low) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  low_ = coeffs_.empty() ? 0 : low_ + static_cast<int>(lead);
}

Int LaurentPoly::coeff(int e) const {
  if (e < low_ || e > high()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::normalized() const {
  LaurentPoly r = *this;
  r.low_ = 0;
  if (!r.coeffs_.empty() && r.coeffs_.back() < 0)
    for (auto &c : r.coeffs_) c = -c;
  return r;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int e = high(); e >= low_; --e) {
    Int c = coeff(e);
    if (c == 0) continue;
    bool neg = c < 0;
    Int a = abs(c);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    std::string mono = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
    if (a != 1 || mono.empty()) s += a.get_str();
    s += mono;
  }
  return s;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(std::move(c), a.low_ + b.low_);
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
  std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
  return LaurentPoly(std::move(c), lo);
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
  return a + b * LaurentPoly::constant(-1);
}

LaurentPoly exact_divide(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  std::vector<Int> rem = a.coeffs();
  const auto &d = b.coeffs();
  if (rem.size() < d.size()) throw DomainError("inexact polynomial division");
  std::vector<Int> q(rem.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int &top = rem[k + d.size() - 1];
    if (top % d.back() != 0) throw DomainError("inexact polynomial division");
    q[k] = top / d.back();
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q[k] * d[i];
  }
  for (const auto &r : rem)
    if (r != 0) throw DomainError("inexact polynomial division");
  return LaurentPoly(std::move(q), a.low() - b.low());
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  for (const auto &r : m)
    if (r.size() != n) throw DomainError("determinant of a non-square matrix");
  LaurentPoly prev = LaurentPoly::constant(1);
  bool flip = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      flip = !flip;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  auto d = m[n - 1][n - 1];
  return flip ? d * LaurentPoly::constant(-1) : d;
}

} // namespace hk
