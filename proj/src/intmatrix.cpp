#include "hkdiag/homology.hpp"
#include "hkdiag/errors.hpp"

#include <numeric>

namespace hk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto &r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int &k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int &k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Int determinant(const IntMatrix &m0) {
  if (m0.rows() != m0.cols()) throw DomainError("determinant of a non-square matrix");
  std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix &m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

SmithForm smith_normal_form(const IntMatrix &m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  auto &D = f.D;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t t = 0;
  for (; t < R && t < C; ++t) {
    for (;;) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (D(i, j) != 0 && (pi == R || abs(D(i, j)) < abs(D(pi, pj)))) pi = i, pj = j;
      if (pi == R) {
        for (std::size_t i = 0; i < t; ++i)
          if (D(i, i) < 0) D.negate_row(i), f.U.negate_row(i);
        f.rank = t;
        return f;
      }
      D.swap_rows(t, pi), f.U.swap_rows(t, pi);
      D.swap_cols(t, pj), f.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row(i, t, -q), f.U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col(j, t, -q), f.V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == R) break;
      D.add_row(t, bad, 1), f.U.add_row(t, bad, 1);
    }
    if (D(t, t) < 0) D.negate_row(t), f.U.negate_row(t);
  }
  f.rank = t;
  return f;
}

std::string to_string(const AbelianGroup &g) {
  std::string s;
  for (const auto &d : g.invariant_factors) s += (s.empty() ? "Z/" : " + Z/") + d.get_str();
  if (g.free_rank > 0) {
    if (!s.empty()) s += " + ";
    s += g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
  }
  return s.empty() ? "0" : s;
}

Presentation present(const IntMatrix &relations) {
  auto f = smith_normal_form(relations);
  Presentation p;
  p.V = f.V;
  p.rank = f.rank;
  p.generators = relations.cols();
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.D(i, i) != 1) p.group.invariant_factors.push_back(f.D(i, i));
  p.group.free_rank = relations.cols() - f.rank;
  return p;
}

std::vector<Int> Presentation::free_coordinates(const std::vector<Int> &x) const {
  if (x.size() != generators) throw DomainError("generator vector has the wrong length");
  std::vector<Int> out;
  for (std::size_t c = rank; c < generators; ++c) {
    Int s = 0;
    for (std::size_t j = 0; j < generators; ++j) s += x[j] * V(j, c);
    out.push_back(s);
  }
  return out;
}

LoopClass make_class(std::initializer_list<long> c) {
  LoopClass l;
  for (long v : c) l.coords.emplace_back(v);
  return l;
}

std::string to_string(const LoopClass &c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.coords.size(); ++i) s += (i ? "," : "") + c.coords[i].get_str();
  return s + ")";
}

std::string to_string(const SubgroupIndex &i) {
  return i.infinite ? "infinite" : i.value.get_str();
}

SubgroupIndex subgroup_index(const std::vector<LoopClass> &classes) {
  if (classes.empty()) throw DomainError("subgroup_index of an empty family");
  std::size_t n = classes.front().coords.size();
  for (const auto &c : classes)
    if (c.coords.size() != n) throw DomainError("rank mismatch among loop classes");
  if (classes.size() < n) return {true, 0};
  IntMatrix m(classes.size(), n);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = classes[i].coords[j];
  if (classes.size() == n) {
    Int d = abs(determinant(m));
    return d == 0 ? SubgroupIndex{true, 0} : SubgroupIndex{false, d};
  }
  auto f = smith_normal_form(m);
  if (f.rank < n) return {true, 0};
  Int idx = 1;
  for (std::size_t i = 0; i < n; ++i) idx *= f.D(i, i);
  return {false, idx};
}

std::pair<LoopClass, LoopClass> meridional_pair_predict(std::int64_t p, std::int64_t q,
                                                        std::int64_t p1, bool mirror) {
  if (q == 0) throw DomainError("q must be nonzero");
  if (std::gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  long s = mirror ? -1 : 1;
  LoopClass plus = make_class({s * p1, s * (p - p1)});
  LoopClass minus = make_class({s * (p1 - 1), s * (p - p1 + 1)});
  return {plus, minus};
}

KleinCase klein_case_group(std::int64_t k) {
  if (k >= -1 && k <= 1) throw DomainError("klein case needs |k| >= 2");
  IntMatrix rel(1, 3);
  rel(0, 0) = 1, rel(0, 1) = 1, rel(0, 2) = Int(std::to_string(-k));
  auto p = present(rel);
  KleinCase kc;
  kc.group = p.group;
  kc.v_plus.coords = p.free_coordinates({1, 0, 0});
  kc.v_minus.coords = p.free_coordinates({0, 1, 0});
  kc.u.coords = p.free_coordinates({0, 0, 1});
  auto basis = [](const LoopClass &a, const LoopClass &b) {
    auto i = subgroup_index({a, b});
    return !i.infinite && i.value == 1;
  };
  kc.plus_basis = basis(kc.v_plus, kc.u);
  kc.minus_basis = basis(kc.v_minus, kc.u);
  return kc;
}

bool primitivity_necessary(const std::vector<LoopClass> &classes) {
  if (classes.empty() || classes.size() != classes.front().coords.size())
    throw DomainError("rank mismatch: need as many classes as the ambient rank");
  auto i = subgroup_index(classes);
  return !i.infinite && i.value == 1;
}

} // namespace hk
