#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hk {

using Int = mpz_class;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row(std::size_t dst, std::size_t src, const Int &k); // row dst += k * row src
  void add_col(std::size_t dst, std::size_t src, const Int &k); // col dst += k * col src
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
Int determinant(const IntMatrix &m); // fraction-free elimination
std::string to_string(const IntMatrix &m);

struct SmithForm {
  IntMatrix D, U, V; // U * M * V = D
  std::size_t rank = 0;
};

// Elementary reduction with the smallest nonzero |entry| as pivot.
SmithForm smith_normal_form(const IntMatrix &m);

struct AbelianGroup {
  std::vector<Int> invariant_factors; // each > 1, d1 | d2 | ...
  std::size_t free_rank = 0;

  bool is_free() const { return invariant_factors.empty(); }
  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

std::string to_string(const AbelianGroup &g); // "Z^2", "Z/2 + Z", "0"

// Cokernel of the relation matrix: Z^cols / rowspace.
struct Presentation {
  AbelianGroup group;
  IntMatrix V;              // generator change of basis from the Smith form
  std::size_t rank = 0;     // rank of the relation matrix
  std::size_t generators = 0;

  // Free coordinates of the class of sum_j x_j * g_j.
  std::vector<Int> free_coordinates(const std::vector<Int> &x) const;
};

Presentation present(const IntMatrix &relations);

struct LoopClass {
  std::vector<Int> coords;
  friend bool operator==(const LoopClass &, const LoopClass &) = default;
};

LoopClass make_class(std::initializer_list<long> c);
std::string to_string(const LoopClass &c);

struct SubgroupIndex {
  bool infinite = false;
  Int value;
};

std::string to_string(const SubgroupIndex &i);

// Index of the subgroup spanned by the classes in the free ambient group.
// Throws DomainError when coordinate lengths differ.
SubgroupIndex subgroup_index(const std::vector<LoopClass> &classes);

// Upper sign branch: ((p1, p - p1), (p1 - 1, p - p1 + 1)); mirror negates both.
std::pair<LoopClass, LoopClass> meridional_pair_predict(std::int64_t p, std::int64_t q,
                                                        std::int64_t p1, bool mirror = false);

struct KleinCase {
  AbelianGroup group;
  LoopClass v_plus, v_minus, u;
  bool plus_basis = false, minus_basis = false;
};

// <v+, v-, u | v+ + v- = k u>, |k| >= 2.
KleinCase klein_case_group(std::int64_t k);

// Index 1, a necessary condition for primitivity only. Requires as many
// classes as the ambient rank.
bool primitivity_necessary(const std::vector<LoopClass> &classes);

} // namespace hk
