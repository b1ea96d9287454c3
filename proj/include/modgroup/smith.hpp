#pragma once

// Smith normal form over Z and the canonical form of finitely generated
// abelian groups.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "modgroup/matgroup.hpp"
#include "modgroup/reidemeister.hpp"

namespace modgroup {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Integer>& row);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// Z/d1 x ... x Z/dk x Z^r with d1 | d2 | ... and every di >= 2.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  long free_rank = 0;

  // Canonical form of Z/c1 x ... x Z/cj x Z^extra_free for arbitrary cyclic
  // orders; zeros add to the free rank, ones are dropped.
  static AbelianInvariants from_cyclic_orders(std::vector<Integer> orders, long extra_free = 0);

  bool is_finite() const { return free_rank == 0; }

  // "Z/2 x Z/4 x Z^1"; the trivial group is "0".
  std::string to_string() const;
  static AbelianInvariants parse(std::string_view text);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Invariants of the cokernel Z^n_generators / rowspace(M).
AbelianInvariants smith_invariants(const IntMatrix& m, std::size_t n_generators);

// Same for sparse exponent-sum rows. Unit pivots are eliminated on the sparse
// form first; whatever remains goes through the dense reduction.
AbelianInvariants smith_invariants(const std::vector<rs::SparseRow>& rows, std::size_t n_generators);

// Diagonal of a Smith normal form of m (dense reduction with minimal
// absolute value pivots), padded with zeros to min(rows, cols).
std::vector<Integer> smith_diagonal(IntMatrix m);

}  // namespace modgroup
