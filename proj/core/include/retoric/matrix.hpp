#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>

#include "retoric/integer.hpp"

namespace retoric {

// Dense row-major integer matrix.  Rows/cols are small (lattice rank <= 8 in
// the CLI, a bit larger in internal computations), so no attempt at sparsity.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMat identity(size_t n);
  static IntMat from_columns(const std::vector<IntVec>& cols, size_t rows_hint = 0);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(size_t i) const;
  IntVec col(size_t j) const;
  void set_col(size_t j, const IntVec& v);

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IntMat operator-() const;
  IntVec operator*(const IntVec& v) const;
  bool operator==(const IntMat& o) const = default;

  bool is_identity() const;
  bool is_zero() const;

  void swap_cols(size_t a, size_t b);
  void swap_rows(size_t a, size_t b);
  // col[a] += c * col[b]
  void add_col(size_t a, size_t b, const Int& c);
  // row[a] += c * row[b]
  void add_row(size_t a, size_t b, const Int& c);
  void negate_col(size_t a);
  void negate_row(size_t a);

  // Keeps columns [0, k); useful after echelon computations.
  IntMat left_cols(size_t k) const;
  // Horizontal concatenation.
  static IntMat hcat(const IntMat& a, const IntMat& b);

  std::string to_string() const;

 private:
  size_t rows_, cols_;
  IntVec data_;
};

// Fraction-free determinant (Bareiss).  Requires a square matrix.
Int determinant(const IntMat& m);

// Rank over the rationals.
size_t rank(const IntMat& m);

}  // namespace retoric
