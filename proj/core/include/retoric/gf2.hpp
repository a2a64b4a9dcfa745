#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retoric/matrix.hpp"

namespace retoric {

using BitVec = std::vector<uint8_t>;

// Dense matrix over the field with two elements.
class BitMat {
 public:
  BitMat() : rows_(0), cols_(0) {}
  BitMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, 0) {}

  static BitMat reduction_of(const IntMat& m);
  static BitMat identity(size_t n);
  static BitMat from_rows(const std::vector<BitVec>& rows, size_t cols_hint = 0);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint8_t& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
  uint8_t at(size_t i, size_t j) const { return d_[i * cols_ + j]; }
  BitVec row(size_t i) const;

  bool operator==(const BitMat& o) const = default;

  size_t rank() const;
  // One solution of (*this) x = b, if the system is consistent.
  std::optional<BitVec> solve(const BitVec& b) const;
  std::vector<BitVec> nullspace() const;

  std::string to_string() const;

 private:
  size_t rows_, cols_;
  std::vector<uint8_t> d_;
};

inline uint8_t mod2(const Int& x) { return static_cast<uint8_t>(x % 2 != 0); }

BitVec reduce_vec_mod2(const IntVec& v);

}  // namespace retoric
