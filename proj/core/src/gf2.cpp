#include "retoric/gf2.hpp"

#include <sstream>

namespace retoric {

BitMat BitMat::reduction_of(const IntMat& m) {
  BitMat b(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) b.at(i, j) = mod2(m.at(i, j));
  return b;
}

BitMat BitMat::identity(size_t n) {
  BitMat b(n, n);
  for (size_t i = 0; i < n; ++i) b.at(i, i) = 1;
  return b;
}

BitMat BitMat::from_rows(const std::vector<BitVec>& rows, size_t cols_hint) {
  size_t cols = rows.empty() ? cols_hint : rows.front().size();
  BitMat b(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) b.at(i, j) = rows[i][j];
  return b;
}

BitVec BitMat::row(size_t i) const {
  BitVec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

namespace {

// Row echelon over F2; returns pivot columns.  `rhs` (optional, same row
// count) is carried along.
std::vector<size_t> echelonize(BitMat& a, BitVec* rhs) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t piv = r;
    while (piv < a.rows() && !a.at(piv, c)) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
      if (rhs) std::swap((*rhs)[r], (*rhs)[piv]);
    }
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || !a.at(i, c)) continue;
      for (size_t j = 0; j < a.cols(); ++j) a.at(i, j) ^= a.at(r, j);
      if (rhs) (*rhs)[i] ^= (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t BitMat::rank() const {
  BitMat a = *this;
  return echelonize(a, nullptr).size();
}

std::optional<BitVec> BitMat::solve(const BitVec& b) const {
  BitMat a = *this;
  BitVec rhs = b;
  std::vector<size_t> pivots = echelonize(a, &rhs);
  for (size_t i = pivots.size(); i < rows_; ++i)
    if (rhs[i]) return std::nullopt;
  BitVec x(cols_, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
  return x;
}

std::vector<BitVec> BitMat::nullspace() const {
  BitMat a = *this;
  std::vector<size_t> pivots = echelonize(a, nullptr);
  std::vector<uint8_t> is_pivot(cols_, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<BitVec> basis;
  for (size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(cols_, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = a.at(i, c);
    basis.push_back(v);
  }
  return basis;
}

std::string BitMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << int(at(i, j));
  }
  os << "]";
  return os.str();
}

BitVec reduce_vec_mod2(const IntVec& v) {
  BitVec b(v.size());
  for (size_t i = 0; i < v.size(); ++i) b[i] = mod2(v[i]);
  return b;
}

}  // namespace retoric
