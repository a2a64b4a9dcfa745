#include "retoric/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace retoric {

IntMat::IntMat(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

IntMat IntMat::identity(size_t n) {
  IntMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, size_t rows_hint) {
  size_t r = rows_hint;
  if (!cols.empty()) r = cols.front().size();
  IntMat m(r, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != r) throw std::invalid_argument("ragged column list");
    for (size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(size_t i) const {
  IntVec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

IntVec IntMat::col(size_t j) const {
  IntVec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void IntMat::set_col(size_t j, const IntVec& v) {
  for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVec r(rows_, Int(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

void IntMat::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMat::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMat::add_col(size_t a, size_t b, const Int& c) {
  if (c == 0) return;
  for (size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMat::add_row(size_t a, size_t b, const Int& c) {
  if (c == 0) return;
  for (size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMat::negate_col(size_t a) {
  for (size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

void IntMat::negate_row(size_t a) {
  for (size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

IntMat IntMat::left_cols(size_t k) const {
  IntMat m(rows_, k);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
  return m;
}

IntMat IntMat::hcat(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat shape mismatch");
  IntMat m(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

size_t rank(const IntMat& m) {
  IntMat a = m;
  size_t r = 0;
  size_t rows = a.rows(), cols = a.cols();
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(r, piv);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a.at(i, c) == 0) continue;
      Int g = gcd_int(a.at(r, c), a.at(i, c));
      Int fr = a.at(i, c) / g, fi = a.at(r, c) / g;
      for (size_t j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) * fi - a.at(r, j) * fr;
    }
    ++r;
  }
  return r;
}

}  // namespace retoric
