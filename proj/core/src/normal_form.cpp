#include "retoric/normal_form.hpp"

#include <limits>
#include <stdexcept>

namespace retoric {

namespace {

// Floor division (cpp_int division truncates toward zero).
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hermite_form(const IntMat& A) {
  HermiteForm hf;
  hf.H = A;
  hf.U = IntMat::identity(A.cols());
  IntMat& H = hf.H;
  IntMat& U = hf.U;
  size_t rows = A.rows(), cols = A.cols();
  size_t r = 0;
  for (size_t i = 0; i < rows && r < cols; ++i) {
    // Euclid across the active columns of row i until one survivor remains.
    for (;;) {
      size_t piv = cols;
      for (size_t j = r; j < cols; ++j) {
        if (H.at(i, j) == 0) continue;
        if (piv == cols || abs_int(H.at(i, j)) < abs_int(H.at(i, piv))) piv = j;
      }
      if (piv == cols) break;  // row has no pivot among active columns
      bool reduced_all = true;
      for (size_t j = r; j < cols; ++j) {
        if (j == piv || H.at(i, j) == 0) continue;
        Int q = H.at(i, j) / H.at(i, piv);
        H.add_col(j, piv, -q);
        U.add_col(j, piv, -q);
        if (H.at(i, j) != 0) reduced_all = false;
      }
      if (reduced_all) {
        H.swap_cols(r, piv);
        U.swap_cols(r, piv);
        if (H.at(i, r) < 0) {
          H.negate_col(r);
          U.negate_col(r);
        }
        for (size_t j = 0; j < r; ++j) {
          Int q = fdiv(H.at(i, j), H.at(i, r));
          H.add_col(j, r, -q);
          U.add_col(j, r, -q);
        }
        hf.pivot_rows.push_back(i);
        ++r;
        break;
      }
    }
  }
  hf.rank = r;
  return hf;
}

SmithForm smith_form(const IntMat& A) {
  SmithForm sf;
  sf.D = A;
  sf.U = IntMat::identity(A.rows());
  sf.V = IntMat::identity(A.cols());
  IntMat& D = sf.D;
  IntMat& U = sf.U;
  IntMat& V = sf.V;
  size_t rows = A.rows(), cols = A.cols();
  size_t t = 0;
  while (t < rows && t < cols) {
    // Global minimal-|entry| pivot in the trailing block, topmost-leftmost tie.
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (D.at(i, j) == 0) continue;
        if (pi == rows || abs_int(D.at(i, j)) < abs_int(D.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // trailing block is zero
    D.swap_rows(t, pi);
    U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    V.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (D.at(i, t) == 0) continue;
        Int q = D.at(i, t) / D.at(t, t);
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D.at(i, t) != 0) {
          D.swap_rows(t, i);
          U.swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t j = t + 1; j < cols; ++j) {
        if (D.at(t, j) == 0) continue;
        Int q = D.at(t, j) / D.at(t, t);
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D.at(t, j) != 0) {
          D.swap_cols(t, j);
          V.swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    // Enforce divisibility of the remaining block by the new pivot.
    bool redo = false;
    for (size_t i = t + 1; i < rows && !redo; ++i)
      for (size_t j = t + 1; j < cols && !redo; ++j)
        if (D.at(i, j) % D.at(t, t) != 0) {
          D.add_row(t, i, 1);
          U.add_row(t, i, 1);
          redo = true;
        }
    if (redo) continue;
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
    ++t;
  }
  for (size_t i = 0; i < t; ++i) sf.invariant_factors.push_back(D.at(i, i));
  return sf;
}

IntMat kernel(const IntMat& A) {
  HermiteForm hf = hermite_form(A);
  size_t k = A.cols() - hf.rank;
  IntMat K(A.cols(), k);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < A.cols(); ++i) K.at(i, j) = hf.U.at(i, hf.rank + j);
  return K;
}

std::optional<IntVec> solve(const IntMat& A, const IntVec& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve shape mismatch");
  HermiteForm hf = hermite_form(A);
  IntVec r = b;
  IntVec y(A.cols(), Int(0));
  for (size_t j = 0; j < hf.rank; ++j) {
    size_t pr = hf.pivot_rows[j];
    if (r[pr] % hf.H.at(pr, j) != 0) return std::nullopt;
    Int q = r[pr] / hf.H.at(pr, j);
    y[j] = q;
    if (q != 0)
      for (size_t i = 0; i < A.rows(); ++i) r[i] -= q * hf.H.at(i, j);
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return hf.U * y;
}

bool in_lattice(const IntMat& A, const IntVec& v) { return solve(A, v).has_value(); }

IntMat saturation(const IntMat& A) {
  IntMat E = kernel(A.transpose());
  return kernel(E.transpose());
}

IntMat inverse_unimodular(const IntMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse of non-square matrix");
  HermiteForm hf = hermite_form(A);
  if (!hf.H.is_identity()) throw std::invalid_argument("matrix is not unimodular");
  return hf.U;
}

IntVec reduce_mod_lattice(const IntMat& A, IntVec v) {
  HermiteForm hf = hermite_form(A);
  for (size_t j = 0; j < hf.rank; ++j) {
    size_t pr = hf.pivot_rows[j];
    Int q = fdiv(v[pr], hf.H.at(pr, j));
    if (q != 0)
      for (size_t i = 0; i < v.size(); ++i) v[i] -= q * hf.H.at(i, j);
  }
  return v;
}

}  // namespace retoric
