#pragma once

#include <optional>

#include "retoric/matrix.hpp"

namespace retoric {

// Column-style Hermite normal form: H = A * U with U unimodular.  H is in
// column echelon form: pivots sit on strictly increasing rows, each pivot is
// positive, entries left of a pivot in its row are reduced into [0, pivot),
// entries right of it are zero.  Zero columns are pushed to the end.
// Pivot selection is "leftmost column of minimal absolute value", which makes
// the whole computation deterministic.
struct HermiteForm {
  IntMat H;
  IntMat U;
  size_t rank = 0;
  std::vector<size_t> pivot_rows;  // row of the pivot of each nonzero column
};

HermiteForm hermite_form(const IntMat& A);

// Smith normal form: D = U * A * V with U, V unimodular and D diagonal with
// d1 | d2 | ... | dk, all positive, followed by zeros.
struct SmithForm {
  IntMat U;
  IntMat D;
  IntMat V;
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries
};

SmithForm smith_form(const IntMat& A);

// Basis of {x : A x = 0}, returned as the columns of an n x k matrix.  The
// kernel of an integer matrix is automatically saturated.
IntMat kernel(const IntMat& A);

// One integer solution of A x = b, if any.
std::optional<IntVec> solve(const IntMat& A, const IntVec& b);

// Does v lie in the column span (over Z) of A?
bool in_lattice(const IntMat& A, const IntVec& v);

// Saturation of the column span of A: (span_Q A) intersected with Z^n,
// returned as a basis matrix with rank(A) columns.
IntMat saturation(const IntMat& A);

// Inverse of a unimodular matrix (integer entries, det = +-1).
IntMat inverse_unimodular(const IntMat& A);

// Reduces v modulo the column span of A to the canonical coset
// representative determined by the Hermite form of A: pivot coordinates are
// reduced into [0, pivot), the rest stay untouched.
IntVec reduce_mod_lattice(const IntMat& A, IntVec v);

}  // namespace retoric
