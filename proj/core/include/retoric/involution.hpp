#pragma once

#include <string>
#include <utility>

#include "retoric/gf2.hpp"
#include "retoric/matrix.hpp"
#include "retoric/normal_form.hpp"

namespace retoric {

// A finitely generated free abelian group together with an integral
// involution.  Everything downstream (fans, varieties, invariants) carries
// one of these.
class InvolutiveLattice {
 public:
  InvolutiveLattice(size_t rank, IntMat tau);

  size_t rank() const { return rank_; }
  const IntMat& tau() const { return tau_; }

  IntVec apply(const IntVec& v) const { return tau_ * v; }

  bool operator==(const InvolutiveLattice& o) const = default;

 private:
  size_t rank_;
  IntMat tau_;
};

// Conjugacy class data of an involution: p = rank of the fixed part,
// q = rank of the anti-fixed part, r = number of exchanged coordinate pairs
// in the canonical decomposition.  Always p + q = rank.
struct TypeSignature {
  size_t p = 0, q = 0, r = 0;
  bool operator==(const TypeSignature&) const = default;
  std::string to_string() const;
};

// The model involution of a given signature: a block diagonal matrix with
// p - r ones, q - r minus-ones, then r two-by-two swap blocks.
IntMat model_involution(const TypeSignature& sig);

// Change of basis bringing tau to the model involution: U^-1 tau U is block
// diagonal as above.  U is unimodular.
struct Decomposition {
  IntMat basis_change;
  TypeSignature signature;
};

Decomposition decompose(const InvolutiveLattice& L);

TypeSignature signature_of(const InvolutiveLattice& L);

// Basis of the sublattice fixed by tau (sign = +1) or negated by tau
// (sign = -1), as matrix columns.  Deterministic echelon basis.
IntMat fixed_sublattice(const InvolutiveLattice& L, int sign);

// The obstruction group measuring how far the lattice is from splitting:
// representatives generate N / (ker(1-tau) + ker(1+tau)) as an F2 vector
// space, and d0/d1 record 2*(that generator) in the anti-fixed/fixed echelon
// bases modulo 2.  Row k of d1 is the class of v_k + tau(v_k) in
// ker(1-tau) (x) F2; row k of d0 is the class of v_k - tau(v_k) in
// ker(1+tau) (x) F2.
struct WindingGroup {
  size_t dim = 0;
  std::vector<IntVec> representatives;
  BitMat d0;  // dim x q
  BitMat d1;  // dim x p
};

WindingGroup winding_group(const InvolutiveLattice& L);

// Group cohomology of Z/2 acting on the lattice; 2-periodic in degrees >= 1.
// Odd degrees: ker(1+tau) / im(1-tau).  Even degrees: ker(1-tau) / im(1+tau).
// Both are F2 vector spaces.
class CohomologySpace {
 public:
  int degree() const { return degree_; }
  size_t dim() const { return dim_; }
  const std::vector<IntVec>& representatives() const { return reps_; }

  // F2 coordinates of the class of v w.r.t. the representative basis.
  // Throws NotInKernel when v is not a cocycle in this degree.
  BitVec class_of(const IntVec& v) const;

 private:
  friend CohomologySpace cohomology(const InvolutiveLattice& L, int degree);
  int degree_ = 0;
  size_t dim_ = 0;
  std::vector<IntVec> reps_;
  IntMat kernel_basis_;     // n x m
  IntMat coord_change_;     // m x m, unimodular
  std::vector<size_t> torsion_positions_;
  IntMat cocycle_test_;     // v is a cocycle iff cocycle_test_ * v = 0
};

CohomologySpace cohomology(const InvolutiveLattice& L, int degree);

BitVec class_of(const InvolutiveLattice& L, const IntVec& v, int degree);

// Quotient of the lattice by a tau-stable primitive sublattice S (columns of
// `sub`).  projection * section = identity on the quotient, and
// projection has kernel exactly S.
struct SubQuotient {
  InvolutiveLattice quotient;
  IntMat projection;  // (n-s) x n
  IntMat section;     // n x (n-s)
};

SubQuotient sub_quotient(const InvolutiveLattice& L, const IntMat& sub);

// Is v congruent, modulo (1-tau)N, to an anti-invariant vector of the stable
// sublattice S?  v itself must be anti-invariant.
bool in_image_test(const InvolutiveLattice& L, const IntMat& sub, const IntVec& v);

// Connecting homomorphisms of the short exact sequence
// 0 -> S -> N -> N/S -> 0: ranks of d1 : H^1(N/S) -> H^2(S) and
// d2 : H^2(N/S) -> H^1(S).  Both vanish iff the pair splits equivariantly.
std::pair<size_t, size_t> extension_invariants(const InvolutiveLattice& sub_lattice,
                                               const InvolutiveLattice& total,
                                               const IntMat& inclusion);

}  // namespace retoric
