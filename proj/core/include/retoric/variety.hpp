#pragma once

#include <optional>
#include <vector>

#include "retoric/fan.hpp"
#include "retoric/involution.hpp"

namespace retoric {

// Class in the first group cohomology of the lattice, stored through an
// anti-invariant integer representative.  The coset modulo (1-tau)N selects
// the real form of the torus; equality compares canonical coset forms.
class TwistClass {
 public:
  // Throws NotAntiInvariant unless (1+tau) rep = 0.
  TwistClass(const InvolutiveLattice& L, IntVec rep);
  static TwistClass zero(const InvolutiveLattice& L);

  const IntVec& representative() const { return rep_; }
  const IntVec& canonical_form() const { return canonical_; }
  bool is_zero() const;

  bool operator==(const TwistClass& o) const { return canonical_ == o.canonical_; }

 private:
  IntVec rep_;
  IntVec canonical_;  // reduced modulo the image of (1 - tau)
};

// A real toric variety presented by its equivariant fan and twist class.
class RealToricVariety {
 public:
  explicit RealToricVariety(EquivariantFan fan);
  RealToricVariety(EquivariantFan fan, TwistClass twist);
  RealToricVariety(EquivariantFan fan, const IntVec& twist_rep);

  const EquivariantFan& fan() const { return fan_; }
  const InvolutiveLattice& lattice() const { return fan_.lattice(); }
  const TwistClass& twist() const { return twist_; }
  size_t dim() const { return fan_.ambient_rank(); }
  bool untwisted() const { return twist_.is_zero(); }

  bool operator==(const RealToricVariety& o) const;

 private:
  EquivariantFan fan_;
  TwistClass twist_;
};

// True when some invariant cone c hits the twist class, i.e. the class lies
// in the image of the cohomology of the span lattice of c.
bool has_real_point(const RealToricVariety& X);

// dim X minus the smallest dimension of an invariant cone hitting the twist
// class; empty when there is no real point.
std::optional<size_t> cellular_dimension(const RealToricVariety& X);

// True when the fan restricted to ker(1-tau) is complete there.
bool compact_real_locus(const RealToricVariety& X);

// The union of the affine invariant open pieces: the subfan of faces of
// invariant cones, with the same lattice and twist.  Contains every real
// point of X.
RealToricVariety topological_core(const RealToricVariety& X);
// True when every invariant cone is smooth.
bool smooth_topological_core(const RealToricVariety& X);

// True when every invariant cone is pointwise fixed by the involution.
bool properly_wound(const RealToricVariety& X);

// The split variety on ker(1-tau) whose fan is the restriction of the fan;
// the fibre of the canonical fibration of the real locus.
RealToricVariety canonical_fibre(const RealToricVariety& X);

// The same cones over the sublattice ker(1-tau) + ker(1+tau), on which the
// involution acts diagonally.  `inclusion` maps the new lattice into the old
// one; it is the identity when the lattice is already unwound.
struct Unwinding {
  RealToricVariety variety;
  IntMat inclusion;
};
Unwinding unwinding(const RealToricVariety& X);

// A two-dimensional invariant cone whose rays are exchanged, together with
// the sum of its two primitive generators.
struct WindingComponent {
  Cone cone;
  IntVec center;
};
// All such cones, sorted by center; requires a smooth fan.
std::vector<WindingComponent> codim2_winding_locus(const RealToricVariety& X);

// Stellar subdivision at the center of every winding component; the result
// is properly wound, smooth, and has the same canonical fibre fan.
RealToricVariety resolve_winding_blowup(const RealToricVariety& X);

// Barycentric subdivision when the variety is not already properly wound;
// works without smoothness and preserves the support.
RealToricVariety resolve_winding_barycentric(const RealToricVariety& X);

// Stellar subdivision at the barycenter of an invariant cone of dimension at
// least two: the fan of the blow-up of X along the orbit closure of c.
RealToricVariety toric_blow_up(const RealToricVariety& X, const Cone& c);

// Quotient by the subtorus dual to ker(projection): quotient lattice, image
// fan, pushed-forward twist.  The kernel of the surjection must be stable
// under the involution.
RealToricVariety quotient_by_subgroup(const RealToricVariety& X, const IntMat& projection);

// Local normal form data of a smooth affine untwisted variety whose fan is
// the face set of one invariant cone c:
//   k = number of invariant rays of c, l = number of exchanged ray pairs,
//   base_type = signature of N/N_c,
//   mu = matrix of the connecting map H^1(N/N_c) -> H^2(N_c) written in the
//        basis of invariant-ray classes (rows follow the sorted generators),
//   winding = r(base_type) + l + rank(mu).
struct AffineNormalForm {
  size_t l = 0;
  size_t k = 0;
  TypeSignature base_type;
  BitMat mu;
  size_t winding = 0;
};
AffineNormalForm affine_normal_form(const RealToricVariety& X);

// Signature of the quotient lattice N/N_c for every invariant cone c; the
// isogeny type of the torus orbit sitting over c.
struct OrbitType {
  Cone cone;
  TypeSignature type;
};
std::vector<OrbitType> orbit_types(const RealToricVariety& X);

}  // namespace retoric
