#pragma once

#include <map>
#include <optional>
#include <string>

#include "retoric/cone.hpp"
#include "retoric/involution.hpp"

namespace retoric {

struct FanValidation {
  bool ok = true;
  std::string violation;  // empty when ok
};

// Checks the fan axioms and stability under the involution without throwing:
// strong convexity of every cone, pairwise intersections being common faces,
// and closure under the involution.
FanValidation validate_fan(const InvolutiveLattice& lattice, const std::vector<Cone>& cones);

// A finite collection of strongly convex cones closed under taking faces and
// intersections, stable under the lattice involution.  Construction
// validates and computes the face closure; instances are immutable.
class EquivariantFan {
 public:
  EquivariantFan(InvolutiveLattice lattice, std::vector<Cone> cones);
  static EquivariantFan trivial(InvolutiveLattice lattice);

  const InvolutiveLattice& lattice() const { return lattice_; }
  size_t ambient_rank() const { return lattice_.rank(); }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  const std::vector<Cone>& all_cones() const { return closure_; }
  const std::vector<IntVec>& rays() const { return rays_; }

  bool contains_cone(const Cone& c) const;
  Cone tau_image(const Cone& c) const;
  bool is_invariant(const Cone& c) const;
  bool pointwise_fixed(const Cone& c) const;
  std::vector<Cone> invariant_cones() const;

  bool supports(const IntVec& v) const;
  bool is_complete() const;
  bool is_smooth() const;

  bool operator==(const EquivariantFan& o) const;

 private:
  InvolutiveLattice lattice_;
  std::vector<Cone> maximal_;
  std::vector<Cone> closure_;
  std::vector<IntVec> rays_;
};

// Cone set of the stellar subdivision at the ray through v, without fan
// assembly; used internally and by generators that subdivide along an orbit
// before re-validating.
std::vector<Cone> stellar_cones(const std::vector<Cone>& maximal, const IntVec& v);

// Stellar subdivision at the ray through v; v must lie in the support.
EquivariantFan stellar_subdivision(const EquivariantFan& fan, const IntVec& v);

// Subdivision whose cones are spanned by the barycenters of chains of
// nonzero cones; the result is simplicial and every invariant cone of it is
// pointwise fixed.
EquivariantFan barycentric_subdivision(const EquivariantFan& fan);

// Fan of intersections {c cap span(sub)} written in the basis given by the
// columns of `sub` (which must be a primitive tau-stable sublattice basis).
EquivariantFan restrict_fan(const EquivariantFan& fan, const IntMat& sub);

// Pushes the fan forward along a surjection of lattices.  The map must
// intertwine the involutions; image cones must stay strongly convex and form
// a fan.
EquivariantFan image_fan(const EquivariantFan& fan, const IntMat& projection,
                         const InvolutiveLattice& target);

}  // namespace retoric
