#pragma once

#include <vector>

#include "retoric/matrix.hpp"

namespace retoric {

// Strongly convex rational polyhedral cone.  Construction canonicalizes the
// generators (primitive, extreme rays only, lex-sorted) and computes the
// span equations and facet normals, so all queries afterwards are cheap and
// the object is immutable.
class Cone {
 public:
  Cone(size_t ambient_rank, std::vector<IntVec> generators);
  static Cone origin(size_t ambient_rank);

  size_t ambient_rank() const { return ambient_rank_; }
  size_t dim() const { return dim_; }
  bool is_origin() const { return dim_ == 0; }
  const std::vector<IntVec>& generators() const { return gens_; }
  // Rows vanishing exactly on the linear span of the cone.
  const IntMat& span_equations() const { return equations_; }
  // One canonical ambient representative per facet-supporting hyperplane.
  const std::vector<IntVec>& facet_normals() const { return normals_; }

  bool contains(const IntVec& v) const;
  bool contains(const Cone& c) const;
  bool interior_contains(const IntVec& v) const;

  bool operator==(const Cone& o) const;
  bool operator<(const Cone& o) const;  // (dim, generator list) lexicographic

  // All faces including the cone itself and the origin, ordered by
  // (dimension, generators).
  std::vector<Cone> faces() const;
  std::vector<Cone> facets() const;
  // The smallest face containing v (which must lie in the cone).
  Cone face_containing(const IntVec& v) const;
  bool is_face_of(const Cone& c) const;

  bool is_simplicial() const;
  bool is_smooth() const;

  Cone intersect(const Cone& o) const;

  // Image cone under a linear map; throws NotStronglyConvex when the image
  // degenerates.
  Cone apply(const IntMat& m) const;

  // Primitive generator of the ray through the sum of the primitive
  // generators.
  IntVec barycenter() const;

 private:
  Cone() = default;
  size_t ambient_rank_ = 0;
  size_t dim_ = 0;
  std::vector<IntVec> gens_;
  IntMat equations_;
  std::vector<IntVec> normals_;
};

}  // namespace retoric
