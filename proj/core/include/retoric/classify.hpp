#pragma once

// Homeomorphism classification of compact real toric varieties of dimension
// at most three, together with the circle-action bookkeeping that drives the
// three-dimensional half of the classification:
//
//   * TopologicalType      -- closed tagged union of the realizable types,
//   * classify             -- fan + involution + twist  ->  TopologicalType,
//   * lens_normalize       -- canonical (p; q) parameters of a lens space,
//   * realize_e_star       -- inverse problem: orbit census -> variety,
//   * circle_action_census -- fixed circles / special exceptional / plain
//                             exceptional orbit counts of the S^1-action.
//
// The classifier is total on its precondition domain: every input with a
// compact real locus and a smooth topological core yields either a definite
// homeomorphism type or an explicit Unsupported value naming what is missing
// (never an exception).

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "retoric/polynomial.hpp"
#include "retoric/variety.hpp"

namespace retoric {

// A closed 1-, 2- or 3-manifold (or the empty set) presented in the normal
// form used by the classifier.  Value type with deep structural equality.
//
// One deliberate encoding asymmetry: the Klein bottle appearing as a fibre of
// a trivial circle bundle is encoded ProductWithCircle(KleinBottle) on the
// branch classified through the orbit census, but as
// ProductWithCircle(NonOrientableSurface(2)) on the branch classified through
// the invariant-cone census of a threefold with a two-dimensional core.  The
// two spellings are pinned by the respective constructions and are never
// compared across branches; callers that want a single spelling can collapse
// KleinBottle to NonOrientableSurface(2) themselves.
class TopologicalType {
 public:
  enum class Kind {
    Empty,                   // real locus has no point
    Circle,                  // S^1
    Torus,                   // T^k, k = torus_rank()
    NonOrientableSurface,    // connected sum of genus() copies of RP^2
    Sphere,                  // S^d, d = sphere_dim()
    ProjectivePlane,         // RP^2
    KleinBottle,             // Klein bottle
    ProductWithCircle,       // inner() x S^1
    LensSpace,               // L(p; q), p even positive, 1 <= q <= p/2
    ConnectedSum3,           // # of S^2xS^1 / RP^2xS^1 / RP^3 summands
    KleinFiberProduct,       // Klein bottle x_{S^1} Klein bottle
    MappingTorusOverCircle,  // fibre bundle over S^1, fibre inner(),
                             //   monodromy pinned by descriptor()
    Unsupported,             // outside the classified range; reason() says why
  };

  TopologicalType() = default;

  static TopologicalType empty_set();
  static TopologicalType circle();
  static TopologicalType torus(int rank);
  static TopologicalType non_orientable_surface(int genus);
  static TopologicalType sphere(int dim);
  static TopologicalType projective_plane();
  static TopologicalType klein_bottle();
  static TopologicalType product_with_circle(TopologicalType fibre);
  // p must be even and positive, q in [1, p/2]; i.e. the parameters must
  // already be in normal form.  gcd(q, p) > 1 is allowed: singular
  // exchanged-pair cones produce lens-like quotients with non-coprime
  // parameters.  Throws ValidationError otherwise.
  static TopologicalType lens_space(long long p, long long q);
  static TopologicalType connected_sum_3(int s2xs1, int rp2xs1, int rp3);
  static TopologicalType klein_fiber_product();
  static TopologicalType mapping_torus_over_circle(TopologicalType fibre,
                                                   CountPolynomial descriptor);
  static TopologicalType unsupported(std::string reason);

  Kind kind() const { return kind_; }

  int torus_rank() const { return a_; }             // Torus
  int genus() const { return a_; }                  // NonOrientableSurface
  int sphere_dim() const { return a_; }             // Sphere
  long long lens_p() const { return a_; }           // LensSpace
  long long lens_q() const { return b_; }           // LensSpace
  int sum_s2xs1() const { return a_; }              // ConnectedSum3
  int sum_rp2xs1() const { return b_; }             // ConnectedSum3
  int sum_rp3() const { return c_; }                // ConnectedSum3

  // Fibre of a ProductWithCircle or MappingTorusOverCircle.
  const TopologicalType& inner() const;
  // Orbit census polynomial pinning the monodromy of a mapping torus.
  const CountPolynomial& descriptor() const;
  // Human-readable explanation of an Unsupported value.
  const std::string& reason() const { return reason_; }

  bool operator==(const TopologicalType& other) const;
  bool operator!=(const TopologicalType& other) const {
    return !(*this == other);
  }

  // Deterministic rendering; the Klein bottle prints exactly "Klein bottle".
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Unsupported;
  long long a_ = 0;
  long long b_ = 0;
  long long c_ = 0;
  std::shared_ptr<const TopologicalType> inner_;
  std::optional<CountPolynomial> descriptor_;
  std::string reason_;
};

// Homeomorphism type of the real locus.
//
// Preconditions (PreconditionFailed naming the violated predicate):
//   * compact_real_locus(X),
//   * smooth_topological_core(X) -- relaxed for lattices of type (1;2)_1,
//     where two-dimensional invariant cones spanned by an exchanged pair of
//     rays may be singular (the lens gluing data absorbs the index).
//
// Total otherwise: inputs the classification does not decide (dimension 0 or
// > 3, split threefolds, unrecognized censuses) come back as Unsupported.
TopologicalType classify(const RealToricVariety& X);

// Normal form of lens space parameters: among q, p-q, q^{-1} mod p and
// p - q^{-1} mod p, the unique representative in [1, p/2].  L(p; q) and
// L(p; q') are homeomorphic exactly when the normal forms agree.
//
// Throws ValidationError unless p is even and positive, NotCoprime unless
// gcd(q, p) = 1.
std::pair<long long, long long> lens_normalize(long long p, long long q);

// Inverse problem for the orbit census of a threefold over a lattice of type
// (2;1)_1: builds a smooth projective real toric variety with the prescribed
// census polynomial.  The census must satisfy, writing the coefficients as
// e^d_{p,q} (monomials x^p y^q z^d):
//
//   (1) e^1_{2,1} = 1,
//   (2) e^0_{0,0} = 2 e^0_{1,0},
//   (3) e^1_{1,1} + e^0_{1,1} + e^0_{1,0} = e^0_{0,1} + e^0_{0,0},
//   (4) e^1_{1,1} >= e^0_{1,1} + e^0_{1,0},
//   (5) e^0_{0,1} + e^0_{0,0} >= 3,
//   (6) e^0_{1,1} + e^0_{1,0} = 0 implies e^1_{1,1} = 4,
//
// with all coefficients non-negative and no other monomials present.  Throws
// ConstraintViolated naming the first violated constraint otherwise.
//
// Postconditions: the result is untwisted, smooth, with compact real locus,
// lattice of type (2;1)_1, and e_star_polynomial(result) equal to the input.
RealToricVariety realize_e_star(const CountPolynomial& census);

// Orbit counts of the circle action on a threefold over a (2;1)_1 lattice.
struct CircleActionCensus {
  // Invariant rays whose class in H^2(Z/2; N) vanishes: special exceptional
  // surface components of the action (also the coefficient e^0_{1,1}).
  std::size_t t = 0;
  // Two-dimensional invariant cones spanned by an exchanged pair of rays:
  // circles of fixed points (also the coefficient e^0_{1,0}).
  std::size_t h = 0;
  // Two-dimensional invariant cones both of whose rays have non-vanishing
  // class: plain exceptional orbits (also e^1_{1,1} - t - h).
  std::size_t u = 0;

  bool operator==(const CircleActionCensus&) const = default;
};

// Preconditions: those of classify, a real point, and a lattice of type
// (2;1)_1 (PreconditionFailed naming the failed predicate otherwise).
CircleActionCensus circle_action_census(const RealToricVariety& X);

}  // namespace retoric
