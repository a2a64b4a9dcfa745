#pragma once

#include <utility>

#include "retoric/polynomial.hpp"
#include "retoric/variety.hpp"

namespace retoric {

// Orbit-count polynomial in x, y: the coefficient of x^k y^l is the number of
// invariant cones c whose quotient lattice N(c) has signature (k; l)_r for
// some r.
CountPolynomial e_polynomial(const RealToricVariety& X);

// Refined count in x, y, z: a cone of quotient signature (k; l)_r contributes
// x^{k-r} y^{l-r} z^r.  Substituting z = xy recovers e_polynomial.
CountPolynomial e_star_polynomial(const RealToricVariety& X);

// Ray-pattern count in x, y: the coefficient of x^k y^l is the number of
// invariant cones with k invariant rays and l exchanged ray pairs.  Requires
// a smooth topological core (NotSmooth otherwise).
CountPolynomial a_polynomial(const RealToricVariety& X);

// Virtual Betti polynomial in t: e_polynomial evaluated at (t-1, t+1).  For a
// smooth topological core and compact real locus this is the F2 Poincaré
// polynomial of the real locus.
CountPolynomial virtual_poincare(const RealToricVariety& X);

// Whether the real locus is orientable.  Decided by an F2 linear system: a
// functional on ker(1-tau) (x) F2 must take value one on every invariant ray
// generator and vanish on the winding classes.  Preconditions:
// compact_real_locus, smooth_topological_core, has_real_point; the error
// names the first predicate that fails.
bool orientable(const RealToricVariety& X);

// Dimension of the subgroup of H^1 of the real locus (F2 coefficients)
// spanned by classes of toric divisors, together with its codimension in
// H^1.  Same preconditions as `orientable`.
std::pair<size_t, size_t> h1_tor_dimension(const RealToricVariety& X);

// Evaluation report for the two Dehn-Sommerville-type identities satisfied by
// compact real loci.  The pairing identity additionally needs a smooth
// topological core; when the core is singular it is reported as not checked.
struct DehnSommervilleReport {
  Int euler_value;     // e[X](-1; 1)
  bool euler_ok = false;
  bool pairing_checked = false;
  Int pairing_lhs;     // (p - r) * e_{0, q-r}
  Int pairing_rhs;     // 2 * e_{1, q-r}
  bool pairing_ok = false;
  bool ok() const { return euler_ok && (!pairing_checked || pairing_ok); }
};
DehnSommervilleReport dehn_sommerville_check(const RealToricVariety& X);

namespace detail {
// Ray-pattern census without the smooth-core precondition; used internally
// by the classifier on branches that tolerate singular exchanged-pair cones.
CountPolynomial ray_pattern_census(const EquivariantFan& fan);
}  // namespace detail

}  // namespace retoric
