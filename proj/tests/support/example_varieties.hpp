#pragma once

#include "retoric/variety.hpp"

// Hand-built model varieties shared by the unit suites and the acceptance
// binary.  Expected invariants for each are derived in the accompanying test
// files; the builders only fix lattices, fans and twists.
namespace retoric::testing {

// --- curves ------------------------------------------------------------
// Split projective line: tau = id, rays +-1.
RealToricVariety split_p1();
// The complete conic: tau = -1, rays +-1; twisted has no real points.
RealToricVariety conic(bool twisted);

// --- surfaces ----------------------------------------------------------
// Weil restriction of the projective line: swap involution, four quadrants.
// Real locus: the 2-sphere.
RealToricVariety weil_p1();
// Affine piece of the above: the positive quadrant only (the Weil
// restriction of the affine line; real locus the plane).
RealToricVariety weil_a1();
// The invariant ray (1,1) in the swap lattice; real locus the Moebius strip.
RealToricVariety mobius_strip();
// Split projective plane.
RealToricVariety split_p2();
// Projective plane with coordinate-swap involution; real locus the real
// projective plane, presented with a non-split torus.
RealToricVariety conj_p2();
// Split product of two projective lines.
RealToricVariety split_p1xp1();
// Hirzebruch surface with parameter a (split torus).
RealToricVariety hirzebruch(int a);
// Product fan of two projective lines blown up at all four fixed points,
// swap involution; real locus the Klein bottle.
RealToricVariety klein_surface();
// Complete surface with all four quadrants and a diagonal involution; real
// locus a torus (sign = -1 gives type (0;2)_0, +1 gives (1;1)_0).
RealToricVariety quadrants_diag(int sign);
// Complete fan of the four diagonal sectors, tau = diag(1,-1), twist (0,1);
// the real locus is two isolated points.
RealToricVariety fake_p1p1();

// --- threefolds --------------------------------------------------------
// Complete octant fan on rank 3 with the given diagonal involution entries.
RealToricVariety octants(int s1, int s2, int s3);
// Product of a Hirzebruch surface (parameter a, coordinates 1,2) with a
// projective line (coordinate 3), involution diag(1,1,-1).
RealToricVariety hirzebruch_times_p1(int a);
// Lens-space fan: lattice swap (+) sign flip, cones <e1,e2> and <v',tau v'>
// where v' = (q1, q2, p); requires q1 + q2 = -1 and p >= 1.
RealToricVariety lens_variety(int p, int q1, int q2);
// The pillow threefold: plane fan with rays w, -w, w+u, w-u inside the fixed
// plane of the lattice (swap on coordinates 1,2; coordinate 3 fixed).
RealToricVariety pillow();

// --- combinators ---------------------------------------------------------
// Product variety: block-diagonal involution, pairwise products of the
// maximal cones, concatenated twist representatives.
RealToricVariety product(const RealToricVariety& a, const RealToricVariety& b);

}  // namespace retoric::testing
