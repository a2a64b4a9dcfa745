#include "retoric/variety.hpp"

#include <algorithm>
#include <map>

#include "retoric/errors.hpp"
#include "retoric/normal_form.hpp"

namespace retoric {

namespace {

// Basis of the saturated sublattice spanned by the cone, as matrix columns.
IntMat span_lattice(const Cone& c) { return kernel(c.span_equations()); }

IntMat one_minus_tau(const InvolutiveLattice& L) {
  return IntMat::identity(L.rank()) - L.tau();
}

}  // namespace

TwistClass::TwistClass(const InvolutiveLattice& L, IntVec rep) : rep_(std::move(rep)) {
  if (rep_.size() != L.rank()) fail(ErrorKind::ValidationError, "twist representative has wrong size");
  if (!is_zero_vec(add_vec(rep_, L.apply(rep_))))
    fail(ErrorKind::NotAntiInvariant, "twist representative is not anti-invariant");
  canonical_ = reduce_mod_lattice(one_minus_tau(L), rep_);
}

TwistClass TwistClass::zero(const InvolutiveLattice& L) {
  return TwistClass(L, IntVec(L.rank(), Int(0)));
}

bool TwistClass::is_zero() const { return is_zero_vec(canonical_); }

RealToricVariety::RealToricVariety(EquivariantFan fan)
    : fan_(std::move(fan)), twist_(TwistClass::zero(fan_.lattice())) {}

RealToricVariety::RealToricVariety(EquivariantFan fan, TwistClass twist)
    : fan_(std::move(fan)), twist_(std::move(twist)) {
  if (twist_.representative().size() != fan_.ambient_rank())
    fail(ErrorKind::ValidationError, "twist representative has wrong size");
}

RealToricVariety::RealToricVariety(EquivariantFan fan, const IntVec& twist_rep)
    : fan_(std::move(fan)), twist_(TwistClass(fan_.lattice(), twist_rep)) {}

bool RealToricVariety::operator==(const RealToricVariety& o) const {
  return fan_ == o.fan_ && twist_ == o.twist_;
}

bool has_real_point(const RealToricVariety& X) {
  const auto& L = X.lattice();
  for (const Cone& c : X.fan().invariant_cones())
    if (in_image_test(L, span_lattice(c), X.twist().representative())) return true;
  return false;
}

std::optional<size_t> cellular_dimension(const RealToricVariety& X) {
  const auto& L = X.lattice();
  std::optional<size_t> best;
  for (const Cone& c : X.fan().invariant_cones()) {
    if (best && c.dim() >= *best) continue;
    if (in_image_test(L, span_lattice(c), X.twist().representative())) best = c.dim();
  }
  if (!best) return std::nullopt;
  return X.dim() - *best;
}

bool compact_real_locus(const RealToricVariety& X) {
  return restrict_fan(X.fan(), fixed_sublattice(X.lattice(), +1)).is_complete();
}

RealToricVariety topological_core(const RealToricVariety& X) {
  EquivariantFan core(X.lattice(), X.fan().invariant_cones());
  return RealToricVariety(std::move(core), X.twist());
}

bool smooth_topological_core(const RealToricVariety& X) {
  for (const Cone& c : X.fan().invariant_cones())
    if (!c.is_smooth()) return false;
  return true;
}

bool properly_wound(const RealToricVariety& X) {
  for (const Cone& c : X.fan().invariant_cones())
    if (!X.fan().pointwise_fixed(c)) return false;
  return true;
}

RealToricVariety canonical_fibre(const RealToricVariety& X) {
  return RealToricVariety(restrict_fan(X.fan(), fixed_sublattice(X.lattice(), +1)));
}

Unwinding unwinding(const RealToricVariety& X) {
  const auto& L = X.lattice();
  const size_t n = L.rank();
  if (signature_of(L).r == 0) return Unwinding{X, IntMat::identity(n)};

  IntMat plus = fixed_sublattice(L, +1);
  IntMat minus = fixed_sublattice(L, -1);
  IntMat incl = IntMat::hcat(plus, minus);
  IntMat tau_split(n, n);
  for (size_t j = 0; j < plus.cols(); ++j) tau_split.at(j, j) = 1;
  for (size_t j = plus.cols(); j < n; ++j) tau_split.at(j, j) = -1;
  InvolutiveLattice split(n, tau_split);

  // Re-express a vector in the sublattice basis; 2v always lies in the
  // sublattice since 2v = (v + tau v) + (v - tau v).
  auto pull_back = [&](const IntVec& v) {
    auto x = solve(incl, scale_vec(Int(2), v));
    return primitive_part(*x);
  };
  std::vector<Cone> cones;
  for (const Cone& c : X.fan().maximal_cones()) {
    std::vector<IntVec> gens;
    for (const IntVec& v : c.generators()) gens.push_back(pull_back(v));
    cones.emplace_back(n, std::move(gens));
  }
  // The twist representative is anti-invariant, hence already lies in the
  // sublattice.
  IntVec twist = *solve(incl, X.twist().representative());
  return Unwinding{RealToricVariety(EquivariantFan(split, std::move(cones)), twist),
                   std::move(incl)};
}

std::vector<WindingComponent> codim2_winding_locus(const RealToricVariety& X) {
  if (!X.fan().is_smooth()) fail(ErrorKind::NotSmooth, "fan has a singular cone");
  std::vector<WindingComponent> out;
  for (const Cone& c : X.fan().all_cones()) {
    if (c.dim() != 2 || !X.fan().is_invariant(c) || X.fan().pointwise_fixed(c)) continue;
    const auto& g = c.generators();
    out.push_back(WindingComponent{c, add_vec(g[0], g[1])});
  }
  std::sort(out.begin(), out.end(),
            [](const WindingComponent& a, const WindingComponent& b) { return lex_less(a.center, b.center); });
  return out;
}

RealToricVariety resolve_winding_blowup(const RealToricVariety& X) {
  std::vector<WindingComponent> components = codim2_winding_locus(X);
  EquivariantFan fan = X.fan();
  for (const WindingComponent& w : components) fan = stellar_subdivision(fan, w.center);
  return RealToricVariety(std::move(fan), X.twist());
}

RealToricVariety resolve_winding_barycentric(const RealToricVariety& X) {
  if (properly_wound(X)) return X;
  return RealToricVariety(barycentric_subdivision(X.fan()), X.twist());
}

RealToricVariety toric_blow_up(const RealToricVariety& X, const Cone& c) {
  if (!X.fan().is_smooth()) fail(ErrorKind::NotSmooth, "fan has a singular cone");
  if (!X.fan().contains_cone(c) || !X.fan().is_invariant(c))
    fail(ErrorKind::NotInvariant, "blow-up center is not an invariant cone of the fan");
  if (c.dim() < 2)
    fail(ErrorKind::PreconditionFailed, "blow-up center must have dimension at least 2");
  return RealToricVariety(stellar_subdivision(X.fan(), c.barycenter()), X.twist());
}

RealToricVariety quotient_by_subgroup(const RealToricVariety& X, const IntMat& projection) {
  const auto& L = X.lattice();
  const size_t n = L.rank();
  const size_t m = projection.rows();
  if (projection.cols() != n) fail(ErrorKind::ValidationError, "projection has wrong shape");
  // Right inverse; exists exactly when the projection is onto the lattice.
  IntMat section(n, m);
  for (size_t j = 0; j < m; ++j) {
    IntVec e(m, Int(0));
    e[j] = 1;
    auto s = solve(projection, e);
    if (!s) fail(ErrorKind::ValidationError, "projection is not surjective onto the target lattice");
    section.set_col(j, *s);
  }
  IntMat tau_q = projection * L.tau() * section;
  if (tau_q * projection != projection * L.tau())
    fail(ErrorKind::NotStable, "kernel of the projection is not stable under the involution");
  InvolutiveLattice target(m, tau_q);
  EquivariantFan img = image_fan(X.fan(), projection, target);
  return RealToricVariety(std::move(img), projection * X.twist().representative());
}

AffineNormalForm affine_normal_form(const RealToricVariety& X) {
  if (X.fan().maximal_cones().size() != 1)
    fail(ErrorKind::NotAffine, "fan is not the face set of a single cone");
  const Cone& c = X.fan().maximal_cones()[0];
  if (!c.is_smooth()) fail(ErrorKind::NotSmooth, "cone is not smooth");
  if (!X.untwisted()) fail(ErrorKind::Twisted, "affine normal form requires an untwisted variety");

  const auto& L = X.lattice();
  // Partition the generators into invariant rays and exchanged pairs.
  std::vector<IntVec> invariant_gens;
  size_t pairs = 0;
  for (const IntVec& v : c.generators()) {
    IntVec w = L.apply(v);
    if (w == v)
      invariant_gens.push_back(v);
    else if (lex_less(v, w))
      ++pairs;
  }
  AffineNormalForm nf;
  nf.k = invariant_gens.size();
  nf.l = pairs;

  IntMat S = span_lattice(c);
  SubQuotient q = sub_quotient(L, S);
  nf.base_type = signature_of(q.quotient);

  // Involution restricted to the span lattice of the cone.
  const size_t s = S.cols();
  IntMat tau_c(s, s);
  for (size_t j = 0; j < s; ++j) tau_c.set_col(j, *solve(S, L.apply(S.col(j))));
  InvolutiveLattice Nc(s, tau_c);
  CohomologySpace h2 = cohomology(Nc, 2);
  CohomologySpace h1 = cohomology(q.quotient, 1);

  // Connecting map: a class upstairs lifts through the section, and the
  // invariant part of the lift lands in the span lattice.
  BitMat d(nf.k, h1.dim());
  for (size_t j = 0; j < h1.dim(); ++j) {
    IntVec lift = q.section * h1.representatives()[j];
    IntVec inv = add_vec(lift, L.apply(lift));
    BitVec cls = h2.class_of(*solve(S, inv));
    for (size_t i = 0; i < nf.k; ++i) d.at(i, j) = cls[i];
  }
  // Change basis so rows are indexed by the invariant rays: their classes
  // form a basis of the second cohomology of the span lattice.
  BitMat ray_classes(nf.k, nf.k);
  for (size_t j = 0; j < nf.k; ++j) {
    BitVec cls = h2.class_of(*solve(S, invariant_gens[j]));
    for (size_t i = 0; i < nf.k; ++i) ray_classes.at(i, j) = cls[i];
  }
  nf.mu = BitMat(nf.k, h1.dim());
  for (size_t j = 0; j < h1.dim(); ++j) {
    BitVec col(nf.k, 0);
    for (size_t i = 0; i < nf.k; ++i) col[i] = d.at(i, j);
    BitVec x = *ray_classes.solve(col);
    for (size_t i = 0; i < nf.k; ++i) nf.mu.at(i, j) = x[i];
  }
  nf.winding = nf.base_type.r + nf.l + nf.mu.rank();
  return nf;
}

std::vector<OrbitType> orbit_types(const RealToricVariety& X) {
  std::vector<OrbitType> out;
  for (const Cone& c : X.fan().invariant_cones()) {
    SubQuotient q = sub_quotient(X.lattice(), span_lattice(c));
    out.push_back(OrbitType{c, signature_of(q.quotient)});
  }
  return out;
}

}  // namespace retoric
