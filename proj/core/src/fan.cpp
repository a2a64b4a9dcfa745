#include "retoric/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "retoric/errors.hpp"
#include "retoric/normal_form.hpp"

namespace retoric {

namespace {

Cone active_face(const Cone& c, const IntVec& n) {
  std::vector<IntVec> gens;
  for (const IntVec& g : c.generators())
    if (dot_vec(n, g) == 0) gens.push_back(g);
  return Cone(c.ambient_rank(), gens);
}

// Is c intersect d a common face of both?  Fast path: find a facet normal of
// one cone with the other entirely on its non-positive side; the
// intersection then lives in the two active faces and the check recurses
// into strictly smaller cones.  When the separation is strict the cones meet
// only at the origin, which is a face of every strongly convex cone, so the
// pair passes without building the faces.  When no separator exists the
// honest intersection is computed.
bool intersection_is_common_face(const Cone& c, const Cone& d) {
  if (c == d) return true;
  if (c.is_origin() || d.is_origin()) return true;
  const IntVec* sep_n = nullptr;  // first non-strict separator seen
  auto scan = [&](const Cone& a, const Cone& b) {
    for (const IntVec& n : a.facet_normals()) {
      bool sep = true, strict = true;
      for (const IntVec& g : b.generators()) {
        const Int s = dot_vec(n, g);
        if (s > 0) {
          sep = false;
          break;
        }
        if (s == 0) strict = false;
      }
      if (!sep) continue;
      if (strict) return true;
      if (sep_n == nullptr) sep_n = &n;
    }
    return false;
  };
  if (scan(c, d) || scan(d, c)) return true;
  if (sep_n != nullptr)
    return intersection_is_common_face(active_face(c, *sep_n), active_face(d, *sep_n));
  Cone inter = c.intersect(d);
  return inter.is_face_of(c) && inter.is_face_of(d);
}

}  // namespace

FanValidation validate_fan(const InvolutiveLattice& lattice, const std::vector<Cone>& cones) {
  for (const Cone& c : cones) {
    if (c.ambient_rank() != lattice.rank())
      return {false, "AmbientMismatch: cone rank differs from lattice rank"};
  }
  // Pairwise intersections must be common faces; checking the given cones
  // suffices, faces then inherit the property.
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j)
      if (!intersection_is_common_face(cones[i], cones[j]))
        return {false, "IntersectionNotFace: cones " + std::to_string(i) + " and " +
                           std::to_string(j) + " overlap without meeting in a common face"};
  // Stability: the involution must permute the closure.
  std::set<Cone> closure;
  for (const Cone& c : cones)
    for (const Cone& f : c.faces()) closure.insert(f);
  for (const Cone& c : closure) {
    Cone image = c.apply(lattice.tau());
    if (!closure.count(image))
      return {false, "NotStable: the involution does not preserve the fan"};
  }
  return {true, ""};
}

EquivariantFan::EquivariantFan(InvolutiveLattice lattice, std::vector<Cone> cones)
    : lattice_(std::move(lattice)) {
  FanValidation v = validate_fan(lattice_, cones);
  if (!v.ok) fail(ErrorKind::NotAFan, v.violation);
  std::set<Cone> closure;
  std::set<Cone> proper_faces;
  for (const Cone& c : cones) {
    for (const Cone& f : c.faces()) {
      closure.insert(f);
      if (!(f == c)) proper_faces.insert(f);
    }
  }
  if (closure.empty()) closure.insert(Cone::origin(lattice_.rank()));
  closure_.assign(closure.begin(), closure.end());
  for (const Cone& c : closure_)
    if (!proper_faces.count(c)) maximal_.push_back(c);
  std::set<IntVec> rays;
  for (const Cone& c : closure_)
    if (c.dim() == 1) rays.insert(c.generators().front());
  rays_.assign(rays.begin(), rays.end());
}

EquivariantFan EquivariantFan::trivial(InvolutiveLattice lattice) {
  size_t n = lattice.rank();
  return EquivariantFan(std::move(lattice), {Cone::origin(n)});
}

bool EquivariantFan::contains_cone(const Cone& c) const {
  return std::binary_search(closure_.begin(), closure_.end(), c);
}

Cone EquivariantFan::tau_image(const Cone& c) const { return c.apply(lattice_.tau()); }

bool EquivariantFan::is_invariant(const Cone& c) const { return tau_image(c) == c; }

bool EquivariantFan::pointwise_fixed(const Cone& c) const {
  for (const IntVec& g : c.generators())
    if (lattice_.apply(g) != g) return false;
  return true;
}

std::vector<Cone> EquivariantFan::invariant_cones() const {
  std::vector<Cone> out;
  for (const Cone& c : closure_)
    if (is_invariant(c)) out.push_back(c);
  return out;
}

bool EquivariantFan::supports(const IntVec& v) const {
  for (const Cone& c : maximal_)
    if (c.contains(v)) return true;
  return false;
}

bool EquivariantFan::is_complete() const {
  size_t n = lattice_.rank();
  if (n == 0) return true;
  for (const Cone& c : maximal_)
    if (c.dim() != n) return false;
  if (maximal_.empty()) return false;
  // Every wall must separate exactly two maximal cones; together with purity
  // and the fan axioms this forces the support to be everything.
  std::map<Cone, int> wall_count;
  for (const Cone& c : maximal_)
    for (const Cone& w : c.facets()) ++wall_count[w];
  for (const auto& [w, count] : wall_count)
    if (count != 2) return false;
  return true;
}

bool EquivariantFan::is_smooth() const {
  for (const Cone& c : maximal_)
    if (!c.is_smooth()) return false;
  return true;
}

bool EquivariantFan::operator==(const EquivariantFan& o) const {
  return lattice_ == o.lattice_ && maximal_ == o.maximal_;
}

std::vector<Cone> stellar_cones(const std::vector<Cone>& maximal, const IntVec& v) {
  std::vector<Cone> out;
  for (const Cone& e : maximal) {
    if (!e.contains(v)) {
      out.push_back(e);
      continue;
    }
    for (const Cone& d : e.facets()) {
      if (d.contains(v)) continue;
      std::vector<IntVec> gens = d.generators();
      gens.push_back(v);
      out.push_back(Cone(e.ambient_rank(), gens));
    }
  }
  // Drop cones that are faces of other cones so the list is irredundant.
  std::vector<Cone> result;
  for (size_t i = 0; i < out.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < out.size() && !redundant; ++j)
      if (i != j && out[i].is_face_of(out[j]) && !(out[i] == out[j] && i < j)) redundant = true;
    if (!redundant) result.push_back(out[i]);
  }
  return result;
}

EquivariantFan stellar_subdivision(const EquivariantFan& fan, const IntVec& v) {
  if (is_zero_vec(v)) fail(ErrorKind::ValidationError, "cannot subdivide at the zero vector");
  IntVec w = primitive_part(v);
  if (!fan.supports(w)) fail(ErrorKind::NotInSupport, "vector lies outside the fan support");
  return EquivariantFan(fan.lattice(), stellar_cones(fan.maximal_cones(), w));
}

namespace {

void extend_flags(const Cone& top, std::vector<IntVec>& barycenters, std::vector<Cone>& out) {
  barycenters.push_back(top.barycenter());
  std::vector<Cone> facets = top.facets();
  bool leaf = true;
  for (const Cone& f : facets) {
    if (f.dim() == 0) continue;
    leaf = false;
    extend_flags(f, barycenters, out);
  }
  if (leaf) out.push_back(Cone(top.ambient_rank(), barycenters));
  barycenters.pop_back();
}

}  // namespace

EquivariantFan barycentric_subdivision(const EquivariantFan& fan) {
  std::vector<Cone> chains;
  for (const Cone& e : fan.maximal_cones()) {
    if (e.dim() == 0) {
      chains.push_back(e);
      continue;
    }
    std::vector<IntVec> barycenters;
    extend_flags(e, barycenters, chains);
  }
  return EquivariantFan(fan.lattice(), chains);
}

EquivariantFan restrict_fan(const EquivariantFan& fan, const IntMat& sub) {
  size_t n = fan.ambient_rank(), s = sub.cols();
  (void)sub_quotient(fan.lattice(), sub);  // validates stability and primitivity
  IntMat sub_tau(s, s);
  for (size_t j = 0; j < s; ++j) {
    auto a = solve(sub, fan.lattice().apply(sub.col(j)));
    if (!a) fail(ErrorKind::NotStable, "sublattice is not preserved by the involution");
    for (size_t i = 0; i < s; ++i) sub_tau.at(i, j) = (*a)[i];
  }
  InvolutiveLattice restricted(s, sub_tau);
  // Equations cutting out span(sub): kernel of sub^T gives the orthogonal
  // complement generators.
  IntMat perp = kernel(sub.transpose());
  std::set<Cone> pieces;
  for (const Cone& c : fan.maximal_cones()) {
    // Intersect c with span(sub): add the span equations of sub to c's
    // system and enumerate rays in that smaller space.
    IntMat all_eqs(c.span_equations().rows() + perp.cols(), n);
    for (size_t i = 0; i < c.span_equations().rows(); ++i)
      for (size_t j = 0; j < n; ++j) all_eqs.at(i, j) = c.span_equations().at(i, j);
    for (size_t i = 0; i < perp.cols(); ++i)
      for (size_t j = 0; j < n; ++j) all_eqs.at(c.span_equations().rows() + i, j) = perp.at(j, i);
    IntMat W = kernel(all_eqs);
    size_t m = W.cols();
    std::vector<IntVec> rays;
    if (m > 0) {
      std::set<IntVec> rows, seen;
      IntMat Wt = W.transpose();
      for (const IntVec& nm : c.facet_normals()) {
        IntVec u = primitive_part(Wt * nm);
        if (!is_zero_vec(u)) rows.insert(u);
      }
      std::vector<IntVec> U(rows.begin(), rows.end());
      std::function<void(size_t, size_t, std::vector<size_t>&)> rec =
          [&](size_t start, size_t need, std::vector<size_t>& idx) {
            if (need == 0) {
              IntMat A(idx.size(), m);
              for (size_t i = 0; i < idx.size(); ++i)
                for (size_t j = 0; j < m; ++j) A.at(i, j) = U[idx[i]][j];
              IntMat ker = kernel(A);
              if (ker.cols() != 1) return;
              IntVec w = primitive_part(ker.col(0));
              bool nonneg = true, nonpos = true;
              for (const IntVec& u : U) {
                Int sgn = dot_vec(u, w);
                if (sgn < 0) nonneg = false;
                if (sgn > 0) nonpos = false;
              }
              if (!nonneg && !nonpos) return;
              if (nonpos) w = neg_vec(w);
              if (seen.insert(w).second) rays.push_back(W * w);
              return;
            }
            for (size_t i = start; i + need <= U.size(); ++i) {
              idx.push_back(i);
              rec(i + 1, need - 1, idx);
              idx.pop_back();
            }
          };
      std::vector<size_t> idx;
      rec(0, m - 1, idx);
    }
    // Express the rays in the sublattice basis.
    std::vector<IntVec> sub_rays;
    for (const IntVec& rv : rays) {
      auto a = solve(sub, rv);
      if (!a) {
        // The ray lies in span(sub) over Q; scale into the sublattice.
        // Since sub is primitive this cannot fail.
        fail(ErrorKind::NotPrimitive, "restricted ray escapes the sublattice");
      }
      sub_rays.push_back(*a);
    }
    pieces.insert(Cone(s, sub_rays));
  }
  std::vector<Cone> list(pieces.begin(), pieces.end());
  FanValidation val = validate_fan(restricted, list);
  if (!val.ok) fail(ErrorKind::NotAFan, "restriction is not a fan: " + val.violation);
  return EquivariantFan(restricted, list);
}

EquivariantFan image_fan(const EquivariantFan& fan, const IntMat& projection,
                         const InvolutiveLattice& target) {
  if (!(target.tau() * projection == projection * fan.lattice().tau()))
    fail(ErrorKind::NotStable, "projection does not intertwine the involutions");
  std::set<Cone> images;
  for (const Cone& c : fan.maximal_cones()) images.insert(c.apply(projection));
  std::vector<Cone> list(images.begin(), images.end());
  FanValidation val = validate_fan(target, list);
  if (!val.ok) fail(ErrorKind::NotAFan, "image is not a fan: " + val.violation);
  return EquivariantFan(target, list);
}

}  // namespace retoric
