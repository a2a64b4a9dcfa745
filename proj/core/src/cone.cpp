#include "retoric/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "retoric/errors.hpp"
#include "retoric/normal_form.hpp"

namespace retoric {

namespace {

// All size-k index subsets of {0..m-1}.
void for_each_subset(size_t m, size_t k, const std::function<void(const std::vector<size_t>&)>& f) {
  if (k > m) return;
  if (k == 0) {
    f({});
    return;
  }
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + m - k) break;
      if (i == 0) return;
    }
    if (idx[i] == i + m - k) return;
    ++idx[i];
    for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Facet normals of the cone spanned by the columns of G inside its own span,
// expressed in the given span coordinates.  Brute force over candidate
// hyperplanes spanned by generator subsets; exact and fine at this scale.
std::vector<IntVec> span_facet_normals(const IntMat& G_span, size_t k) {
  std::vector<IntVec> normals;
  if (k == 0) return normals;
  size_t m = G_span.cols();
  std::set<IntVec> seen;
  for_each_subset(m, k - 1, [&](const std::vector<size_t>& idx) {
    IntMat sub(k, idx.size());
    for (size_t j = 0; j < idx.size(); ++j) sub.set_col(j, G_span.col(idx[j]));
    IntMat ker = kernel(sub.transpose());
    if (ker.cols() != 1) return;  // subset does not span a hyperplane
    IntVec u = primitive_part(ker.col(0));
    bool nonneg = true, nonpos = true;
    for (size_t j = 0; j < m; ++j) {
      Int s = dot_vec(u, G_span.col(j));
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) return;
    if (nonpos) u = neg_vec(u);
    if (seen.insert(u).second) normals.push_back(u);
  });
  return normals;
}

}  // namespace

Cone Cone::origin(size_t ambient_rank) { return Cone(ambient_rank, {}); }

Cone::Cone(size_t ambient_rank, std::vector<IntVec> generators) : ambient_rank_(ambient_rank) {
  for (const IntVec& g : generators)
    if (g.size() != ambient_rank)
      fail(ErrorKind::ValidationError, "generator dimension does not match ambient rank");
  // Drop zeros, primitivize.
  std::vector<IntVec> gens;
  for (IntVec& g : generators) {
    if (is_zero_vec(g)) continue;
    gens.push_back(primitive_part(std::move(g)));
  }
  IntMat G = IntMat::from_columns(gens, ambient_rank);
  equations_ = kernel(G.transpose()).transpose();
  dim_ = ambient_rank - equations_.rows();
  if (dim_ == 0) {
    gens_.clear();
    return;
  }
  IntMat W = kernel(equations_);  // saturated span basis, n x dim
  IntMat G_span(dim_, gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    auto a = solve(W, gens[j]);
    if (!a) throw std::logic_error("generator escaped its own span");
    G_span.set_col(j, *a);
  }
  std::vector<IntVec> span_normals = span_facet_normals(G_span, dim_);
  // Strong convexity: the lineality space inside the span must vanish.
  IntMat N(span_normals.size(), dim_);
  for (size_t i = 0; i < span_normals.size(); ++i)
    for (size_t j = 0; j < dim_; ++j) N.at(i, j) = span_normals[i][j];
  if (kernel(N).cols() != 0)
    fail(ErrorKind::NotStronglyConvex, "cone contains a line");
  // Extreme ray filter: a generator is extreme iff its active normals cut
  // out a one-dimensional face.
  std::set<IntVec> extreme;
  for (size_t j = 0; j < gens.size(); ++j) {
    std::vector<IntVec> active;
    for (const IntVec& u : span_normals)
      if (dot_vec(u, G_span.col(j)) == 0) active.push_back(u);
    IntMat A(active.size(), dim_);
    for (size_t i = 0; i < active.size(); ++i)
      for (size_t l = 0; l < dim_; ++l) A.at(i, l) = active[i][l];
    if (rank(A) == dim_ - 1) extreme.insert(gens[j]);
  }
  gens_.assign(extreme.begin(), extreme.end());
  std::sort(gens_.begin(), gens_.end(), lex_less);
  // Ambient facet normals, canonical modulo the span equations.
  IntMat Wt = W.transpose();
  IntMat Ecols = equations_.transpose();
  for (const IntVec& u : span_normals) {
    auto n = solve(Wt, u);
    if (!n) throw std::logic_error("facet normal not liftable");
    normals_.push_back(reduce_mod_lattice(Ecols, *n));
  }
  std::sort(normals_.begin(), normals_.end(), lex_less);
}

bool Cone::contains(const IntVec& v) const {
  if (!is_zero_vec(equations_ * v)) return false;
  for (const IntVec& n : normals_)
    if (dot_vec(n, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& c) const {
  for (const IntVec& g : c.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone::interior_contains(const IntVec& v) const {
  if (!is_zero_vec(equations_ * v)) return false;
  for (const IntVec& n : normals_)
    if (dot_vec(n, v) <= 0) return false;
  return true;
}

bool Cone::operator==(const Cone& o) const {
  return ambient_rank_ == o.ambient_rank_ && gens_ == o.gens_;
}

bool Cone::operator<(const Cone& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return std::lexicographical_compare(gens_.begin(), gens_.end(), o.gens_.begin(), o.gens_.end(),
                                      lex_less);
}

std::vector<Cone> Cone::faces() const {
  size_t nn = normals_.size();
  // Active sets of normal subsets enumerate all faces; the scale (at most a
  // handful of facets per cone) keeps this cheap.
  std::vector<Cone> out;
  std::set<Cone> dedup;
  for (size_t mask = 0; mask < (size_t(1) << nn); ++mask) {
    std::vector<IntVec> sel;
    for (size_t i = 0; i < nn; ++i)
      if (mask & (size_t(1) << i)) sel.push_back(normals_[i]);
    std::vector<IntVec> face_gens;
    for (const IntVec& g : gens_) {
      bool active = true;
      for (const IntVec& n : sel)
        if (dot_vec(n, g) != 0) {
          active = false;
          break;
        }
      if (active) face_gens.push_back(g);
    }
    dedup.insert(Cone(ambient_rank_, face_gens));
  }
  dedup.insert(Cone::origin(ambient_rank_));
  out.assign(dedup.begin(), dedup.end());
  return out;
}

std::vector<Cone> Cone::facets() const {
  std::set<Cone> dedup;
  for (const IntVec& n : normals_) {
    std::vector<IntVec> face_gens;
    for (const IntVec& g : gens_)
      if (dot_vec(n, g) == 0) face_gens.push_back(g);
    dedup.insert(Cone(ambient_rank_, face_gens));
  }
  std::vector<Cone> out;
  for (const Cone& f : dedup)
    if (f.dim() + 1 == dim_) out.push_back(f);
  return out;
}

Cone Cone::face_containing(const IntVec& v) const {
  if (!contains(v)) fail(ErrorKind::NotInSupport, "vector is not in the cone");
  std::vector<IntVec> face_gens;
  for (const IntVec& g : gens_) {
    bool keep = true;
    for (const IntVec& n : normals_)
      if (dot_vec(n, v) == 0 && dot_vec(n, g) != 0) {
        keep = false;
        break;
      }
    if (keep) face_gens.push_back(g);
  }
  return Cone(ambient_rank_, face_gens);
}

bool Cone::is_face_of(const Cone& c) const {
  if (ambient_rank_ != c.ambient_rank_) return false;
  for (const IntVec& g : gens_)
    if (!c.contains(g)) return false;
  // Smallest face of c containing all our generators.
  std::vector<const IntVec*> active;
  for (const IntVec& n : c.normals_) {
    bool all_zero = true;
    for (const IntVec& g : gens_)
      if (dot_vec(n, g) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) active.push_back(&n);
  }
  std::vector<IntVec> face_gens;
  for (const IntVec& g : c.gens_) {
    bool ok = true;
    for (const IntVec* n : active)
      if (dot_vec(*n, g) != 0) {
        ok = false;
        break;
      }
    if (ok) face_gens.push_back(g);
  }
  return Cone(c.ambient_rank_, face_gens) == *this;
}

bool Cone::is_simplicial() const { return gens_.size() == dim_; }

bool Cone::is_smooth() const {
  if (!is_simplicial()) return false;
  if (dim_ == 0) return true;
  IntMat G = IntMat::from_columns(gens_, ambient_rank_);
  for (const Int& d : smith_form(G).invariant_factors)
    if (d != 1) return false;
  return true;
}

Cone Cone::intersect(const Cone& o) const {
  if (ambient_rank_ != o.ambient_rank_)
    fail(ErrorKind::ValidationError, "intersection of cones in different lattices");
  // Joint span.
  IntMat eqs(equations_.rows() + o.equations_.rows(), ambient_rank_);
  for (size_t i = 0; i < equations_.rows(); ++i)
    for (size_t j = 0; j < ambient_rank_; ++j) eqs.at(i, j) = equations_.at(i, j);
  for (size_t i = 0; i < o.equations_.rows(); ++i)
    for (size_t j = 0; j < ambient_rank_; ++j)
      eqs.at(equations_.rows() + i, j) = o.equations_.at(i, j);
  IntMat W = kernel(eqs);
  size_t m = W.cols();
  if (m == 0) return Cone::origin(ambient_rank_);
  // Both constraint systems restricted to the joint span.
  std::set<IntVec> rows;
  IntMat Wt = W.transpose();
  for (const IntVec& n : normals_) {
    IntVec u = primitive_part(Wt * n);
    if (!is_zero_vec(u)) rows.insert(u);
  }
  for (const IntVec& n : o.normals_) {
    IntVec u = primitive_part(Wt * n);
    if (!is_zero_vec(u)) rows.insert(u);
  }
  std::vector<IntVec> U(rows.begin(), rows.end());
  // Extreme ray candidates: kernels of (m-1)-subsets of the constraints.
  std::vector<IntVec> rays;
  std::set<IntVec> seen;
  auto try_ray = [&](const IntVec& w) {
    bool nonneg = true, nonpos = true;
    for (const IntVec& u : U) {
      Int s = dot_vec(u, w);
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    IntVec dir;
    if (nonneg)
      dir = w;
    else if (nonpos)
      dir = neg_vec(w);
    else
      return;
    if (seen.insert(dir).second) rays.push_back(W * dir);
  };
  for_each_subset(U.size(), m - 1, [&](const std::vector<size_t>& idx) {
    IntMat A(idx.size(), m);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < m; ++j) A.at(i, j) = U[idx[i]][j];
    IntMat ker = kernel(A);
    if (ker.cols() != 1) return;
    try_ray(primitive_part(ker.col(0)));
  });
  return Cone(ambient_rank_, rays);
}

Cone Cone::apply(const IntMat& mat) const {
  std::vector<IntVec> imgs;
  for (const IntVec& g : gens_) imgs.push_back(mat * g);
  return Cone(mat.rows(), imgs);
}

IntVec Cone::barycenter() const {
  IntVec s(ambient_rank_, Int(0));
  for (const IntVec& g : gens_) s = add_vec(s, g);
  return primitive_part(s);
}

}  // namespace retoric
