#include "retoric/classify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "retoric/errors.hpp"
#include "retoric/fan.hpp"
#include "retoric/integer.hpp"
#include "retoric/invariants.hpp"
#include "retoric/involution.hpp"
#include "retoric/matrix.hpp"

namespace retoric {

namespace {

CountPolynomial mono(int ex, int ey, int ez, long long coef = 1) {
  return CountPolynomial::monomial(ex, ey, ez, 0, Int(coef));
}

long long coeff_ll(const CountPolynomial& p, int ex, int ey, int ez) {
  return p.coeff(ex, ey, ez, 0).convert_to<long long>();
}

}  // namespace

// ---------------------------------------------------------------------------
// TopologicalType
// ---------------------------------------------------------------------------

TopologicalType TopologicalType::empty_set() {
  TopologicalType t;
  t.kind_ = Kind::Empty;
  return t;
}

TopologicalType TopologicalType::circle() {
  TopologicalType t;
  t.kind_ = Kind::Circle;
  return t;
}

TopologicalType TopologicalType::torus(int rank) {
  if (rank < 1) fail(ErrorKind::ValidationError, "torus rank must be positive");
  TopologicalType t;
  t.kind_ = Kind::Torus;
  t.a_ = rank;
  return t;
}

TopologicalType TopologicalType::non_orientable_surface(int genus) {
  if (genus < 1)
    fail(ErrorKind::ValidationError,
         "non-orientable genus must be positive");
  TopologicalType t;
  t.kind_ = Kind::NonOrientableSurface;
  t.a_ = genus;
  return t;
}

TopologicalType TopologicalType::sphere(int dim) {
  if (dim < 0) fail(ErrorKind::ValidationError, "sphere dimension must be non-negative");
  TopologicalType t;
  t.kind_ = Kind::Sphere;
  t.a_ = dim;
  return t;
}

TopologicalType TopologicalType::projective_plane() {
  TopologicalType t;
  t.kind_ = Kind::ProjectivePlane;
  return t;
}

TopologicalType TopologicalType::klein_bottle() {
  TopologicalType t;
  t.kind_ = Kind::KleinBottle;
  return t;
}

TopologicalType TopologicalType::product_with_circle(TopologicalType fibre) {
  TopologicalType t;
  t.kind_ = Kind::ProductWithCircle;
  t.inner_ = std::make_shared<const TopologicalType>(std::move(fibre));
  return t;
}

TopologicalType TopologicalType::lens_space(long long p, long long q) {
  if (p <= 0 || p % 2 != 0)
    fail(ErrorKind::ValidationError, "lens modulus must be a positive even integer");
  if (q < 1 || q > p / 2)
    fail(ErrorKind::ValidationError, "lens parameter must lie in [1, p/2]");
  TopologicalType t;
  t.kind_ = Kind::LensSpace;
  t.a_ = p;
  t.b_ = q;
  return t;
}

TopologicalType TopologicalType::connected_sum_3(int s2xs1, int rp2xs1, int rp3) {
  if (s2xs1 < 0 || rp2xs1 < 0 || rp3 < 0)
    fail(ErrorKind::ValidationError, "summand counts must be non-negative");
  if (s2xs1 + rp2xs1 + rp3 == 0)
    fail(ErrorKind::ValidationError, "connected sum needs at least one summand");
  TopologicalType t;
  t.kind_ = Kind::ConnectedSum3;
  t.a_ = s2xs1;
  t.b_ = rp2xs1;
  t.c_ = rp3;
  return t;
}

TopologicalType TopologicalType::klein_fiber_product() {
  TopologicalType t;
  t.kind_ = Kind::KleinFiberProduct;
  return t;
}

TopologicalType TopologicalType::mapping_torus_over_circle(
    TopologicalType fibre, CountPolynomial descriptor) {
  TopologicalType t;
  t.kind_ = Kind::MappingTorusOverCircle;
  t.inner_ = std::make_shared<const TopologicalType>(std::move(fibre));
  t.descriptor_ = std::move(descriptor);
  return t;
}

TopologicalType TopologicalType::unsupported(std::string reason) {
  TopologicalType t;
  t.kind_ = Kind::Unsupported;
  t.reason_ = std::move(reason);
  return t;
}

const TopologicalType& TopologicalType::inner() const {
  if (!inner_)
    throw std::logic_error("TopologicalType::inner: no fibre stored");
  return *inner_;
}

const CountPolynomial& TopologicalType::descriptor() const {
  if (!descriptor_)
    throw std::logic_error("TopologicalType::descriptor: no descriptor stored");
  return *descriptor_;
}

bool TopologicalType::operator==(const TopologicalType& other) const {
  if (kind_ != other.kind_ || a_ != other.a_ || b_ != other.b_ ||
      c_ != other.c_ || reason_ != other.reason_ ||
      descriptor_ != other.descriptor_)
    return false;
  if (static_cast<bool>(inner_) != static_cast<bool>(other.inner_)) return false;
  return !inner_ || *inner_ == *other.inner_;
}

std::string TopologicalType::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "empty";
    case Kind::Circle:
      return "S^1";
    case Kind::Torus:
      return "T^" + std::to_string(a_);
    case Kind::NonOrientableSurface:
      return "N_" + std::to_string(a_);
    case Kind::Sphere:
      return "S^" + std::to_string(a_);
    case Kind::ProjectivePlane:
      return "RP^2";
    case Kind::KleinBottle:
      return "Klein bottle";
    case Kind::ProductWithCircle:
      return inner().to_string() + " x S^1";
    case Kind::LensSpace:
      return "L(" + std::to_string(a_) + ";" + std::to_string(b_) + ")";
    case Kind::ConnectedSum3: {
      std::string out;
      auto add = [&out](long long n, const char* base) {
        if (n == 0) return;
        if (!out.empty()) out += " # ";
        if (n > 1) out += std::to_string(n) + "(" + std::string(base) + ")";
        else out += base;
      };
      add(a_, "S^2 x S^1");
      add(b_, "RP^2 x S^1");
      add(c_, "RP^3");
      return out;
    }
    case Kind::KleinFiberProduct:
      return "Klein bottle x_{S^1} Klein bottle";
    case Kind::MappingTorusOverCircle:
      return "mapping torus over S^1 with fibre " + inner().to_string() +
             " [e* = " + descriptor().to_string() + "]";
    case Kind::Unsupported:
      return "unsupported: " + reason_;
  }
  throw std::logic_error("TopologicalType::to_string: bad kind");
}

// ---------------------------------------------------------------------------
// Lens space parameter normalization
// ---------------------------------------------------------------------------

namespace {

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1 = 0, y1 = 0;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Inverse of a modulo m, or -1 when gcd(a, m) > 1.
long long mod_inverse(long long a, long long m) {
  long long x = 0, y = 0;
  if (egcd(((a % m) + m) % m, m, x, y) != 1) return -1;
  return ((x % m) + m) % m;
}

// Minimum of {q, m - q, q^{-1}, m - q^{-1}} modulo m within [1, m/2]; the
// inverse candidates are skipped when q is not a unit.
long long lens_canonical_rep(long long m, long long q) {
  long long best = std::numeric_limits<long long>::max();
  auto consider = [&](long long c) {
    c = ((c % m) + m) % m;
    if (c >= 1 && c <= m / 2) best = std::min(best, c);
  };
  consider(q);
  consider(m - q);
  long long inv = mod_inverse(q, m);
  if (inv >= 0) {
    consider(inv);
    consider(m - inv);
  }
  return best;
}

}  // namespace

std::pair<long long, long long> lens_normalize(long long p, long long q) {
  if (p <= 0 || p % 2 != 0)
    fail(ErrorKind::ValidationError, "lens modulus must be a positive even integer");
  long long qm = ((q % p) + p) % p;
  if (std::gcd(qm, p) != 1)
    fail(ErrorKind::NotCoprime, "lens parameter must be coprime to the modulus");
  return {p, lens_canonical_rep(p, qm)};
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

namespace {

// A two-dimensional invariant cone whose rays are exchanged by the involution.
bool is_exchanged_pair_cone(const InvolutiveLattice& L, const Cone& c) {
  if (c.dim() != 2) return false;
  const auto& g = c.generators();
  return g.size() == 2 && g[0] != g[1] && L.apply(g[0]) == g[1];
}

// Smoothness of every invariant cone except two-dimensional exchanged pairs,
// which may be singular: their index is absorbed into the gluing parameters
// on the branch of the classification that tolerates them.
bool core_smooth_up_to_exchanged_pairs(const RealToricVariety& X) {
  for (const Cone& c : X.fan().invariant_cones())
    if (!c.is_smooth() && !is_exchanged_pair_cone(X.lattice(), c))
      return false;
  return true;
}

const CountPolynomial& census_one() {
  static const CountPolynomial one = CountPolynomial::constant(Int(1));
  return one;
}

TopologicalType classify_surface(const RealToricVariety& X,
                                 const TypeSignature& sig) {
  if (sig.r == 0) {
    if (sig.p == 2) {
      // Pointwise-fixed torus: the real locus is the smooth compact toric
      // surface itself.
      if (orientable(X)) return TopologicalType::torus(2);
      return TopologicalType::non_orientable_surface(
          static_cast<int>(X.fan().rays().size()) - 2);
    }
    // One or two anti-invariant directions: a torus bundle over a torus,
    // trivial in dimension two.
    return TopologicalType::torus(2);
  }
  // Exchanged coordinate pair: decided by the census of invariant cones.
  CountPolynomial a = detail::ray_pattern_census(X.fan());
  if (a == census_one() + mono(0, 1, 0, 2)) return TopologicalType::sphere(2);
  if (a == census_one() + mono(1, 0, 0) + mono(0, 1, 0))
    return TopologicalType::projective_plane();
  if (a == census_one() + mono(1, 0, 0, 2)) return TopologicalType::klein_bottle();
  return TopologicalType::unsupported(
      "unrecognized invariant-cone census for a surface with an exchanged "
      "coordinate pair");
}

// The circle-fibred threefolds with one exchanged pair and one anti-invariant
// direction: a lens space family indexed by the position of the second
// exchanged-pair cone relative to the first.
TopologicalType classify_lens_branch(const RealToricVariety& X) {
  const auto& L = X.lattice();
  std::vector<std::pair<IntVec, IntVec>> pairs;
  for (const Cone& c : X.fan().invariant_cones())
    if (is_exchanged_pair_cone(L, c))
      pairs.push_back({c.generators()[0], c.generators()[1]});
  if (pairs.size() != 2)
    return TopologicalType::unsupported(
        "lens gluing requires exactly two exchanged-pair cones");

  auto negated = [](const IntVec& v) {
    IntVec w = v;
    for (Int& e : w) e = -e;
    return w;
  };

  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto& base = pairs[attempt];
    const auto& other = pairs[1 - attempt];
    Int det = determinant(IntMat::from_columns({base.first, base.second, other.first}));
    Int p_int = det < 0 ? -det : det;
    if (p_int == 0) {
      // Both pairs span the same plane; the gluing degenerates to the
      // identity framing and the total space is S^2 x S^1 (the h = 0 member
      // of the (h RP^2) x S^1 family).
      if ((other.first == negated(base.first) && other.second == negated(base.second)) ||
          (other.first == negated(base.second) && other.second == negated(base.first)))
        return TopologicalType::product_with_circle(TopologicalType::sphere(2));
      return TopologicalType::unsupported(
          "coplanar exchanged-pair cones in general position are not classified");
    }
    if (p_int > 1000000)
      return TopologicalType::unsupported("lens modulus exceeds the supported range");
    long long p = p_int.convert_to<long long>();

    // Solve  other.first - other.second == q (base.first - base.second)
    // modulo 2p, over the odd residues.
    IntVec da(L.rank()), db(L.rank());
    for (size_t i = 0; i < L.rank(); ++i) {
      da[i] = base.first[i] - base.second[i];
      db[i] = other.first[i] - other.second[i];
    }
    Int modulus = Int(2 * p);
    for (long long q = 1; q < 2 * p; q += 2) {
      bool ok = true;
      for (size_t i = 0; i < L.rank() && ok; ++i)
        ok = ((db[i] - Int(q) * da[i]) % modulus) == 0;
      if (ok)
        return TopologicalType::lens_space(2 * p, lens_canonical_rep(2 * p, q));
    }
    // The congruence can be solvable in only one of the two cone orders
    // (only a unimodular pair cone can serve as the base); retry swapped.
  }
  return TopologicalType::unsupported(
      "no odd residue matches the gluing of the exchanged-pair cones");
}

TopologicalType classify_threefold(const RealToricVariety& X,
                                   const TypeSignature& sig) {
  if (sig.r == 0) {
    if (sig.p == 3)
      return TopologicalType::unsupported(
          "split threefolds fall outside the classification");
    if (sig.p <= 1) return TopologicalType::torus(3);
    // One pointwise-fixed surface direction and one anti-invariant circle:
    // the real locus fibres trivially over the circle.
    RealToricVariety fibre = canonical_fibre(X);
    if (orientable(fibre)) return TopologicalType::torus(3);
    return TopologicalType::product_with_circle(
        TopologicalType::non_orientable_surface(
            static_cast<int>(fibre.fan().rays().size()) - 2));
  }

  if (sig.p == 1) {
    // (1;2)_1: surface-times-circle trichotomy, decided by the census of
    // invariant cones.
    CountPolynomial a = detail::ray_pattern_census(X.fan());
    if (a == census_one() + mono(0, 1, 0, 2)) return classify_lens_branch(X);
    if (a == census_one() + mono(1, 0, 0) + mono(0, 1, 0))
      return TopologicalType::product_with_circle(TopologicalType::projective_plane());
    if (a == census_one() + mono(1, 0, 0, 2))
      return TopologicalType::product_with_circle(
          TopologicalType::non_orientable_surface(2));
    return TopologicalType::unsupported(
        "unrecognized invariant-cone census for a threefold with one "
        "exchanged pair and one anti-invariant direction");
  }

  // (2;1)_1: Seifert-type threefolds, decided by the orbit census.
  CountPolynomial es = e_star_polynomial(X);
  const long long m = coeff_ll(es, 0, 0, 1);  // exceptional loci of the action
  const long long t = coeff_ll(es, 1, 1, 0);  // special exceptional components
  const long long h = coeff_ll(es, 1, 0, 0);  // circles of fixed points
  const long long u = m - t - h;              // plain exceptional orbits
  if (u < 0)
    throw std::logic_error(
        "orbit census inconsistent: negative exceptional-orbit count");

  if (t + h == 0) {
    // Free-modulo-finite circle action on an orientation-twisted bundle: the
    // only realizable census is the pillow's.
    if (es != mono(1, 0, 1) + mono(0, 0, 1, 4) + mono(0, 1, 0, 4))
      return TopologicalType::unsupported(
          "torus-free circle action with an unrecognized orbit census");
    return TopologicalType::klein_fiber_product();
  }
  if (es == mono(1, 0, 1) + mono(0, 0, 1) + mono(1, 1, 0) + mono(0, 1, 0, 2))
    return TopologicalType::unsupported(
        "orbit census excluded by the realizability constraints");
  if (es == mono(1, 0, 1) + mono(0, 0, 1, 2) + mono(1, 1, 0) + mono(0, 1, 0, 3))
    return TopologicalType::connected_sum_3(0, 1, 0);
  if (es == mono(1, 0, 1) + mono(0, 0, 1, 2) + mono(1, 1, 0, 2) + mono(0, 1, 0, 4))
    return TopologicalType::product_with_circle(TopologicalType::klein_bottle());
  if (h > 0) {
    if (h - 1 + t + u == 0)
      throw std::logic_error("orbit census inconsistent: empty connected sum");
    return TopologicalType::connected_sum_3(static_cast<int>(h - 1),
                                            static_cast<int>(t),
                                            static_cast<int>(u));
  }
  // No fixed circles: the variety is properly wound and the real locus is a
  // surface bundle over the circle; the orbit census pins the monodromy.
  TopologicalType fibre = classify(canonical_fibre(X));
  return TopologicalType::mapping_torus_over_circle(std::move(fibre), es);
}

}  // namespace

TopologicalType classify(const RealToricVariety& X) {
  if (!compact_real_locus(X))
    fail(ErrorKind::PreconditionFailed, "compact_real_locus");
  TypeSignature sig = signature_of(X.lattice());
  const bool relax = sig == TypeSignature{1, 2, 1};
  if (relax ? !core_smooth_up_to_exchanged_pairs(X) : !smooth_topological_core(X))
    fail(ErrorKind::PreconditionFailed, "smooth_topological_core");
  if (!has_real_point(X)) return TopologicalType::empty_set();

  const size_t n = X.dim();
  if (n == 0)
    return TopologicalType::unsupported("dimension 0 is below the classified range 1..3");
  if (n > 3)
    return TopologicalType::unsupported("dimension " + std::to_string(n) +
                                        " is above the classified range 1..3");
  if (n == 1) return TopologicalType::circle();
  if (n == 2) return classify_surface(X, sig);
  return classify_threefold(X, sig);
}

// ---------------------------------------------------------------------------
// circle_action_census
// ---------------------------------------------------------------------------

CircleActionCensus circle_action_census(const RealToricVariety& X) {
  if (!compact_real_locus(X))
    fail(ErrorKind::PreconditionFailed, "compact_real_locus");
  if (!smooth_topological_core(X))
    fail(ErrorKind::PreconditionFailed, "smooth_topological_core");
  if (!has_real_point(X))
    fail(ErrorKind::PreconditionFailed, "has_real_point");
  const auto& L = X.lattice();
  if (signature_of(L) != TypeSignature{2, 1, 1})
    fail(ErrorKind::PreconditionFailed, "lattice of type (2;1)_1");

  CohomologySpace h2 = cohomology(L, 2);
  auto vanishes = [&h2](const IntVec& v) {
    BitVec cls = h2.class_of(v);
    return std::all_of(cls.begin(), cls.end(),
                       [](uint8_t b) { return b == 0; });
  };

  CircleActionCensus census;
  for (const Cone& c : X.fan().invariant_cones()) {
    if (c.dim() == 1) {
      if (vanishes(c.generators()[0])) ++census.t;
    } else if (c.dim() == 2) {
      if (is_exchanged_pair_cone(L, c))
        ++census.h;
      else if (!vanishes(c.generators()[0]) && !vanishes(c.generators()[1]))
        ++census.u;
    }
  }

  CountPolynomial es = e_star_polynomial(X);
  if (static_cast<long long>(census.t) != coeff_ll(es, 1, 1, 0) ||
      static_cast<long long>(census.h) != coeff_ll(es, 1, 0, 0) ||
      static_cast<long long>(census.t + census.h + census.u) !=
          coeff_ll(es, 0, 0, 1))
    throw std::logic_error(
        "circle-action census disagrees with the orbit census");
  return census;
}

// ---------------------------------------------------------------------------
// realize_e_star
// ---------------------------------------------------------------------------

RealToricVariety realize_e_star(const CountPolynomial& census) {
  long long exz = 0, m = 0, t = 0, h = 0, ey = 0, e00 = 0;
  for (const auto& [exp, coef] : census.terms()) {
    if (coef < 0)
      fail(ErrorKind::ConstraintViolated,
           "census coefficients must be non-negative");
    long long c = coef.convert_to<long long>();
    const int ex = exp[0], eyy = exp[1], ez = exp[2], et = exp[3];
    if (et == 0 && ex == 1 && eyy == 0 && ez == 1) exz = c;
    else if (et == 0 && ex == 0 && eyy == 0 && ez == 1) m = c;
    else if (et == 0 && ex == 1 && eyy == 1 && ez == 0) t = c;
    else if (et == 0 && ex == 1 && eyy == 0 && ez == 0) h = c;
    else if (et == 0 && ex == 0 && eyy == 1 && ez == 0) ey = c;
    else if (et == 0 && ex == 0 && eyy == 0 && ez == 0) e00 = c;
    else
      fail(ErrorKind::ConstraintViolated,
           "monomial outside the orbit census shape for type (2;1)_1");
  }
  if (exz != 1)
    fail(ErrorKind::ConstraintViolated, "e^1_{2,1} = 1");
  if (e00 != 2 * h)
    fail(ErrorKind::ConstraintViolated, "e^0_{0,0} = 2 e^0_{1,0}");
  if (m + t + h != ey + e00)
    fail(ErrorKind::ConstraintViolated,
         "e^1_{1,1} + e^0_{1,1} + e^0_{1,0} = e^0_{0,1} + e^0_{0,0}");
  if (m < t + h)
    fail(ErrorKind::ConstraintViolated, "e^1_{1,1} >= e^0_{1,1} + e^0_{1,0}");
  if (ey + e00 < 3)
    fail(ErrorKind::ConstraintViolated, "e^0_{0,1} + e^0_{0,0} >= 3");
  if (t + h == 0 && m != 4)
    fail(ErrorKind::ConstraintViolated,
         "e^0_{1,1} + e^0_{1,0} = 0 requires e^1_{1,1} = 4");

  InvolutiveLattice L(3, IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});

  if (t + h == 0) {
    // The pillow: four rays in the invariant plane, none with vanishing
    // cohomology class.
    std::vector<Cone> cones;
    IntVec w{0, 0, 1}, wu{1, 1, 1}, nw{0, 0, -1}, wnu{-1, -1, 1};
    cones.emplace_back(3, std::vector<IntVec>{wnu, w});
    cones.emplace_back(3, std::vector<IntVec>{w, wu});
    cones.emplace_back(3, std::vector<IntVec>{wu, nw});
    cones.emplace_back(3, std::vector<IntVec>{nw, wnu});
    return RealToricVariety(EquivariantFan(L, std::move(cones)));
  }

  // General case: a complete unimodular fan in the invariant plane with m
  // rays of odd height (non-vanishing class) and k = t + h rays of even
  // height (vanishing class), followed by the replacement of the first h
  // even-height rays by exchanged-pair cones.
  const long long k = t + h;
  if (m < 2)
    throw std::logic_error("realize_e_star: constraints force m >= 2");

  // Plane rays (a, b), meaning a(dx+dy) + b dz; b parity = cohomology class.
  struct PlaneRay {
    long long a, b;
    bool vanishing;
  };
  std::vector<PlaneRay> ring;
  ring.push_back({0, 1, false});
  for (long long i = 1; i <= m - 2; ++i) {
    if (i <= k - 2) ring.push_back({2 * i - 1, 2, true});
    ring.push_back({i, 1, false});
  }
  ring.push_back({1, 0, true});
  ring.push_back({-1, -1, false});
  if (k >= 2) ring.push_back({-1, 0, true});

  // Replacement order of the even-height rays: (1,0), (-1,0), (1,2), (3,2)...
  std::vector<size_t> vanishing_order;
  for (size_t i = 0; i < ring.size(); ++i)
    if (ring[i].a == 1 && ring[i].b == 0) vanishing_order.push_back(i);
  for (size_t i = 0; i < ring.size(); ++i)
    if (ring[i].a == -1 && ring[i].b == 0) vanishing_order.push_back(i);
  for (long long a = 1;; a += 2) {
    bool found = false;
    for (size_t i = 0; i < ring.size(); ++i)
      if (ring[i].b == 2 && ring[i].a == a) {
        vanishing_order.push_back(i);
        found = true;
      }
    if (!found) break;
  }
  if (static_cast<long long>(vanishing_order.size()) != k)
    throw std::logic_error("realize_e_star: wrong number of even-height rays");
  std::vector<bool> replaced(ring.size(), false);
  for (long long i = 0; i < h; ++i) replaced[vanishing_order[i]] = true;

  auto lift = [](const PlaneRay& r) { return IntVec{r.a, r.a, r.b}; };
  // Balanced lift of an even-height plane ray (alpha, 2 beta), alpha odd, to
  // an exchanged pair: ((alpha+1)/2, (alpha-1)/2, beta) and its image.  Both
  // vectors are primitive and the pair cone is unimodular.
  auto lift_pair = [](const PlaneRay& r) {
    long long alpha = r.a, beta = r.b / 2;
    IntVec v{(alpha + 1) / 2, (alpha - 1) / 2, beta};
    IntVec tv{(alpha - 1) / 2, (alpha + 1) / 2, beta};
    return std::make_pair(v, tv);
  };

  std::vector<Cone> maximal;
  for (size_t i = 0; i < ring.size(); ++i) {
    size_t j = (i + 1) % ring.size();
    std::vector<IntVec> gens;
    if (replaced[i]) {
      auto [v, tv] = lift_pair(ring[i]);
      gens.push_back(std::move(v));
      gens.push_back(std::move(tv));
    } else {
      gens.push_back(lift(ring[i]));
    }
    if (replaced[j]) {
      auto [v, tv] = lift_pair(ring[j]);
      gens.push_back(std::move(v));
      gens.push_back(std::move(tv));
    } else {
      gens.push_back(lift(ring[j]));
    }
    maximal.emplace_back(3, std::move(gens));
  }
  return RealToricVariety(EquivariantFan(L, std::move(maximal)));
}

}  // namespace retoric
