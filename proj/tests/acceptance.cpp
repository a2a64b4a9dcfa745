// Acceptance gate: ten frozen criteria, each printed as a single PASS/FAIL
// line.  All comparisons are exact — no tolerances anywhere.  The binary
// exits non-zero when any criterion fails, and a failing line names what
// diverged, so a red run is diagnosable from its output alone.

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "example_varieties.hpp"
#include "random_inputs.hpp"
#include "retoric/classify.hpp"
#include "retoric/errors.hpp"
#include "retoric/invariants.hpp"
#include "retoric/variety.hpp"

using namespace retoric;
using namespace retoric::testing;

namespace {

CountPolynomial mono(int ex, int ey, int ez = 0, long long c = 1) {
  return CountPolynomial::monomial(ex, ey, ez, 0, Int(c));
}

// Orbit census e* = xz + m z + t xy + h x + (m+t-h) y + 2h of the realizable
// circle-action members; (m, t, h) ranges over kMembers below.
CountPolynomial member_census(int m, int t, int h) {
  return mono(1, 0, 1) + mono(0, 0, 1, m) + mono(1, 1, 0, t) + mono(1, 0, 0, h) +
         mono(0, 1, 0, m + t - h) + CountPolynomial::constant(Int(2 * h));
}

// Every census with all six coefficients <= 4 (the criterion-9 cap).
const std::vector<std::array<int, 3>> kMembers = {
    {4, 0, 0}, {2, 1, 0}, {3, 1, 0}, {2, 2, 0}, {2, 0, 1}, {3, 0, 1},
    {4, 0, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}, {3, 2, 1}, {2, 0, 2},
    {3, 0, 2}, {4, 0, 2}, {3, 1, 2}, {4, 1, 2}, {4, 2, 2}};

// Collects failure descriptions; a criterion passes when none accumulate.
struct Failures {
  std::vector<std::string> items;

  void require(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }

  std::string message(size_t cap = 5) const {
    std::ostringstream out;
    for (size_t i = 0; i < items.size() && i < cap; ++i) {
      if (i) out << "; ";
      out << items[i];
    }
    if (items.size() > cap) out << "; ... (" << items.size() << " failures total)";
    return out.str();
  }
};

// Substitutes y = 1 (the census of the canonical fibre forgets y).
CountPolynomial at_y1(const CountPolynomial& e) {
  std::array<std::optional<CountPolynomial>, 4> repl;
  repl[1] = CountPolynomial::constant(Int(1));
  return e.substitute(repl);
}

// --- criterion 1 -----------------------------------------------------------

std::string criterion_golden_classifications() {
  Failures f;
  // Curves: the three real forms of the projective line.
  f.require(classify(split_p1()) == TopologicalType::circle(), "split P^1");
  f.require(classify(conic(false)) == TopologicalType::circle(), "anisotropic conic");
  f.require(classify(conic(true)) == TopologicalType::empty_set(), "twisted conic");

  // Split surfaces.
  f.require(classify(split_p2()) == TopologicalType::non_orientable_surface(1),
            "split P^2");
  f.require(classify(split_p1xp1()) == TopologicalType::torus(2), "split P^1 x P^1");
  f.require(classify(hirzebruch(2)) == TopologicalType::torus(2), "Hirzebruch F_2");

  // The three surface censuses with an exchanged coordinate pair.
  f.require(a_polynomial(weil_p1()) == mono(0, 0) + mono(0, 1, 0, 2),
            "a[Weil restriction of P^1]");
  f.require(classify(weil_p1()) == TopologicalType::sphere(2), "Weil restriction of P^1");
  f.require(a_polynomial(conj_p2()) == mono(0, 0) + mono(1, 0) + mono(0, 1),
            "a[conjugation P^2]");
  f.require(classify(conj_p2()) == TopologicalType::projective_plane(), "conjugation P^2");
  f.require(a_polynomial(klein_surface()) == mono(0, 0) + mono(1, 0, 0, 2),
            "a[Klein surface]");
  f.require(classify(klein_surface()) == TopologicalType::klein_bottle(), "Klein surface");

  // The fake quadric: twisted, no fixed curve, exactly two real fixed points.
  const RealToricVariety F = fake_p1p1();
  f.require(cellular_dimension(F) == std::optional<size_t>(0),
            "fake quadric cellular dimension");
  size_t real_pieces = 0;
  for (const Cone& c : F.fan().invariant_cones()) {
    if (c.dim() != 2) continue;
    const RealToricVariety piece(EquivariantFan(F.lattice(), {c}),
                                 F.twist().representative());
    if (has_real_point(piece)) ++real_pieces;
  }
  f.require(real_pieces == 2, "fake quadric real fixed-point orbits");
  return f.message();
}

// --- criterion 2 -----------------------------------------------------------

std::string criterion_betti_polynomials() {
  Failures f;
  const CountPolynomial one = CountPolynomial::constant(Int(1));
  const CountPolynomial tv = CountPolynomial::var_t();
  f.require(virtual_poincare(split_p1()) == tv + one, "beta[split P^1]");
  f.require(virtual_poincare(weil_p1()) == tv * tv + one, "beta[Weil restriction]");
  f.require(virtual_poincare(split_p2()) == tv * tv + tv + one, "beta[split P^2]");
  f.require(virtual_poincare(klein_surface()) ==
                tv * tv + tv + tv + one,
            "beta[Klein surface]");
  return f.message();
}

// --- criterion 3 -----------------------------------------------------------

std::string criterion_pillow() {
  Failures f;
  f.require(e_star_polynomial(pillow()) == mono(1, 0, 1) + mono(0, 0, 1, 4) +
                                               mono(0, 1, 0, 4),
            "e*[pillow]");
  f.require(classify(pillow()) == TopologicalType::klein_fiber_product(),
            "classify(pillow)");
  return f.message();
}

// --- criterion 4 -----------------------------------------------------------

std::string criterion_lens_spaces() {
  Failures f;
  f.require(classify(lens_variety(1, 0, -1)) == TopologicalType::lens_space(2, 1),
            "(1,0,-1) -> L(2;1)");
  f.require(classify(lens_variety(2, 0, -1)) == TopologicalType::lens_space(4, 1),
            "(2,0,-1) -> L(4;1)");
  f.require(classify(lens_variety(3, 1, -2)) == TopologicalType::lens_space(6, 3),
            "(3,1,-2) -> L(6;3)");
  f.require(lens_normalize(4, 3) == std::pair<long long, long long>(4, 1),
            "lens_normalize(4,3)");
  return f.message();
}

// --- criterion 5 -----------------------------------------------------------

std::string criterion_cohomology_dimensions() {
  Failures f;
  Rng rng(9205);
  for (int trial = 0; trial < 200; ++trial) {
    const RandomInvolution ri = random_involution(rng, 6);
    const TypeSignature sig = ri.signature;
    std::ostringstream tag;
    tag << "trial " << trial << " " << sig.to_string();

    f.require(signature_of(ri.lattice) == sig, tag.str() + ": signature");
    f.require(cohomology(ri.lattice, 1).dim() == sig.q - sig.r,
              tag.str() + ": dim H^1");
    f.require(cohomology(ri.lattice, 2).dim() == sig.p - sig.r,
              tag.str() + ": dim H^2");

    const Decomposition d = decompose(ri.lattice);
    const Int det = determinant(d.basis_change);
    f.require(det == 1 || det == -1, tag.str() + ": unimodular basis change");
    f.require(d.signature == sig, tag.str() + ": decomposition signature");
    f.require(ri.lattice.tau() * d.basis_change ==
                  d.basis_change * model_involution(d.signature),
              tag.str() + ": canonical block form");
  }
  return f.message();
}

// --- criterion 6 -----------------------------------------------------------

std::string criterion_winding_resolution() {
  Failures f;
  Rng rng(9206);
  int improperly_wound = 0, properly = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool complete = trial % 2 == 0;
    const EquivariantFan fan = random_smooth_fan(rng, 4, complete, rand_int(rng, 0, 3));
    const RealToricVariety X{fan};
    std::ostringstream tag;
    tag << "trial " << trial;

    const RealToricVariety bary = resolve_winding_barycentric(X);
    const RealToricVariety blw = resolve_winding_blowup(X);
    f.require(properly_wound(bary), tag.str() + ": barycentric output wound");
    f.require(properly_wound(blw), tag.str() + ": blow-up output wound");
    f.require(canonical_fibre(blw).fan() == canonical_fibre(X).fan(),
              tag.str() + ": blow-up fibre fan");
    f.require(smooth_topological_core(unwinding(blw).variety),
              tag.str() + ": unwound blow-up core smooth");

    if (properly_wound(X)) {
      ++properly;
      f.require(smooth_topological_core(unwinding(X).variety),
                tag.str() + ": unwound wound input core smooth");
    } else {
      ++improperly_wound;
      f.require(!smooth_topological_core(unwinding(X).variety),
                tag.str() + ": unwound unwound-able input core singular");
    }
  }
  f.require(properly > 0 && improperly_wound > 0, "corpus covers both windings");
  return f.message();
}

// --- criterion 7 -----------------------------------------------------------

void check_count_identities(const RealToricVariety& X, const std::string& tag,
                            Failures& f) {
  f.require(compact_real_locus(X), tag + ": compact");

  const CountPolynomial e = e_polynomial(X);
  const CountPolynomial a = a_polynomial(X);
  const TypeSignature sig = signature_of(X.lattice());
  const int p = int(sig.p), q = int(sig.q);

  // Coefficient-wise form of a[X] = x^p (y/x)^q e[X](1/x; x/y).
  bool ray_census_ok = true;
  for (int alpha = 0; alpha <= p + q; ++alpha) {
    for (int beta = 0; beta <= q; ++beta) {
      const Int lhs = a.coeff(alpha, beta, 0, 0);
      const Int rhs =
          (p - alpha - beta >= 0) ? e.coeff(p - alpha - beta, q - beta, 0, 0) : Int(0);
      ray_census_ok = ray_census_ok && lhs == rhs;
    }
  }
  f.require(ray_census_ok, tag + ": a <-> e identity");

  f.require(e_polynomial(canonical_fibre(X)) == at_y1(e), tag + ": fibre census");
  f.require(e.evaluate({Int(-1), Int(1), Int(0), Int(0)}) == 1, tag + ": e(-1;1) = 1");

  const DehnSommervilleReport ds = dehn_sommerville_check(X);
  f.require(ds.euler_ok && ds.pairing_checked && ds.pairing_ok,
            tag + ": Dehn-Sommerville");

  const CountPolynomial beta_poly = virtual_poincare(X);
  f.require(beta_poly.evaluate({Int(0), Int(0), Int(0), Int(0)}) == 1,
            tag + ": beta(0) = 1");
  const Int total = beta_poly.evaluate({Int(0), Int(0), Int(0), Int(1)});
  const Int bound = Int(1LL << (sig.q - sig.r)) * Int(sig.p + 1);
  f.require(total >= bound, tag + ": total Betti bound");
}

std::string criterion_count_identities() {
  Failures f;
  Rng rng(9207);
  for (int trial = 0; trial < 100; ++trial) {
    const EquivariantFan fan = random_smooth_fan(rng, 4, true, rand_int(rng, 0, 3));
    std::ostringstream tag;
    tag << "random trial " << trial;
    check_count_identities(RealToricVariety(fan), tag.str(), f);
  }
  // Compact non-complete members: the realized circle-action corpus.
  for (const auto& [m, t, h] : kMembers) {
    std::ostringstream tag;
    tag << "member (" << m << "," << t << "," << h << ")";
    check_count_identities(realize_e_star(member_census(m, t, h)), tag.str(), f);
  }
  return f.message();
}

// --- criterion 8 -----------------------------------------------------------

bool orientable_kind(const TopologicalType& t) {
  return t.kind() == TopologicalType::Kind::Sphere ||
         t.kind() == TopologicalType::Kind::Torus;
}

bool non_orientable_kind(const TopologicalType& t) {
  return t.kind() == TopologicalType::Kind::ProjectivePlane ||
         t.kind() == TopologicalType::Kind::KleinBottle ||
         t.kind() == TopologicalType::Kind::NonOrientableSurface;
}

std::string criterion_orientability() {
  Failures f;
  f.require(orientable(split_p2()) == false, "split P^2 orientable");
  f.require(orientable(split_p1xp1()) == true, "split P^1 x P^1 orientable");
  f.require(orientable(weil_p1()) == true, "Weil restriction orientable");
  f.require(orientable(klein_surface()) == false, "Klein surface orientable");

  // Consistency on surfaces: the sign agrees with the classified type.
  std::vector<RealToricVariety> corpus = {split_p2(),    split_p1xp1(),
                                          weil_p1(),     klein_surface(),
                                          hirzebruch(1), hirzebruch(2),
                                          conj_p2(),     quadrants_diag(1),
                                          quadrants_diag(-1)};
  Rng rng(9208);
  for (int trial = 0; trial < 50; ++trial) {
    const EquivariantFan fan = random_smooth_fan(rng, 2, true, rand_int(rng, 0, 2));
    if (fan.ambient_rank() == 2) corpus.emplace_back(fan);
  }
  size_t surfaces = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const RealToricVariety& X = corpus[i];
    if (X.dim() != 2 || !has_real_point(X)) continue;
    ++surfaces;
    const bool o = orientable(X);
    const TopologicalType t = classify(X);
    std::ostringstream tag;
    tag << "surface " << i << " (" << t.to_string() << ")";
    f.require(o == orientable_kind(t) && !o == non_orientable_kind(t),
              tag.str() + ": orientability matches type");
  }
  f.require(surfaces >= 10, "surface corpus size");
  return f.message();
}

// --- criterion 9 -----------------------------------------------------------

// Mirrors the six public realizability constraints, in their documented
// order, on the raw coefficient tuple (exz, m, t, h, ey, c).
std::string first_violated(long long exz, long long m, long long t, long long h,
                           long long ey, long long c) {
  if (exz != 1) return "e^1_{2,1} = 1";
  if (c != 2 * h) return "e^0_{0,0} = 2 e^0_{1,0}";
  if (m + t + h != ey + c)
    return "e^1_{1,1} + e^0_{1,1} + e^0_{1,0} = e^0_{0,1} + e^0_{0,0}";
  if (m < t + h) return "e^1_{1,1} >= e^0_{1,1} + e^0_{1,0}";
  if (ey + c < 3) return "e^0_{0,1} + e^0_{0,0} >= 3";
  if (t + h == 0 && m != 4) return "e^0_{1,1} + e^0_{1,0} = 0 requires e^1_{1,1} = 4";
  return "";
}

std::string criterion_realizability() {
  Failures f;
  int realized = 0;
  for (long long exz = 0; exz <= 4; ++exz)
    for (long long m = 0; m <= 4; ++m)
      for (long long t = 0; t <= 4; ++t)
        for (long long h = 0; h <= 4; ++h)
          for (long long ey = 0; ey <= 4; ++ey)
            for (long long c = 0; c <= 4; ++c) {
              const CountPolynomial target =
                  mono(1, 0, 1, exz) + mono(0, 0, 1, m) + mono(1, 1, 0, t) +
                  mono(1, 0, 0, h) + mono(0, 1, 0, ey) +
                  CountPolynomial::constant(Int(c));
              const std::string expected = first_violated(exz, m, t, h, ey, c);
              std::ostringstream tag;
              tag << "(" << exz << "," << m << "," << t << "," << h << "," << ey
                  << "," << c << ")";
              try {
                const RealToricVariety X = realize_e_star(target);
                ++realized;
                f.require(expected.empty(), tag.str() + ": accepted invalid census");
                f.require(e_star_polynomial(X) == target,
                          tag.str() + ": census round trip");
              } catch (const Error& err) {
                f.require(err.kind() == ErrorKind::ConstraintViolated,
                          tag.str() + ": unexpected error kind");
                f.require(!expected.empty(), tag.str() + ": rejected valid census");
                if (!expected.empty()) {
                  f.require(err.detail() == expected,
                            tag.str() + ": constraint name (" + err.detail() + ")");
                }
              }
            }
  f.require(realized == int(kMembers.size()), "realized-census count");
  return f.message();
}

// --- criterion 10 ----------------------------------------------------------

std::string criterion_classification_invariance() {
  size_t unchanged = 0;
  std::vector<std::string> failing;
  for (const auto& [m, t, h] : kMembers) {
    const RealToricVariety X = realize_e_star(member_census(m, t, h));
    const CircleActionCensus census = circle_action_census(X);
    const TopologicalType before = classify(X);
    const TopologicalType after_bary = classify(resolve_winding_barycentric(X));
    const TopologicalType after_blowup = classify(resolve_winding_blowup(X));
    if (before == after_bary && before == after_blowup) {
      ++unchanged;
    } else {
      std::ostringstream line;
      line << "(" << census.t << "," << census.h << "," << census.u << ")";
      failing.push_back(line.str());
    }
  }

  // The hand-built pillow member is properly wound, so both resolutions are
  // the identity refinement and its class is untouched.
  const TopologicalType pillow_before = classify(pillow());
  const bool pillow_ok =
      classify(resolve_winding_barycentric(pillow())) == pillow_before &&
      classify(resolve_winding_blowup(pillow())) == pillow_before;

  if (failing.empty() && pillow_ok) return "";
  std::ostringstream out;
  out << unchanged << " of " << kMembers.size()
      << " realized members keep their class; changed censuses (t,h,u):";
  for (const std::string& s : failing) out << " " << s;
  if (!pillow_ok) out << "; pillow changed class";
  return out.str();
}

// --- driver ----------------------------------------------------------------

struct Criterion {
  int number;
  std::string name;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "curve and surface golden classifications", criterion_golden_classifications},
      {2, "virtual Betti polynomials of the pinned examples", criterion_betti_polynomials},
      {3, "pillow census and classification", criterion_pillow},
      {4, "lens space classification and parameter normal form", criterion_lens_spaces},
      {5, "cohomology dimensions and canonical decomposition", criterion_cohomology_dimensions},
      {6, "winding resolutions on random smooth fans", criterion_winding_resolution},
      {7, "count-polynomial identities on the compact smooth corpus", criterion_count_identities},
      {8, "orientability values and classifier consistency", criterion_orientability},
      {9, "exhaustive census realizability with entries <= 4", criterion_realizability},
      {10, "classification invariance under winding resolutions", criterion_classification_invariance},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << c.number << ": "
              << (failure.empty() ? "PASS" : "FAIL") << "  " << c.name << " ["
              << seconds << "s]";
    if (!failure.empty()) {
      ++failed;
      std::cout << " — " << failure;
    }
    std::cout << "\n";
  }
  std::cout << "acceptance: " << (criteria.size() - failed) << " of "
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
