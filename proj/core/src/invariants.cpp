#include "retoric/invariants.hpp"

#include "retoric/errors.hpp"
#include "retoric/gf2.hpp"
#include "retoric/normal_form.hpp"

namespace retoric {

CountPolynomial e_polynomial(const RealToricVariety& X) {
  CountPolynomial e;
  for (const OrbitType& t : orbit_types(X))
    e += CountPolynomial::monomial(int(t.type.p), int(t.type.q), 0, 0);
  return e;
}

CountPolynomial e_star_polynomial(const RealToricVariety& X) {
  CountPolynomial e;
  for (const OrbitType& t : orbit_types(X))
    e += CountPolynomial::monomial(int(t.type.p - t.type.r), int(t.type.q - t.type.r),
                                   int(t.type.r), 0);
  return e;
}

namespace detail {

CountPolynomial ray_pattern_census(const EquivariantFan& fan) {
  const auto& L = fan.lattice();
  CountPolynomial a;
  for (const Cone& c : fan.invariant_cones()) {
    int invariant = 0, pairs = 0;
    for (const IntVec& v : c.generators()) {
      IntVec w = L.apply(v);
      if (w == v)
        ++invariant;
      else if (lex_less(v, w))
        ++pairs;
    }
    a += CountPolynomial::monomial(invariant, pairs, 0, 0);
  }
  return a;
}

}  // namespace detail

CountPolynomial a_polynomial(const RealToricVariety& X) {
  if (!smooth_topological_core(X))
    fail(ErrorKind::NotSmooth, "ray-pattern count requires a smooth topological core");
  return detail::ray_pattern_census(X.fan());
}

CountPolynomial virtual_poincare(const RealToricVariety& X) {
  CountPolynomial t = CountPolynomial::var_t();
  std::array<std::optional<CountPolynomial>, 4> repl;
  repl[0] = t - CountPolynomial::constant(Int(1));
  repl[1] = t + CountPolynomial::constant(Int(1));
  return e_polynomial(X).substitute(repl);
}

namespace {

void require_classification_inputs(const RealToricVariety& X) {
  if (!compact_real_locus(X)) fail(ErrorKind::PreconditionFailed, "compact_real_locus");
  if (!smooth_topological_core(X)) fail(ErrorKind::PreconditionFailed, "smooth_topological_core");
  if (!has_real_point(X)) fail(ErrorKind::PreconditionFailed, "has_real_point");
}

// Rows of the orientability system: the mod-2 coordinates of each invariant
// ray generator in the fixed sublattice (value must be one), then the winding
// classes (value must be zero).
std::optional<BitVec> orientation_functional(const RealToricVariety& X) {
  const auto& L = X.lattice();
  IntMat plus = fixed_sublattice(L, +1);
  const size_t p = plus.cols();
  std::vector<BitVec> rows;
  std::vector<uint8_t> rhs;
  for (const Cone& c : X.fan().invariant_cones()) {
    if (c.dim() != 1) continue;
    auto coords = solve(plus, c.generators()[0]);
    if (!coords) throw std::logic_error("invariant ray outside the fixed sublattice");
    rows.push_back(reduce_vec_mod2(*coords));
    rhs.push_back(1);
  }
  WindingGroup wg = winding_group(L);
  for (size_t k = 0; k < wg.dim; ++k) {
    BitVec row(p, 0);
    for (size_t j = 0; j < p; ++j) row[j] = wg.d1.at(k, j);
    rows.push_back(row);
    rhs.push_back(0);
  }
  BitMat system = BitMat::from_rows(rows, p);
  return system.solve(rhs);
}

}  // namespace

bool orientable(const RealToricVariety& X) {
  require_classification_inputs(X);
  return orientation_functional(X).has_value();
}

std::pair<size_t, size_t> h1_tor_dimension(const RealToricVariety& X) {
  require_classification_inputs(X);
  TypeSignature sig = signature_of(X.lattice());
  CountPolynomial a = a_polynomial(X);
  Int a10 = a.coeff(1, 0, 0, 0);
  Int dim = a10 - Int(sig.p) + Int(sig.r);
  if (dim < 0) throw std::logic_error("negative divisor-class dimension");
  return {size_t(dim.convert_to<long long>()), sig.q - sig.r};
}

DehnSommervilleReport dehn_sommerville_check(const RealToricVariety& X) {
  if (!compact_real_locus(X)) fail(ErrorKind::PreconditionFailed, "compact_real_locus");
  CountPolynomial e = e_polynomial(X);
  DehnSommervilleReport report;
  report.euler_value = e.evaluate({Int(-1), Int(1), Int(0), Int(0)});
  report.euler_ok = report.euler_value == 1;
  report.pairing_lhs = 0;
  report.pairing_rhs = 0;
  if (smooth_topological_core(X)) {
    report.pairing_checked = true;
    TypeSignature sig = signature_of(X.lattice());
    report.pairing_lhs = Int(sig.p - sig.r) * e.coeff(0, int(sig.q - sig.r), 0, 0);
    report.pairing_rhs = Int(2) * e.coeff(1, int(sig.q - sig.r), 0, 0);
    report.pairing_ok = report.pairing_lhs == report.pairing_rhs;
  }
  return report;
}

}  // namespace retoric
