#include "retoric/involution.hpp"

#include <sstream>
#include <stdexcept>

#include "retoric/errors.hpp"

namespace retoric {

InvolutiveLattice::InvolutiveLattice(size_t rank, IntMat tau)
    : rank_(rank), tau_(std::move(tau)) {
  if (tau_.rows() != rank_ || tau_.cols() != rank_)
    fail(ErrorKind::InvalidInvolution, "involution matrix shape does not match rank");
  if (!(tau_ * tau_).is_identity())
    fail(ErrorKind::InvalidInvolution, "matrix does not square to the identity");
}

std::string TypeSignature::to_string() const {
  std::ostringstream os;
  os << "(" << p << ";" << q << ")_" << r;
  return os.str();
}

IntMat model_involution(const TypeSignature& sig) {
  size_t n = sig.p + sig.q;
  IntMat m(n, n);
  size_t off = 0;
  for (size_t i = 0; i < sig.p - sig.r; ++i, ++off) m.at(off, off) = 1;
  for (size_t i = 0; i < sig.q - sig.r; ++i, ++off) m.at(off, off) = -1;
  for (size_t i = 0; i < sig.r; ++i, off += 2) {
    m.at(off, off + 1) = 1;
    m.at(off + 1, off) = 1;
  }
  return m;
}

IntMat fixed_sublattice(const InvolutiveLattice& L, int sign) {
  IntMat m = L.tau();
  for (size_t i = 0; i < L.rank(); ++i) m.at(i, i) -= sign;
  return kernel(m);  // ker(tau - sign)
}

namespace {

// Reduce E modulo 2 to [[I_r, 0], [0, 0]] by unimodular integer row and
// column operations: on return P * E_in * Q has that shape mod 2.
size_t split_mod2(IntMat& E, IntMat& P, IntMat& Q) {
  size_t rows = E.rows(), cols = E.cols();
  P = IntMat::identity(rows);
  Q = IntMat::identity(cols);
  size_t r = 0;
  while (r < rows && r < cols) {
    size_t pi = rows, pj = cols;
    for (size_t i = r; i < rows && pi == rows; ++i)
      for (size_t j = r; j < cols; ++j)
        if (E.at(i, j) % 2 != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    E.swap_rows(r, pi);
    P.swap_rows(r, pi);
    E.swap_cols(r, pj);
    Q.swap_cols(r, pj);
    for (size_t i = 0; i < rows; ++i)
      if (i != r && E.at(i, r) % 2 != 0) {
        E.add_row(i, r, 1);
        P.add_row(i, r, 1);
      }
    for (size_t j = 0; j < cols; ++j)
      if (j != r && E.at(r, j) % 2 != 0) {
        E.add_col(j, r, 1);
        Q.add_col(j, r, 1);
      }
    ++r;
  }
  return r;
}

}  // namespace

Decomposition decompose(const InvolutiveLattice& L) {
  size_t n = L.rank();
  IntMat Kminus = fixed_sublattice(L, -1);
  size_t q = Kminus.cols();
  size_t p = n - q;

  // Complete the anti-fixed sublattice to a basis of the whole lattice; the
  // complementary columns are lifts of a basis of N / ker(1+tau), on which
  // tau acts trivially.
  SmithForm sf = smith_form(Kminus);
  IntMat B0 = inverse_unimodular(sf.U);
  IntMat B(n, n);
  for (size_t j = 0; j < p; ++j) B.set_col(j, B0.col(q + j));
  for (size_t j = 0; j < q; ++j) B.set_col(p + j, B0.col(j));

  IntMat Binv = inverse_unimodular(B);
  IntMat T = Binv * L.tau() * B;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      if (T.at(i, j) != (i == j ? 1 : 0))
        throw std::logic_error("involution not unipotent on quotient lifts");
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < q; ++j)
      if (T.at(i, p + j) != 0) throw std::logic_error("anti-fixed block leaked");

  IntMat E(q, p);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < p; ++j) E.at(i, j) = T.at(p + i, j);

  IntMat P, Q;
  size_t r = split_mod2(E, P, Q);
  IntMat Pinv = inverse_unimodular(P);

  // New lifts x = old_x * Q, new anti basis y = old_y * P^-1, then shift the
  // lifts by even multiples of the anti basis to make the cross block exactly
  // [[I_r, 0], [0, 0]].
  IntMat B2(n, n);
  {
    IntMat X(n, p), Y(n, q);
    for (size_t j = 0; j < p; ++j) X.set_col(j, B.col(j));
    for (size_t j = 0; j < q; ++j) Y.set_col(j, B.col(p + j));
    IntMat X2 = X * Q;
    IntMat Y2 = Y * Pinv;
    // Cross block in the new bases: tau x2_j = x2_j + sum_i y2_i * E2(i, j).
    IntMat E2(q, p);
    for (size_t j = 0; j < p; ++j) {
      IntVec d = sub_vec(L.apply(X2.col(j)), X2.col(j));
      auto sol = solve(Y2, d);
      if (!sol) throw std::logic_error("cross block not expressible in anti basis");
      for (size_t i = 0; i < q; ++i) E2.at(i, j) = (*sol)[i];
    }
    for (size_t i = 0; i < q; ++i)
      for (size_t j = 0; j < p; ++j) {
        Int target = (i == j && i < r) ? 1 : 0;
        Int diff = E2.at(i, j) - target;
        if (diff % 2 != 0) throw std::logic_error("cross block parity broken");
        if (diff != 0) {
          // x2_j += (diff/2) * y2_i shifts E2(i, j) by -diff.
          IntVec c = X2.col(j);
          IntVec shift = scale_vec(diff / 2, Y2.col(i));
          X2.set_col(j, add_vec(c, shift));
        }
      }
    for (size_t j = 0; j < p; ++j) B2.set_col(j, X2.col(j));
    for (size_t j = 0; j < q; ++j) B2.set_col(p + j, Y2.col(j));
  }

  // Reorder into the model block order: fixed lifts, anti vectors, then the
  // exchanged pairs (x_k, x_k + y_k).
  IntMat U(n, n);
  size_t off = 0;
  for (size_t j = r; j < p; ++j) U.set_col(off++, B2.col(j));
  for (size_t j = r; j < q; ++j) U.set_col(off++, B2.col(p + j));
  for (size_t k = 0; k < r; ++k) {
    U.set_col(off++, B2.col(k));
    U.set_col(off++, add_vec(B2.col(k), B2.col(p + k)));
  }

  TypeSignature sig{p, q, r};
  IntMat check = inverse_unimodular(U) * L.tau() * U;
  if (!(check == model_involution(sig)))
    throw std::logic_error("decomposition failed to reach model form");
  return Decomposition{U, sig};
}

TypeSignature signature_of(const InvolutiveLattice& L) {
  return decompose(L).signature;
}

WindingGroup winding_group(const InvolutiveLattice& L) {
  Decomposition dec = decompose(L);
  const TypeSignature& sig = dec.signature;
  IntMat Kplus = fixed_sublattice(L, +1);
  IntMat Kminus = fixed_sublattice(L, -1);
  WindingGroup wg;
  wg.dim = sig.r;
  wg.d0 = BitMat(sig.r, sig.q);
  wg.d1 = BitMat(sig.r, sig.p);
  size_t pair_base = (sig.p - sig.r) + (sig.q - sig.r);
  for (size_t k = 0; k < sig.r; ++k) {
    IntVec v = dec.basis_change.col(pair_base + 2 * k);
    wg.representatives.push_back(v);
    IntVec tv = L.apply(v);
    auto plus = solve(Kplus, add_vec(v, tv));
    auto minus = solve(Kminus, sub_vec(v, tv));
    if (!plus || !minus) throw std::logic_error("winding representative out of range");
    for (size_t j = 0; j < sig.p; ++j) wg.d1.at(k, j) = mod2((*plus)[j]);
    for (size_t j = 0; j < sig.q; ++j) wg.d0.at(k, j) = mod2((*minus)[j]);
  }
  return wg;
}

CohomologySpace cohomology(const InvolutiveLattice& L, int degree) {
  if (degree < 1) fail(ErrorKind::ValidationError, "cohomology degree must be >= 1");
  bool odd = degree % 2 != 0;
  size_t n = L.rank();
  IntMat plus = L.tau(), minus = -L.tau();
  for (size_t i = 0; i < n; ++i) {
    plus.at(i, i) += 1;   // 1 + tau
    minus.at(i, i) += 1;  // 1 - tau
  }
  // Odd degrees: cocycles ker(1+tau), coboundaries im(1-tau); even swaps.
  const IntMat& cocycle = odd ? plus : minus;
  const IntMat& cobound = odd ? minus : plus;
  IntMat K = kernel(cocycle);
  size_t m = K.cols();
  // Coboundary lattice in the coordinates of the cocycle basis.
  IntMat X(m, n);
  for (size_t j = 0; j < n; ++j) {
    auto sol = solve(K, cobound.col(j));
    if (!sol) throw std::logic_error("coboundary escaped the cocycle lattice");
    for (size_t i = 0; i < m; ++i) X.at(i, j) = (*sol)[i];
  }
  SmithForm sf = smith_form(X);
  CohomologySpace space;
  space.degree_ = degree;
  space.kernel_basis_ = K;
  space.coord_change_ = sf.U;
  space.cocycle_test_ = cocycle;
  IntMat Uinv = inverse_unimodular(sf.U);
  for (size_t i = 0; i < sf.invariant_factors.size(); ++i) {
    if (sf.invariant_factors[i] == 1) continue;
    if (sf.invariant_factors[i] != 2)
      throw std::logic_error("cohomology has unexpected torsion");
    space.torsion_positions_.push_back(i);
    space.reps_.push_back(K * Uinv.col(i));
  }
  if (sf.invariant_factors.size() != m)
    throw std::logic_error("coboundaries not of full rank in cocycles");
  space.dim_ = space.torsion_positions_.size();
  return space;
}

BitVec CohomologySpace::class_of(const IntVec& v) const {
  if (!is_zero_vec(cocycle_test_ * v))
    fail(ErrorKind::NotInKernel, "vector is not a cocycle in degree " + std::to_string(degree_));
  auto a = solve(kernel_basis_, v);
  if (!a) throw std::logic_error("cocycle not in saturated kernel basis");
  IntVec w = coord_change_ * *a;
  BitVec out(dim_);
  for (size_t i = 0; i < torsion_positions_.size(); ++i) out[i] = mod2(w[torsion_positions_[i]]);
  return out;
}

BitVec class_of(const InvolutiveLattice& L, const IntVec& v, int degree) {
  return cohomology(L, degree).class_of(v);
}

SubQuotient sub_quotient(const InvolutiveLattice& L, const IntMat& sub) {
  size_t n = L.rank(), s = sub.cols();
  if (sub.rows() != n) fail(ErrorKind::ValidationError, "sublattice basis shape mismatch");
  for (size_t j = 0; j < s; ++j)
    if (!in_lattice(sub, L.apply(sub.col(j))))
      fail(ErrorKind::NotStable, "sublattice is not preserved by the involution");
  SmithForm sf = smith_form(sub);
  if (sf.invariant_factors.size() != s)
    fail(ErrorKind::ValidationError, "sublattice basis is not linearly independent");
  for (const Int& d : sf.invariant_factors)
    if (d != 1) fail(ErrorKind::NotPrimitive, "quotient by the sublattice has torsion");
  IntMat B = inverse_unimodular(sf.U);  // first s columns span the sublattice
  IntMat proj(n - s, n), section(n, n - s);
  for (size_t i = 0; i < n - s; ++i)
    for (size_t j = 0; j < n; ++j) proj.at(i, j) = sf.U.at(s + i, j);
  for (size_t j = 0; j < n - s; ++j) section.set_col(j, B.col(s + j));
  IntMat tq = proj * L.tau() * section;
  return SubQuotient{InvolutiveLattice(n - s, tq), proj, section};
}

bool in_image_test(const InvolutiveLattice& L, const IntMat& sub, const IntVec& v) {
  size_t n = L.rank();
  for (size_t j = 0; j < sub.cols(); ++j)
    if (!in_lattice(sub, L.apply(sub.col(j))))
      fail(ErrorKind::NotStable, "sublattice is not preserved by the involution");
  IntMat plus = L.tau();
  IntMat minus = -L.tau();
  for (size_t i = 0; i < n; ++i) {
    plus.at(i, i) += 1;
    minus.at(i, i) += 1;
  }
  if (!is_zero_vec(plus * v)) fail(ErrorKind::NotAntiInvariant, "vector is not anti-invariant");
  // Anti-invariant part of the sublattice.
  IntMat anti = sub * kernel(plus * sub);
  return in_lattice(IntMat::hcat(anti, minus), v);
}

std::pair<size_t, size_t> extension_invariants(const InvolutiveLattice& sub_lattice,
                                               const InvolutiveLattice& total,
                                               const IntMat& inclusion) {
  size_t n = total.rank(), s = sub_lattice.rank();
  if (inclusion.rows() != n || inclusion.cols() != s)
    fail(ErrorKind::ValidationError, "inclusion shape mismatch");
  if (!(total.tau() * inclusion == inclusion * sub_lattice.tau()))
    fail(ErrorKind::NotStable, "inclusion does not intertwine the involutions");
  SubQuotient sq = sub_quotient(total, inclusion);

  IntMat plus = total.tau(), minus = -total.tau();
  for (size_t i = 0; i < n; ++i) {
    plus.at(i, i) += 1;
    minus.at(i, i) += 1;
  }

  auto connecting_rank = [&](int source_degree, const IntMat& op, int target_degree) {
    CohomologySpace src = cohomology(sq.quotient, source_degree);
    CohomologySpace dst = cohomology(sub_lattice, target_degree);
    std::vector<BitVec> rows;
    for (const IntVec& rep : src.representatives()) {
      IntVec lift = sq.section * rep;
      IntVec w = op * lift;
      auto a = solve(inclusion, w);
      if (!a) throw std::logic_error("connecting image escaped the sublattice");
      rows.push_back(dst.class_of(*a));
    }
    return BitMat::from_rows(rows, dst.dim()).rank();
  };

  size_t rank_d1 = connecting_rank(1, plus, 2);
  size_t rank_d2 = connecting_rank(2, minus, 1);
  return {rank_d1, rank_d2};
}

}  // namespace retoric
