#pragma once

// The canonical 2-cocycle attached to a finite abelian p-group.  From the
// resolution data P2 ->> I[G] with kernel A2 we build an explicit cochain
// phi : G -> P2 lifting g |-> g - 1, set c2 = delta(phi) with values in A2,
// extract the distinguished vectors b_i = N_i d_i and
// u_ij = (s_i - 1) d_j - (s_j - 1) d_i, and assemble the twisted module
// M* = A2 (+) I[G] whose extension class is p-torsion.

#include <acp/cohomology.hpp>

namespace acp {

struct CanonicalData {
  GroupSpec G;
  PresentationLattices P;
  Cochain phi;  // degree 1, values in P2
  Cochain c2;   // degree 2, values in A2
  // A2 coordinates (columns) of the distinguished elements
  IntMatrix b;                          // rank(A2) x r
  std::vector<std::vector<IntVector>> u;  // u[i][j], antisymmetric
  GLattice mstar;                       // A2 (+) I[G] with the twisted action
  IntMatrix mstar_u;                    // u vectors embedded in M*, flattened pairs
  Cochain c2_mstar;                     // c2 pushed into the A2 block of M*
};

// phi(s^m) = sum over i of sum_{j=0}^{m_{r-i+1}-1}
//   s_1^{m_1} ... s_{r-i}^{m_{r-i}} s_{r-i+1}^j  d_{r-i+1},
// i.e. generators are peeled from the right; the inner exponent runs below
// the digit.  This is the unique ordering for which j(phi(g)) telescopes to
// g - 1.
inline Cochain build_phi(const GroupSpec& G, const PresentationLattices& P) {
  const int r = G.rank();
  const long n = G.order();
  CochainContext ctx = make_full_context(G, P.p2);
  Cochain phi = zero_cochain(ctx, 1);
  for (long gi = 0; gi < n; ++gi) {
    GroupElement m = element_at(G, gi);
    IntVector val = IntVector::Zero(P.p2.rank);
    for (int pos = r - 1; pos >= 0; --pos) {
      GroupElement prefix = identity_element(G);
      for (int t = 0; t < pos; ++t) prefix[t] = m[t];
      for (long j = 0; j < m[pos]; ++j) {
        GroupElement q = prefix;
        q[pos] = j;
        // d_pos sits at block pos of P2 = (+)_i Z[G] d_i; coordinate = group
        // element index within the block
        val(static_cast<Index>(pos) * n + element_index(G, q)) += 1;
      }
    }
    phi.table.col(gi) = val;
  }
  // check the defining property j(phi(g)) = g - 1 in I[G]
  for (long gi = 0; gi < n; ++gi) {
    IntVector img = P.jmat * phi.table.col(gi);
    IntVector want = IntVector::Zero(n - 1);
    if (gi != 0) want(gi - 1) = 1;
    if (img != want) throw TelescopeFailure("phi does not lift g - 1");
  }
  return phi;
}

inline Cochain build_c2(const GroupSpec& G, const PresentationLattices& P, const Cochain& phi) {
  CochainContext p2_ctx = make_full_context(G, P.p2);
  Cochain d = coboundary(p2_ctx, phi);
  BasisSolver solver(P.inclusion);
  CochainContext a2_ctx = make_full_context(G, P.a2);
  Cochain c2 = zero_cochain(a2_ctx, 2);
  for (Index c = 0; c < d.table.cols(); ++c) {
    auto x = solver.solve(d.table.col(c));
    if (!x) throw NotInKernel("delta(phi) has a value outside A2");
    c2.table.col(c) = *x;
  }
  if (!is_cocycle(a2_ctx, c2)) throw NotACocycle("c2 = delta(phi) failed the cocycle identity");
  const long n = G.order();
  for (long g = 0; g < n; ++g)
    if (!is_zero(IntVector(c2.table.col(0 * n + g))) ||
        !is_zero(IntVector(c2.table.col(g * n + 0))))
      throw NotACocycle("c2 is not normalized");
  return c2;
}

// b_i = N_i(d_i) and u_ij = (s_i - 1)d_j - (s_j - 1)d_i, expressed in A2
// coordinates.
inline void build_u_b(const GroupSpec& G, const PresentationLattices& P, IntMatrix& b,
                      std::vector<std::vector<IntVector>>& u) {
  const int r = G.rank();
  const long n = G.order();
  BasisSolver solver(P.inclusion);
  auto block_vec = [&](int i, const GroupElement& g) {
    IntVector v = IntVector::Zero(P.p2.rank);
    v(static_cast<Index>(i) * n + element_index(G, g)) = 1;
    return v;
  };
  const Index a2rank = P.a2.rank;
  b = IntMatrix::Zero(a2rank, r);
  u.assign(r, std::vector<IntVector>(r, IntVector::Zero(a2rank)));
  for (int i = 0; i < r; ++i) {
    IntVector bi = IntVector::Zero(P.p2.rank);
    GroupElement q = identity_element(G);
    for (long t = 0; t < G.orders[i]; ++t) {
      q = identity_element(G);
      q[i] = t;
      bi += block_vec(i, q);
    }
    auto x = solver.solve(bi);
    if (!x) throw NotInKernel("b_i is not in A2");
    b.col(i) = *x;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      GroupElement si = identity_element(G);
      si[i] = 1;
      GroupElement sj = identity_element(G);
      sj[j] = 1;
      IntVector uij = block_vec(j, si) - block_vec(j, identity_element(G)) -
                      block_vec(i, sj) + block_vec(i, identity_element(G));
      auto x = solver.solve(uij);
      if (!x) throw NotInKernel("u_ij is not in A2");
      u[i][j] = *x;
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!is_zero(IntVector(u[i][j] + u[j][i])))
        throw InternalRankMismatch("u is not antisymmetric");
}

// M* = A2 (+) I[G] with g . (0, g'-1) = (p * c2(g, g'), g(g'-1)): generator
// action matrices are block upper triangular with the A2 and I[G] actions on
// the diagonal and p * C_i in the corner, where column g of C_i is
// c2(s_i, g).  The group law for the assembled matrices is equivalent to the
// cocycle identity for c2 restricted to (s_i, -) arguments, and is checked.
inline GLattice build_mstar(const GroupSpec& G, const PresentationLattices& P, const Cochain& c2) {
  const int r = G.rank();
  const long n = G.order();
  const Index ra = P.a2.rank;
  const Index ri = P.ig.rank;
  const Int p(G.p);
  GLattice M;
  M.rank = ra + ri;
  M.label = "mstar";
  for (int i = 0; i < r; ++i) {
    IntMatrix B = IntMatrix::Zero(ra + ri, ra + ri);
    B.block(0, 0, ra, ra) = P.a2.actions[i];
    B.block(ra, ra, ri, ri) = P.ig.actions[i];
    GroupElement si = identity_element(G);
    si[i] = 1;
    const long si_idx = element_index(G, si);
    for (long g = 1; g < n; ++g)
      B.block(0, ra + g - 1, ra, 1) = p * c2.table.col(si_idx * n + g);
    M.actions.push_back(B);
  }
  validate_glattice(G, M);  // group law <=> cocycle condition for the twist
  return M;
}

// c2 regarded as a cochain valued in M* (A2 block), plus the embedded u
// vectors.  p * [c2] = 0 in H^2(G, M*): the cochain f(g) = (0, g - 1)
// satisfies delta(f) = p * c2 there, which is checked exactly.
inline Cochain embed_c2_mstar(const GroupSpec& G, const PresentationLattices& P,
                              const GLattice& mstar, const Cochain& c2) {
  const long n = G.order();
  const Index ra = P.a2.rank;
  CochainContext ctx = make_full_context(G, mstar);
  Cochain out = zero_cochain(ctx, 2);
  out.table.block(0, 0, ra, n * n) = c2.table;
  if (!is_cocycle(ctx, out)) throw NotACocycle("c2 is not a cocycle valued in M*");
  Cochain f = zero_cochain(ctx, 1);
  for (long g = 1; g < n; ++g) f.table(ra + g - 1, g) = 1;
  Cochain df = coboundary(ctx, f);
  if (df.table != (Int(G.p) * out.table).eval())
    throw GroupLawViolation("delta(0, g-1) does not equal p * c2 in M*");
  return out;
}

inline CanonicalData build_canonical(const GroupSpec& G) {
  CanonicalData D;
  D.G = G;
  D.P = p2_and_a2(G);
  D.phi = build_phi(G, D.P);
  D.c2 = build_c2(G, D.P, D.phi);
  build_u_b(G, D.P, D.b, D.u);
  D.mstar = build_mstar(G, D.P, D.c2);
  D.c2_mstar = embed_c2_mstar(G, D.P, D.mstar, D.c2);
  const int r = G.rank();
  const Index ra = D.P.a2.rank;
  D.mstar_u = IntMatrix::Zero(D.mstar.rank, static_cast<Index>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      D.mstar_u.block(0, static_cast<Index>(i) * r + j, ra, 1) = D.u[i][j];
  return D;
}

// c2 evaluated at a pair of group elements, in A2 coordinates.
inline IntVector c2_at(const CanonicalData& D, const GroupElement& g, const GroupElement& h) {
  const long n = D.G.order();
  return D.c2.table.col(element_index(D.G, g) * n + element_index(D.G, h));
}

}  // namespace acp
