#pragma once

// Group cohomology of G-lattices in degrees <= 2 via the inhomogeneous bar
// complex.  Cochain tables are dense matrices: one column per tuple of
// subgroup elements, rows indexed by the module basis.  Groups are reported
// as invariant factor lists; class orders are computed as lattice membership
// with exact rational back-substitution against a column echelon form of the
// coboundary matrix.

#include <acp/lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace acp {

struct Cochain {
  int degree = 0;
  IntMatrix table;  // module rank x |H|^degree
};

// Evaluation context: a subgroup H acting on a lattice M through the ambient
// group's action.
struct CochainContext {
  GroupSpec G;
  GLattice M;                       // by value; lattices are small
  std::vector<GroupElement> elems;  // of H, lex order, identity first
  std::vector<IntMatrix> acts;      // action of elems[k]
  std::vector<std::vector<long>> multable;
  long h = 0;

  long mul_idx(long a, long b) const { return multable[a][b]; }
};

inline CochainContext make_context(const GroupSpec& G, const GLattice& M, const Subgroup& H) {
  CochainContext ctx;
  ctx.G = G;
  ctx.M = M;
  ctx.elems = H.elements;
  ctx.h = H.order;
  ctx.acts.reserve(ctx.h);
  ActionTable full = make_action_table(G, M);
  for (const auto& g : ctx.elems) ctx.acts.push_back(full.at(element_index(G, g)));
  ctx.multable.assign(ctx.h, std::vector<long>(ctx.h, 0));
  std::map<GroupElement, long> pos;
  for (long i = 0; i < ctx.h; ++i) pos[ctx.elems[i]] = i;
  for (long a = 0; a < ctx.h; ++a)
    for (long b = 0; b < ctx.h; ++b)
      ctx.multable[a][b] = pos.at(mul(G, ctx.elems[a], ctx.elems[b]));
  return ctx;
}

inline CochainContext make_full_context(const GroupSpec& G, const GLattice& M) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < G.rank(); ++i) {
    GroupElement e = identity_element(G);
    e[i] = 1;
    gens.push_back(e);
  }
  return make_context(G, M, subgroup_generated(G, gens));
}

inline long cochain_cols(const CochainContext& ctx, int degree) {
  long c = 1;
  for (int k = 0; k < degree; ++k) c *= ctx.h;
  return c;
}

inline Cochain zero_cochain(const CochainContext& ctx, int degree) {
  return Cochain{degree, IntMatrix::Zero(ctx.M.rank, cochain_cols(ctx, degree))};
}

// Tuple index: first component most significant.
inline long tuple_index(const CochainContext& ctx, const std::vector<long>& t) {
  long idx = 0;
  for (long c : t) idx = idx * ctx.h + c;
  return idx;
}

inline Cochain coboundary(const CochainContext& ctx, const Cochain& f) {
  if (f.table.rows() != ctx.M.rank) throw LengthMismatch("cochain row count mismatch");
  if (f.table.cols() != cochain_cols(ctx, f.degree))
    throw LengthMismatch("cochain column count mismatch");
  const long h = ctx.h;
  Cochain d = zero_cochain(ctx, f.degree + 1);
  switch (f.degree) {
    case 0:
      for (long g = 0; g < h; ++g)
        d.table.col(g) = ctx.acts[g] * f.table.col(0) - f.table.col(0);
      break;
    case 1:
      for (long g = 0; g < h; ++g)
        for (long k = 0; k < h; ++k)
          d.table.col(g * h + k) = ctx.acts[g] * f.table.col(k) -
                                   f.table.col(ctx.mul_idx(g, k)) + f.table.col(g);
      break;
    case 2:
      for (long g = 0; g < h; ++g)
        for (long k = 0; k < h; ++k)
          for (long l = 0; l < h; ++l)
            d.table.col((g * h + k) * h + l) =
                ctx.acts[g] * f.table.col(k * h + l) -
                f.table.col(ctx.mul_idx(g, k) * h + l) +
                f.table.col(g * h + ctx.mul_idx(k, l)) - f.table.col(g * h + k);
      break;
    default:
      throw BadInput("coboundary implemented for degrees 0..2 only");
  }
  return d;
}

inline bool is_cocycle(const CochainContext& ctx, const Cochain& f) {
  return is_zero(coboundary(ctx, f).table);
}

// Matrix of delta : C^n -> C^{n+1} with cochains flattened column-major
// (coordinate index = tuple * rank + module coordinate).
inline IntMatrix coboundary_matrix(const CochainContext& ctx, int n, long size_bound = 4000000) {
  const Index rank = ctx.M.rank;
  const long cols_in = cochain_cols(ctx, n) * rank;
  const long rows_out = cochain_cols(ctx, n + 1) * rank;
  if (rows_out > size_bound || cols_in > size_bound)
    throw BoundExceeded("coboundary matrix exceeds size bound");
  IntMatrix D = IntMatrix::Zero(rows_out, cols_in);
  const long h = ctx.h;
  auto add_block = [&](long out_tuple, long in_tuple, const IntMatrix* act, int sign) {
    const Index ro = static_cast<Index>(out_tuple) * rank;
    const Index co = static_cast<Index>(in_tuple) * rank;
    if (act) {
      if (sign > 0)
        D.block(ro, co, rank, rank) += *act;
      else
        D.block(ro, co, rank, rank) -= *act;
    } else {
      for (Index i = 0; i < rank; ++i) D(ro + i, co + i) += sign;
    }
  };
  if (n == 0) {
    for (long g = 0; g < h; ++g) {
      add_block(g, 0, &ctx.acts[g], +1);
      add_block(g, 0, nullptr, -1);
    }
  } else if (n == 1) {
    for (long g = 0; g < h; ++g)
      for (long k = 0; k < h; ++k) {
        const long out = g * h + k;
        add_block(out, k, &ctx.acts[g], +1);
        add_block(out, ctx.mul_idx(g, k), nullptr, -1);
        add_block(out, g, nullptr, +1);
      }
  } else if (n == 2) {
    for (long g = 0; g < h; ++g)
      for (long k = 0; k < h; ++k)
        for (long l = 0; l < h; ++l) {
          const long out = (g * h + k) * h + l;
          add_block(out, k * h + l, &ctx.acts[g], +1);
          add_block(out, ctx.mul_idx(g, k) * h + l, nullptr, -1);
          add_block(out, g * h + ctx.mul_idx(k, l), nullptr, +1);
          add_block(out, g * h + k, nullptr, -1);
        }
  } else {
    throw BadInput("coboundary matrix implemented for degrees 0..2 only");
  }
  return D;
}

struct CohomologyResult {
  std::vector<Int> invariant_factors;  // torsion part, factors > 1
  Index free_rank = 0;                 // nonzero only in degree 0
  Int order = 1;                       // torsion order
};

// H^n(H, M) for n in 0..2.  Degree 0 reports the free rank of M^H; positive
// degrees report invariant factors of ker(delta_n) / im(delta_{n-1}).
inline CohomologyResult cohomology_group(const GroupSpec& G, const GLattice& M, int n,
                                         const Subgroup& H, long size_bound = 4000000) {
  CohomologyResult res;
  if (n == 0) {
    res.free_rank = fixed_sublattice(G, M, H).cols();
    return res;
  }
  if (n > 2) throw BadInput("cohomology implemented for degrees 0..2 only");
  CochainContext ctx = make_context(G, M, H);
  IntMatrix Z = kernel_basis(coboundary_matrix(ctx, n, size_bound));
  IntMatrix B = coboundary_matrix(ctx, n - 1, size_bound);
  if (Z.cols() == 0) return res;
  BasisSolver solver(Z);
  IntMatrix X(Z.cols(), B.cols());
  for (Index c = 0; c < B.cols(); ++c) {
    auto x = solver.solve(B.col(c));
    if (!x) throw NotInKernel("coboundary image does not land in the cocycle lattice");
    X.col(c) = *x;
  }
  QuotientShape q = cokernel_shape(X);
  if (q.free_rank != 0)
    throw InternalRankMismatch("positive-degree cohomology of a finite group must be torsion");
  res.invariant_factors = q.torsion;
  res.order = q.torsion_order;
  return res;
}

// Least k >= 1 with k*c a coboundary.  Uses one column echelon form of the
// coboundary matrix and an exact rational back-substitution; the resulting k
// is re-verified integrally before returning.
inline Int class_order(const CochainContext& ctx, const Cochain& c, long size_bound = 4000000) {
  if (!is_cocycle(ctx, c)) throw NotACocycle("class_order: input is not a cocycle");
  if (c.degree < 1) throw BadInput("class_order needs degree >= 1");
  IntMatrix B = coboundary_matrix(ctx, c.degree - 1, size_bound);
  // flatten: coordinate index = tuple * rank + module coordinate
  IntVector v(c.table.rows() * c.table.cols());
  for (Index t = 0; t < c.table.cols(); ++t)
    for (Index i = 0; i < c.table.rows(); ++i) v(t * c.table.rows() + i) = c.table(i, t);

  ColumnEchelon E = column_echelon(B);
  // rational solve on pivot rows
  RatVector y = RatVector::Zero(E.rank);
  RatVector resid(v.size());
  for (Index i = 0; i < v.size(); ++i) resid(i) = Rat(v(i));
  for (Index k = 0; k < E.rank; ++k) {
    const Index pr = E.pivot_rows[k];
    if (resid(pr) != 0) {
      Rat q = resid(pr) / Rat(E.H(pr, k));
      y(k) = q;
      for (Index i = 0; i < v.size(); ++i)
        if (mpz_sgn(E.H(i, k).get_mpz_t()) != 0) resid(i) -= q * Rat(E.H(i, k));
    }
  }
  for (Index i = 0; i < v.size(); ++i)
    if (resid(i) != 0)
      throw Error("class_order: cocycle is not torsion modulo coboundaries");
  Int k = 1;
  for (Index i = 0; i < E.rank; ++i) {
    y(i).canonicalize();
    Int den = y(i).get_den();
    k = k * den / gcd(k, den);
  }
  IntVector kv = v;
  for (Index i = 0; i < kv.size(); ++i) kv(i) *= k;
  if (!lattice_solve(E, kv)) throw Error("class_order: verification failed");
  return k;
}

inline Int class_order(const GroupSpec& G, const GLattice& M, const Subgroup& H,
                       const Cochain& c, long size_bound = 4000000) {
  CochainContext ctx = make_context(G, M, H);
  return class_order(ctx, c, size_bound);
}

// Tate \hat{H}^0(H, M) = M^H / N_H(M) as invariant factors.
inline CohomologyResult tate_h0(const GroupSpec& G, const GLattice& M, const Subgroup& H) {
  IntMatrix F = fixed_sublattice(G, M, H);
  IntMatrix N = norm_map(G, M, H);
  BasisSolver solver(F);
  IntMatrix Y(F.cols(), M.rank);
  for (Index c = 0; c < M.rank; ++c) {
    auto x = solver.solve(N.col(c));
    if (!x) throw NotInKernel("norm image does not land in the fixed sublattice");
    Y.col(c) = *x;
  }
  QuotientShape q = cokernel_shape(Y);
  if (q.free_rank != 0)
    throw InternalRankMismatch("Tate H^0 of a finite group action must be torsion");
  CohomologyResult res;
  res.invariant_factors = q.torsion;
  res.order = q.torsion_order;
  return res;
}

// The 1-cocycle g |-> g - 1 with values in I[G]; its class generates
// H^1(G, I[G]) and its image under the connecting map of
// 0 -> A2 -> P2 -> I[G] -> 0 is computed by lift-and-differentiate.
inline Cochain c1_cocycle(const GroupSpec& G, const CochainContext& ctx) {
  Cochain c1 = zero_cochain(ctx, 1);
  for (long g = 1; g < ctx.h; ++g)
    c1.table(element_index(G, ctx.elems[g]) - 1, g) = 1;
  return c1;
}

struct ConnectingImage {
  Cochain c1;        // over I[G]
  Int c1_order = 0;  // = |G|
  Cochain c2;        // over A2, image of [c1] under the connecting map
};

inline ConnectingImage connecting_h1_image(const GroupSpec& G, const PresentationLattices& P,
                                           long size_bound = 4000000) {
  ConnectingImage out;
  CochainContext ig_ctx = make_full_context(G, P.ig);
  out.c1 = c1_cocycle(G, ig_ctx);
  if (!is_cocycle(ig_ctx, out.c1)) throw NotACocycle("c1 failed the cocycle identity");
  out.c1_order = class_order(ig_ctx, out.c1, size_bound);

  // lift c1 through j, then take the coboundary inside P2 and express it in
  // the kernel basis
  const long n = G.order();
  IntMatrix lift(P.p2.rank, n);
  for (long g = 0; g < n; ++g) {
    IntVector tgt = IntVector::Zero(n - 1);
    if (g != 0) tgt(g - 1) = 1;
    auto x = solve_integer_system(P.jmat, tgt);
    if (!x) throw Error("connecting map: failed to lift c1 through j");
    lift.col(g) = *x;
  }
  CochainContext p2_ctx = make_full_context(G, P.p2);
  Cochain lifted{1, lift};
  Cochain d = coboundary(p2_ctx, lifted);
  BasisSolver solver(P.inclusion);
  CochainContext a2_ctx = make_full_context(G, P.a2);
  out.c2 = zero_cochain(a2_ctx, 2);
  for (Index c = 0; c < d.table.cols(); ++c) {
    auto x = solver.solve(d.table.col(c));
    if (!x) throw NotInKernel("connecting map: coboundary of the lift is not in A2");
    out.c2.table.col(c) = *x;
  }
  if (!is_cocycle(a2_ctx, out.c2)) throw NotACocycle("connecting image failed the cocycle identity");
  return out;
}

}  // namespace acp
