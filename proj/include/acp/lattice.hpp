#pragma once

// G-lattices: free Z-modules with a commuting action of the chosen
// generators.  Includes the standard lattices attached to a group: the
// regular lattice Z[G], the augmentation ideal I[G] with basis {g - 1}, and
// the pair P2 -> I[G] whose kernel A2 carries the canonical construction.

#include <acp/group.hpp>
#include <acp/smith.hpp>

#include <memory>
#include <string>
#include <vector>

namespace acp {

struct GLattice {
  Index rank = 0;
  std::vector<IntMatrix> actions;  // one matrix per group generator
  std::string label;
};

inline void validate_glattice(const GroupSpec& G, const GLattice& L) {
  if (static_cast<int>(L.actions.size()) != G.rank())
    throw LengthMismatch("lattice needs one action per generator");
  const Index d = L.rank;
  IntMatrix id = IntMatrix::Identity(d, d);
  for (int i = 0; i < G.rank(); ++i) {
    const IntMatrix& A = L.actions[i];
    if (A.rows() != d || A.cols() != d) throw LengthMismatch("action matrix size mismatch");
    IntMatrix pw = id;
    for (long t = 0; t < G.orders[i]; ++t) pw = pw * A;
    if (pw != id) throw GroupLawViolation("generator action order does not divide n_i");
  }
  for (int i = 0; i < G.rank(); ++i)
    for (int j = i + 1; j < G.rank(); ++j)
      if (L.actions[i] * L.actions[j] != L.actions[j] * L.actions[i])
        throw GroupLawViolation("generator actions do not commute");
}

inline IntMatrix action_of(const GroupSpec& G, const GLattice& L, const GroupElement& g) {
  check_element(G, g);
  IntMatrix M = IntMatrix::Identity(L.rank, L.rank);
  for (int i = 0; i < G.rank(); ++i)
    for (long t = 0; t < g[i]; ++t) M = M * L.actions[i];
  return M;
}

// Per-element action matrices, indexed by element_index.  Built along the
// lexicographic enumeration so each matrix is one product away from a
// previously computed one.
struct ActionTable {
  std::vector<IntMatrix> mats;
  const IntMatrix& at(long idx) const { return mats[idx]; }
};

inline ActionTable make_action_table(const GroupSpec& G, const GLattice& L) {
  const long n = G.order();
  ActionTable T;
  T.mats.resize(n);
  T.mats[0] = IntMatrix::Identity(L.rank, L.rank);
  for (long idx = 1; idx < n; ++idx) {
    GroupElement g = element_at(G, idx);
    int last = -1;
    for (int i = G.rank(); i-- > 0;)
      if (g[i] > 0) {
        last = i;
        break;
      }
    GroupElement h = g;
    h[last] -= 1;
    T.mats[idx] = L.actions[last] * T.mats[element_index(G, h)];
  }
  return T;
}

inline GLattice regular_lattice(const GroupSpec& G) {
  const long n = G.order();
  GLattice L;
  L.rank = n;
  L.label = "Z[G]";
  for (int i = 0; i < G.rank(); ++i) {
    IntMatrix A = IntMatrix::Zero(n, n);
    GroupElement s = identity_element(G);
    s[i] = 1;
    for (long idx = 0; idx < n; ++idx) {
      long dst = element_index(G, mul(G, s, element_at(G, idx)));
      A(dst, idx) = 1;
    }
    L.actions.push_back(std::move(A));
  }
  return L;
}

// Basis of I[G]: {g - 1} for g != 1, in enumeration order (element index k+1
// maps to basis index k).
inline GLattice augmentation_ideal(const GroupSpec& G) {
  const long n = G.order();
  GLattice L;
  L.rank = n - 1;
  L.label = "I[G]";
  for (int i = 0; i < G.rank(); ++i) {
    IntMatrix A = IntMatrix::Zero(n - 1, n - 1);
    GroupElement s = identity_element(G);
    s[i] = 1;
    const long s_idx = element_index(G, s);
    for (long idx = 1; idx < n; ++idx) {
      // sigma_i (g - 1) = (sigma_i g - 1) - (sigma_i - 1)
      long dst = element_index(G, mul(G, s, element_at(G, idx)));
      if (dst != 0) A(dst - 1, idx - 1) += 1;
      A(s_idx - 1, idx - 1) -= 1;
    }
    L.actions.push_back(std::move(A));
  }
  return L;
}

struct PresentationLattices {
  GLattice p2;          // direct sum of r copies of Z[G]
  GLattice ig;          // I[G]
  GLattice a2;          // kernel of j, in the canonical kernel basis
  IntMatrix inclusion;  // p2.rank x a2.rank, columns = A2 basis inside P2
  IntMatrix jmat;       // ig.rank x p2.rank
};

// j : P2 -> I[G], d_i |-> sigma_i - 1 extended Z[G]-linearly; A2 = ker j.
inline PresentationLattices p2_and_a2(const GroupSpec& G) {
  const long n = G.order();
  const int r = G.rank();
  PresentationLattices P;
  P.ig = augmentation_ideal(G);
  GLattice reg = regular_lattice(G);

  P.p2.rank = static_cast<Index>(r) * n;
  P.p2.label = "P2";
  for (int i = 0; i < r; ++i) {
    IntMatrix A = IntMatrix::Zero(P.p2.rank, P.p2.rank);
    for (int blk = 0; blk < r; ++blk)
      A.block(static_cast<Index>(blk) * n, static_cast<Index>(blk) * n, n, n) = reg.actions[i];
    P.p2.actions.push_back(std::move(A));
  }

  P.jmat = IntMatrix::Zero(n - 1, P.p2.rank);
  for (int i = 0; i < r; ++i) {
    GroupElement s = identity_element(G);
    s[i] = 1;
    for (long idx = 0; idx < n; ++idx) {
      // j(g d_i) = g sigma_i - g = (g sigma_i - 1) - (g - 1)
      const Index col = static_cast<Index>(i) * n + idx;
      long dst = element_index(G, mul(G, element_at(G, idx), s));
      if (dst != 0) P.jmat(dst - 1, col) += 1;
      if (idx != 0) P.jmat(idx - 1, col) -= 1;
    }
  }

  // j must be onto I[G]: its column lattice is all of Z^{n-1}.
  ColumnEchelon ej = column_echelon(P.jmat);
  if (ej.rank != n - 1) throw InternalRankMismatch("j is not surjective: rank too small");
  for (Index k = 0; k < ej.rank; ++k)
    if (ej.H(ej.pivot_rows[k], k) != 1 || ej.pivot_rows[k] != k)
      throw InternalRankMismatch("j is not surjective: column lattice is proper");

  P.inclusion = kernel_basis(P.jmat);
  const Index expected = static_cast<Index>(r) * n - (n - 1);
  if (P.inclusion.cols() != expected)
    throw InternalRankMismatch("A2 rank != r|G| - (|G|-1)");

  P.a2.rank = expected;
  P.a2.label = "A2";
  BasisSolver solver(P.inclusion);
  for (int i = 0; i < r; ++i) {
    IntMatrix B(expected, expected);
    IntMatrix img = P.p2.actions[i] * P.inclusion;
    for (Index c = 0; c < expected; ++c) {
      auto x = solver.solve(img.col(c));
      if (!x) throw NotInKernel("A2 is not invariant under the action");
      B.col(c) = *x;
    }
    P.a2.actions.push_back(std::move(B));
  }
  validate_glattice(G, P.a2);
  return P;
}

// Canonical basis of the H-fixed sublattice M^H (kernel of the stacked
// (action(h) - 1) over the subgroup's generators).
inline IntMatrix fixed_sublattice(const GroupSpec& G, const GLattice& L, const Subgroup& H) {
  std::vector<GroupElement> gens = H.generators;
  if (gens.empty()) return IntMatrix::Identity(L.rank, L.rank);
  IntMatrix stack(static_cast<Index>(gens.size()) * L.rank, L.rank);
  for (size_t k = 0; k < gens.size(); ++k)
    stack.block(static_cast<Index>(k) * L.rank, 0, L.rank, L.rank) =
        action_of(G, L, reduce_element(G, gens[k])) - IntMatrix::Identity(L.rank, L.rank);
  return kernel_basis(stack);
}

inline IntMatrix norm_map(const GroupSpec& G, const GLattice& L, const Subgroup& H) {
  IntMatrix N = IntMatrix::Zero(L.rank, L.rank);
  for (const auto& h : H.elements) N += action_of(G, L, h);
  return N;
}

}  // namespace acp
