#pragma once

// Degeneracy and strong degeneracy of the commutator matrix u over a
// monomial field model.  Written additively the defining equations are
// integer linear systems:
//   degenerate at (m, n):  (A_m - I) a + (A_n - I) b = u_{m,n},
//                          <s^m, s^n> noncyclic;
//   strongly degenerate at order-p m: for every generator i,
//                          (A_m - I) k_i + (A_i - I) l = u_{i,m}, shared l.
// Every yes-verdict carries a witness that is re-substituted exactly, plus
// the multiplicative certificate that the corresponding monomials commute.

#include <acp/crossed_product.hpp>
#include <acp/parallel.hpp>

#include <optional>
#include <string>
#include <vector>

namespace acp {

struct DegenerateWitness {
  GroupElement m, n;
  IntVector a, b;
};

struct StrongWitness {
  GroupElement m;
  IntVector l;
  std::vector<IntVector> k;  // one per generator
};

struct DegeneracyVerdict {
  std::string kind;  // "degenerate" | "strongly_degenerate"
  bool yes = false;
  std::optional<DegenerateWitness> witness;
  std::optional<StrongWitness> strong_witness;
  long pairs_examined = 0;  // candidates preceding (and including) the hit, or all
};

// <a, b> is cyclic in an abelian p-group iff one generator lies in the cyclic
// group generated by the other.
inline bool pair_generates_noncyclic(const GroupSpec& G, const GroupElement& a,
                                     const GroupElement& b) {
  auto in_cyclic = [&](const GroupElement& x, const GroupElement& y) {
    // x in <y>?
    GroupElement t = identity_element(G);
    long ord = element_order(G, y);
    for (long j = 0; j < ord; ++j) {
      if (t == x) return true;
      t = mul(G, t, y);
    }
    return false;
  };
  return !in_cyclic(a, b) && !in_cyclic(b, a);
}

// All unordered pairs {g, h} with <g, h> noncyclic, in lexicographic order of
// element index pairs.  Deterministic; this order defines "first witness".
inline std::vector<std::pair<GroupElement, GroupElement>> noncyclic_pairs(const GroupSpec& G) {
  std::vector<GroupElement> elems = enumerate_elements(G);
  std::vector<std::pair<GroupElement, GroupElement>> out;
  for (size_t i = 1; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (pair_generates_noncyclic(G, elems[i], elems[j])) out.emplace_back(elems[i], elems[j]);
  return out;
}

inline std::vector<GroupElement> order_p_elements(const GroupSpec& G) {
  std::vector<GroupElement> out;
  for (const GroupElement& g : enumerate_elements(G))
    if (element_order(G, g) == G.p) out.push_back(g);
  return out;
}

namespace detail {

// Sound prescreen: an integer solution reduces to a solution mod p, so
// unsolvability over F_p proves unsolvability over Z.  Never decides "yes".
inline bool solvable_mod_p(const IntMatrix& A, const IntVector& t, long p) {
  const Index m = A.rows(), n = A.cols();
  std::vector<std::vector<long>> M(m, std::vector<long>(n + 1));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) M[i][j] = mpz_fdiv_ui(A(i, j).get_mpz_t(), p);
    M[i][n] = mpz_fdiv_ui(t(i).get_mpz_t(), p);
  }
  auto inv_mod = [&](long a) {
    long t0 = 0, t1 = 1, r0 = p, r1 = a % p;
    while (r1 != 0) {
      long q = r0 / r1;
      t0 -= q * t1;
      std::swap(t0, t1);
      r0 -= q * r1;
      std::swap(r0, r1);
    }
    return ((t0 % p) + p) % p;
  };
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    Index piv = -1;
    for (Index i = row; i < m; ++i)
      if (M[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[row], M[piv]);
    const long inv = inv_mod(M[row][col]);
    for (Index j = col; j <= n; ++j) M[row][j] = (M[row][j] * inv) % p;
    for (Index i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      const long f = M[i][col];
      for (Index j = col; j <= n; ++j) M[i][j] = ((M[i][j] - f * M[row][j]) % p + p) % p;
    }
    ++row;
  }
  for (Index i = row; i < m; ++i)
    if (M[i][n] != 0) return false;
  // rows below `row` are zero in all variable columns; any earlier row with
  // all-zero variables and nonzero rhs was eliminated into this range
  for (Index i = 0; i < row; ++i) {
    bool allzero = true;
    for (Index j = 0; j < n; ++j)
      if (M[i][j] != 0) {
        allzero = false;
        break;
      }
    if (allzero && M[i][n] != 0) return false;
  }
  return true;
}

inline std::optional<IntVector> solve_with_prescreen(const IntMatrix& A, const IntVector& t,
                                                     long p) {
  if (!solvable_mod_p(A, t, p)) return std::nullopt;
  EchelonSolver S(A);
  return S.solve(t);
}

}  // namespace detail

inline void verify_degenerate_witness(const Presentation& P, const DegenerateWitness& w) {
  const GroupSpec& G = P.G;
  if (!pair_generates_noncyclic(G, w.m, w.n))
    throw NotAWitness("witness pair generates a cyclic subgroup");
  if (subgroup_generated(G, {w.m, w.n}).cyclic)  // authoritative cross-check
    throw NotAWitness("witness pair cyclicity checks disagree");
  if (w.a.size() != P.rank() || w.b.size() != P.rank())
    throw NotAWitness("witness vectors have wrong length");
  const IntVector u = commutator_u(P, w.m, w.n);
  const IntMatrix& Am = P.act(w.m);
  const IntMatrix& An = P.act(w.n);
  if (IntVector(Am * w.a - w.a + An * w.b - w.b) != u)
    throw NotAWitness("witness does not satisfy the degeneracy equation");
  // multiplicative certificate: b z^m and a^{-1} z^n commute
  ZMonomial e1 = monomial(P, w.b, w.m);
  ZMonomial e2 = monomial(P, IntVector(-w.a), w.n);
  if (mul(P, e1, e2) != mul(P, e2, e1))
    throw NotAWitness("witness monomials fail to commute");
}

inline void verify_strong_witness(const Presentation& P, const StrongWitness& w) {
  const GroupSpec& G = P.G;
  const int r = G.rank();
  if (element_order(G, w.m) != G.p) throw NotAWitness("strong witness element is not of order p");
  if (static_cast<int>(w.k.size()) != r) throw NotAWitness("strong witness needs one k per generator");
  if (w.l.size() != P.rank()) throw NotAWitness("strong witness l has wrong length");
  const IntMatrix& Am = P.act(w.m);
  ZMonomial linv_zm = monomial(P, IntVector(-w.l), w.m);
  for (int i = 0; i < r; ++i) {
    if (w.k[i].size() != P.rank()) throw NotAWitness("strong witness k_i has wrong length");
    GroupElement ei = identity_element(G);
    ei[i] = 1;
    const IntVector u = commutator_u(P, ei, w.m);
    const IntMatrix& Ai = P.act(ei);
    if (IntVector(Am * w.k[i] - w.k[i] + Ai * w.l - w.l) != u)
      throw NotAWitness("strong witness fails the equation at generator " + std::to_string(i + 1));
    // multiplicative certificate: k_i z_i and l^{-1} z^m commute
    ZMonomial e1 = monomial(P, w.k[i], ei);
    if (mul(P, e1, linv_zm) != mul(P, linv_zm, e1))
      throw NotAWitness("strong witness monomials fail to commute at generator " +
                        std::to_string(i + 1));
  }
}

inline DegeneracyVerdict is_degenerate(const Presentation& P, int threads = 1) {
  DegeneracyVerdict v;
  v.kind = "degenerate";
  const auto pairs = noncyclic_pairs(P.G);
  const Index rank = P.rank();
  std::vector<std::optional<DegenerateWitness>> slots(pairs.size());
  auto task = [&](long idx) {
    const auto& [m, n] = pairs[static_cast<size_t>(idx)];
    const IntVector u = commutator_u(P, m, n);
    IntMatrix A(rank, 2 * rank);
    const IntMatrix I = IntMatrix::Identity(rank, rank);
    A.leftCols(rank) = P.act(m) - I;
    A.rightCols(rank) = P.act(n) - I;
    auto x = detail::solve_with_prescreen(A, u, P.G.p);
    if (!x) return false;
    DegenerateWitness w{m, n, x->head(rank), x->tail(rank)};
    slots[static_cast<size_t>(idx)] = std::move(w);
    return true;
  };
  long hit = first_hit(static_cast<long>(pairs.size()), threads, task);
  if (hit >= 0) {
    v.yes = true;
    v.witness = slots[static_cast<size_t>(hit)];
    v.pairs_examined = hit + 1;
    verify_degenerate_witness(P, *v.witness);
  } else {
    v.pairs_examined = static_cast<long>(pairs.size());
  }
  return v;
}

inline DegeneracyVerdict is_strongly_degenerate(const Presentation& P, int threads = 1) {
  DegeneracyVerdict v;
  v.kind = "strongly_degenerate";
  const int r = P.G.rank();
  const Index rank = P.rank();
  const auto cands = order_p_elements(P.G);
  std::vector<std::optional<StrongWitness>> slots(cands.size());
  auto task = [&](long idx) {
    const GroupElement& m = cands[static_cast<size_t>(idx)];
    const IntMatrix I = IntMatrix::Identity(rank, rank);
    const IntMatrix AmI = P.act(m) - I;
    // unknowns: k_1 .. k_r, then l
    IntMatrix A = IntMatrix::Zero(static_cast<Index>(r) * rank, static_cast<Index>(r + 1) * rank);
    IntVector t(static_cast<Index>(r) * rank);
    for (int i = 0; i < r; ++i) {
      GroupElement ei = identity_element(P.G);
      ei[i] = 1;
      A.block(static_cast<Index>(i) * rank, static_cast<Index>(i) * rank, rank, rank) = AmI;
      A.block(static_cast<Index>(i) * rank, static_cast<Index>(r) * rank, rank, rank) =
          P.act(ei) - I;
      t.segment(static_cast<Index>(i) * rank, rank) = commutator_u(P, ei, m);
    }
    auto x = detail::solve_with_prescreen(A, t, P.G.p);
    if (!x) return false;
    StrongWitness w;
    w.m = m;
    w.l = x->tail(rank);
    for (int i = 0; i < r; ++i) w.k.push_back(x->segment(static_cast<Index>(i) * rank, rank));
    slots[static_cast<size_t>(idx)] = std::move(w);
    return true;
  };
  long hit = first_hit(static_cast<long>(cands.size()), threads, task);
  if (hit >= 0) {
    v.yes = true;
    v.strong_witness = slots[static_cast<size_t>(hit)];
    v.pairs_examined = hit + 1;
    verify_strong_witness(P, *v.strong_witness);
  } else {
    v.pairs_examined = static_cast<long>(cands.size());
  }
  return v;
}

// Change of basis from the proof that degeneracy can be witnessed at order-p
// elements: decompose <s^m, s^n> = <tau1> (+) <tau2>, raise the commuting
// monomials E1 = b z^m (z')^... = (b z^m)^{c1} (a^{-1} z^n)^{d1} and E2 to
// the powers |tau_i| / p, and read off the order-p witness from the results.
inline DegenerateWitness reduce_witness_to_order_p(const Presentation& P,
                                                   const DegenerateWitness& w) {
  verify_degenerate_witness(P, w);
  const GroupSpec& G = P.G;
  Subgroup S = subgroup_generated(G, {w.m, w.n});
  if (S.cyclic) throw NotAWitness("witness subgroup is cyclic");

  // lexicographically least valid pair (tau1, tau2) with |tau1||tau2| = |S|
  // and <tau1, tau2> = S (then the sum is automatically direct)
  GroupElement tau1, tau2;
  bool found = false;
  for (const GroupElement& t1 : S.elements) {
    if (found) break;
    if (t1 == identity_element(G)) continue;
    for (const GroupElement& t2 : S.elements) {
      if (t2 == identity_element(G)) continue;
      const long o1 = element_order(G, t1), o2 = element_order(G, t2);
      if (o1 * o2 != S.order) continue;
      if (subgroup_generated(G, {t1, t2}).order != S.order) continue;
      tau1 = t1;
      tau2 = t2;
      found = true;
      break;
    }
  }
  if (!found) throw DecompositionFailure("no direct-sum basis for the witness subgroup");

  // least (c, d) with c*m + d*n = tau
  auto decompose = [&](const GroupElement& tau) {
    const long om = element_order(G, w.m), on = element_order(G, w.n);
    for (long c = 0; c < om; ++c)
      for (long d = 0; d < on; ++d)
        if (mul(G, pow_element(G, w.m, c), pow_element(G, w.n, d)) == tau)
          return std::pair<long, long>{c, d};
    throw DecompositionFailure("basis element is not a combination of the witness pair");
  };
  auto [c1, d1] = decompose(tau1);
  auto [c2, d2] = decompose(tau2);

  const ZMonomial E = monomial(P, w.b, w.m);              // b z^m
  const ZMonomial F = monomial(P, IntVector(-w.a), w.n);  // a^{-1} z^n
  auto combine = [&](long c, long d) { return mul(P, pow(P, E, c), pow(P, F, d)); };
  ZMonomial e1 = pow(P, combine(c1, d1), element_order(G, tau1) / G.p);
  ZMonomial e2 = pow(P, combine(c2, d2), element_order(G, tau2) / G.p);
  if (element_order(G, e1.zexp) != G.p || element_order(G, e2.zexp) != G.p)
    throw DecompositionFailure("reduced elements do not have order p");

  DegenerateWitness out{e1.zexp, e2.zexp, IntVector(-e2.coeff), e1.coeff};
  verify_degenerate_witness(P, out);
  return out;
}

struct CentralizerHint {
  bool commute = false;
  Int fixed_field_degree = 0;  // [K : K^S] = |S| by Galois theory (recorded, not computed)
  std::string annotation;
};

inline CentralizerHint centralizer_split_hint(const Presentation& P, const DegenerateWitness& w) {
  verify_degenerate_witness(P, w);
  CentralizerHint h;
  ZMonomial e1 = monomial(P, w.b, w.m);
  ZMonomial e2 = monomial(P, IntVector(-w.a), w.n);
  h.commute = mul(P, e1, e2) == mul(P, e2, e1);
  Subgroup S = subgroup_generated(P.G, {w.m, w.n});
  h.fixed_field_degree = S.order;
  h.annotation = "the monomials b z^m and a^{-1} z^n commute; the fixed field K' of <s^m, s^n> has"
                 " [K:K'] = " + std::to_string(S.order) + " (Galois degree, recorded rather than"
                 " computed)";
  return h;
}

}  // namespace acp
