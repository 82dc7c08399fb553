#pragma once

// Symbolic abelian crossed products over monomial field models.  An element
// in normal form is coeff * z1^a1 ... zr^ar where coeff lives in the model
// lattice written additively (monomials of K*, trivial-action units
// suppressed).  Relations: z_i z_j = u_ij z_j z_i, z_i^{n_i} = b_i, and
// z_i m = s_i(m) z_i for lattice monomials m.

#include <acp/canonical.hpp>

#include <string>
#include <vector>

namespace acp {

struct MonomialFieldModel {
  GLattice lattice;
  std::string descriptor;
};

struct Presentation {
  GroupSpec G;
  MonomialFieldModel K;
  IntMatrix b;                            // lattice.rank x r
  std::vector<std::vector<IntVector>> u;  // r x r, antisymmetric
  // caches
  ActionTable acts;
  std::vector<std::vector<std::vector<IntVector>>> usum;  // usum[j][i][a] = sum_{t<a} A_j^t u[j][i]

  Index rank() const { return K.lattice.rank; }
  const IntMatrix& act(const GroupElement& g) const { return acts.at(element_index(G, g)); }
  const IntMatrix& act(long idx) const { return acts.at(idx); }
};

struct ZMonomial {
  IntVector coeff;
  GroupElement zexp;

  bool operator==(const ZMonomial& o) const { return zexp == o.zexp && coeff == o.coeff; }
  bool operator!=(const ZMonomial& o) const { return !(*this == o); }
};

inline ZMonomial one(const Presentation& P) {
  return ZMonomial{IntVector::Zero(P.rank()), identity_element(P.G)};
}

inline ZMonomial monomial(const Presentation& P, IntVector coeff, GroupElement zexp) {
  if (coeff.size() != P.rank()) throw LengthMismatch("coefficient length mismatch");
  return ZMonomial{std::move(coeff), reduce_element(P.G, zexp)};
}

// state * m for a lattice monomial m: the z-word acts on m as it passes left.
inline void rmul_coeff(const Presentation& P, ZMonomial& s, const IntVector& m) {
  s.coeff += P.act(element_index(P.G, s.zexp)) * m;
}

// state * z_i (0-based generator index).  The new z_i migrates left through
// the blocks z_j^{a_j} with j > i, each crossing contributing the partial
// norm sum of u[j][i] conjugated into place by the block prefix; a power
// overflow at slot i contributes b_i through the prefix below i.
inline void rmul_gen(const Presentation& P, ZMonomial& s, int i) {
  const int r = P.G.rank();
  if (i < 0 || i >= r) throw BadInput("generator index out of range");
  IntVector acc = IntVector::Zero(P.rank());
  GroupElement prefix = identity_element(P.G);
  for (int j = r - 1; j > i; --j) {
    if (s.zexp[j] == 0) continue;
    for (int t = 0; t < j; ++t) prefix[t] = s.zexp[t];
    for (int t = j; t < r; ++t) prefix[t] = 0;
    acc += P.act(element_index(P.G, prefix)) * P.usum[j][i][s.zexp[j]];
  }
  s.zexp[i] += 1;
  if (s.zexp[i] == P.G.orders[i]) {
    s.zexp[i] = 0;
    for (int t = 0; t < i; ++t) prefix[t] = s.zexp[t];
    for (int t = i; t < r; ++t) prefix[t] = 0;
    acc += P.act(element_index(P.G, prefix)) * P.b.col(i);
  }
  s.coeff += acc;
}

// state * z_i^{-1}, using z_i^{-1} = (-b_i) z_i^{n_i - 1}.
inline void rmul_geninv(const Presentation& P, ZMonomial& s, int i) {
  rmul_coeff(P, s, IntVector(-P.b.col(i)));
  for (long t = 0; t + 1 < P.G.orders[i]; ++t) rmul_gen(P, s, i);
}

inline ZMonomial mul(const Presentation& P, const ZMonomial& x, const ZMonomial& y) {
  ZMonomial s = x;
  rmul_coeff(P, s, y.coeff);
  for (int i = 0; i < P.G.rank(); ++i)
    for (long t = 0; t < y.zexp[i]; ++t) rmul_gen(P, s, i);
  return s;
}

inline ZMonomial inverse(const Presentation& P, const ZMonomial& x) {
  ZMonomial s = one(P);
  for (int i = P.G.rank() - 1; i >= 0; --i)
    for (long t = 0; t < x.zexp[i]; ++t) rmul_geninv(P, s, i);
  rmul_coeff(P, s, IntVector(-x.coeff));
  return s;
}

inline ZMonomial pow(const Presentation& P, const ZMonomial& x, long k) {
  if (k < 0) return inverse(P, pow(P, x, -k));
  ZMonomial s = one(P);
  for (long t = 0; t < k; ++t) s = mul(P, s, x);
  return s;
}

// Word tokens for normal_form: a generator, its inverse, or a K-monomial.
struct WordToken {
  enum Kind { Gen, GenInv, Coeff } kind;
  int gen = -1;
  IntVector coeff;

  static WordToken generator(int i) { return WordToken{Gen, i, {}}; }
  static WordToken generator_inverse(int i) { return WordToken{GenInv, i, {}}; }
  static WordToken k_monomial(IntVector v) { return WordToken{Coeff, -1, std::move(v)}; }
};

inline ZMonomial normal_form(const Presentation& P, const std::vector<WordToken>& word) {
  ZMonomial s = one(P);
  for (const auto& t : word) {
    switch (t.kind) {
      case WordToken::Gen: rmul_gen(P, s, t.gen); break;
      case WordToken::GenInv: rmul_geninv(P, s, t.gen); break;
      case WordToken::Coeff: rmul_coeff(P, s, t.coeff); break;
    }
  }
  return s;
}

// u_{m,n} = z^m z^n (z^m)^{-1} (z^n)^{-1}, a lattice monomial.
inline IntVector commutator_u(const Presentation& P, const GroupElement& m, const GroupElement& n) {
  ZMonomial zm = monomial(P, IntVector::Zero(P.rank()), m);
  ZMonomial zn = monomial(P, IntVector::Zero(P.rank()), n);
  ZMonomial c = mul(P, mul(P, mul(P, zm, zn), inverse(P, zm)), inverse(P, zn));
  if (c.zexp != identity_element(P.G))
    throw InternalRankMismatch("commutator has nonzero z-exponent");
  return c.coeff;
}

// The 2-cocycle of the presentation: c(g, h) = z^g z^h (z^{g+h mod n})^{-1}.
inline Cochain cocycle_of(const Presentation& P, bool assert_cocycle = true) {
  const long n = P.G.order();
  CochainContext ctx = make_full_context(P.G, P.K.lattice);
  Cochain c = zero_cochain(ctx, 2);
  for (long gi = 0; gi < n; ++gi) {
    ZMonomial zg = monomial(P, IntVector::Zero(P.rank()), element_at(P.G, gi));
    for (long hi = 0; hi < n; ++hi) {
      ZMonomial zh = monomial(P, IntVector::Zero(P.rank()), element_at(P.G, hi));
      ZMonomial prod = mul(P, zg, zh);
      if (prod.zexp != mul(P.G, zg.zexp, zh.zexp))
        throw InternalRankMismatch("product exponent is not the reduced sum");
      c.table.col(gi * n + hi) = prod.coeff;
    }
  }
  if (assert_cocycle && !is_cocycle(ctx, c))
    throw NotACocycle("crossed-product cocycle failed the 2-cocycle identity");
  return c;
}

// v_ij and d_i recovered from a raw 2-cocycle via the w-generator relations
// w_i w_j = v_ij w_j w_i, w_i^{n_i} = d_i where w_g = z_g of the cocycle
// algebra: v_ij = c(s_i, s_j) - c(s_j, s_i), d_i = sum_{t=1}^{n_i-1} c(s_i, s_i^t).
struct DerivedUB {
  IntMatrix b;
  std::vector<std::vector<IntVector>> u;
};

inline DerivedUB derive_u_b(const GroupSpec& G, const Cochain& c) {
  const long n = G.order();
  const Index rank = c.table.rows();
  const int r = G.rank();
  DerivedUB out;
  out.b = IntMatrix::Zero(rank, r);
  out.u.assign(r, std::vector<IntVector>(r, IntVector::Zero(rank)));
  for (int i = 0; i < r; ++i) {
    GroupElement si = identity_element(G);
    si[i] = 1;
    const long a = element_index(G, si);
    for (long t = 1; t < G.orders[i]; ++t) {
      GroupElement sit = identity_element(G);
      sit[i] = t;
      out.b.col(i) += c.table.col(a * n + element_index(G, sit));
    }
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      GroupElement sj = identity_element(G);
      sj[j] = 1;
      const long bj = element_index(G, sj);
      out.u[i][j] = c.table.col(a * n + bj) - c.table.col(bj * n + a);
    }
  }
  return out;
}

struct ValidationReport {
  bool ok = true;
  std::string first_failure;
  long pairs_checked = 0;
};

namespace detail {
inline ZMonomial fold_word(const Presentation& P, IntVector coeff, const std::vector<int>& gens) {
  ZMonomial s{std::move(coeff), identity_element(P.G)};
  for (int g : gens) rmul_gen(P, s, g);
  return s;
}
}  // namespace detail

// Critical-pair confluence of the rewriting system {z_j z_i -> u_ji z_i z_j
// (j > i), z_i^{n_i} -> b_i, z_i m -> s_i(m) z_i}.  The overlap families are
// exactly: swap-swap on z_k z_j z_i (k > j > i), swap-power on z_j z_i^{n_i}
// (j > i), power-swap on z_i^{n_i} z_j (i > j), and the power self-overlap
// z_i^{n_i + 1}; by the diamond lemma their resolution implies global
// confluence, which is the operational form of the compatibility conditions
// on (u, b).
inline ValidationReport validate_presentation(const Presentation& P) {
  ValidationReport rep;
  const int r = P.G.rank();
  const Index rank = P.rank();
  auto fail = [&](std::string what) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_failure = std::move(what);
    }
  };
  if (P.b.rows() != rank || P.b.cols() != r) {
    fail("b has wrong dimensions");
    return rep;
  }
  for (int i = 0; i < r && rep.ok; ++i)
    for (int j = 0; j < r && rep.ok; ++j)
      if (P.u[i][j].size() != rank) fail("u entry has wrong length");
  if (!rep.ok) return rep;

  for (int i = 0; i < r; ++i) {
    if (!is_zero(IntVector(P.u[i][i]))) fail("u_ii != 0 at i=" + std::to_string(i + 1));
    ++rep.pairs_checked;
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      if (!is_zero(IntVector(P.u[i][j] + P.u[j][i])))
        fail("u_ij + u_ji != 0 at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      ++rep.pairs_checked;
    }
  if (!rep.ok) return rep;

  auto gen_label = [](int i) { return "z" + std::to_string(i + 1); };

  // power self-overlap z_i^{n_i + 1}: s_i(b_i) = b_i
  for (int i = 0; i < r; ++i) {
    GroupElement si = identity_element(P.G);
    si[i] = 1;
    if (IntVector(P.act(element_index(P.G, si)) * P.b.col(i)) != IntVector(P.b.col(i)))
      fail("critical pair " + gen_label(i) + "^" + std::to_string(P.G.orders[i] + 1) +
           ": b_i is not fixed by s_i");
    ++rep.pairs_checked;
  }
  if (!rep.ok) return rep;

  // swap-swap overlaps z_k z_j z_i, k > j > i
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        GroupElement ek = identity_element(P.G);
        ek[k] = 1;
        ZMonomial a = detail::fold_word(P, P.u[k][j], {j, k, i});
        ZMonomial b = detail::fold_word(P, IntVector(P.act(element_index(P.G, ek)) * P.u[j][i]),
                                        {k, i, j});
        if (a != b)
          fail("critical pair " + gen_label(k) + " " + gen_label(j) + " " + gen_label(i));
        ++rep.pairs_checked;
      }
  if (!rep.ok) return rep;

  // swap-power overlaps z_j z_i^{n_i}, j > i
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < j; ++i) {
      GroupElement ej = identity_element(P.G);
      ej[j] = 1;
      ZMonomial a = detail::fold_word(P, IntVector(P.act(element_index(P.G, ej)) * P.b.col(i)),
                                      {j});
      std::vector<int> w{i, j};
      for (long t = 0; t + 1 < P.G.orders[i]; ++t) w.push_back(i);
      ZMonomial b = detail::fold_word(P, P.u[j][i], w);
      if (a != b)
        fail("critical pair " + gen_label(j) + " " + gen_label(i) + "^" +
             std::to_string(P.G.orders[i]));
      ++rep.pairs_checked;
    }
  if (!rep.ok) return rep;

  // power-swap overlaps z_i^{n_i} z_j, i > j
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j) {
      ZMonomial a = detail::fold_word(P, P.b.col(i), {j});
      GroupElement pre = identity_element(P.G);
      pre[i] = P.G.orders[i] - 1;
      std::vector<int> w;
      for (long t = 0; t + 1 < P.G.orders[i]; ++t) w.push_back(i);
      w.push_back(j);
      w.push_back(i);
      ZMonomial b = detail::fold_word(P, IntVector(P.act(element_index(P.G, pre)) * P.u[i][j]), w);
      if (a != b)
        fail("critical pair " + gen_label(i) + "^" + std::to_string(P.G.orders[i]) + " " +
             gen_label(j));
      ++rep.pairs_checked;
    }
  return rep;
}

inline Presentation make_presentation(const GroupSpec& G, MonomialFieldModel K, IntMatrix b,
                                      std::vector<std::vector<IntVector>> u, bool validate = true) {
  validate_glattice(G, K.lattice);
  Presentation P;
  P.G = G;
  P.K = std::move(K);
  P.b = std::move(b);
  P.u = std::move(u);
  P.acts = make_action_table(G, P.K.lattice);
  const int r = G.rank();
  P.usum.assign(r, std::vector<std::vector<IntVector>>(r));
  for (int j = 0; j < r; ++j) {
    GroupElement ej = identity_element(G);
    ej[j] = 1;
    const IntMatrix& Aj = P.acts.at(element_index(G, ej));
    for (int i = 0; i < j; ++i) {
      auto& s = P.usum[j][i];
      s.resize(G.orders[j]);
      s[0] = IntVector::Zero(P.K.lattice.rank);
      IntVector pw = P.u[j][i];
      for (long a = 1; a < G.orders[j]; ++a) {
        s[a] = s[a - 1] + pw;
        if (a + 1 < G.orders[j]) pw = Aj * pw;
      }
    }
  }
  if (validate) {
    ValidationReport rep = validate_presentation(P);
    if (!rep.ok) throw Inconsistent(rep.first_failure);
  }
  return P;
}

inline Presentation make_a2_presentation(const CanonicalData& D, bool validate = true) {
  return make_presentation(D.G, MonomialFieldModel{D.P.a2, "F(A2)"}, D.b, D.u, validate);
}

// Same u, b data embedded in the A2 block of M*.
inline Presentation make_mstar_presentation(const CanonicalData& D, bool validate = true) {
  const Index ra = D.P.a2.rank;
  const Index rm = D.mstar.rank;
  const int r = D.G.rank();
  IntMatrix b = IntMatrix::Zero(rm, r);
  b.block(0, 0, ra, r) = D.b;
  std::vector<std::vector<IntVector>> u(r, std::vector<IntVector>(r, IntVector::Zero(rm)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) u[i][j].head(ra) = D.u[i][j];
  return make_presentation(D.G, MonomialFieldModel{D.mstar, "F(M*)"}, std::move(b), std::move(u),
                           validate);
}

inline Presentation make_zero_presentation(const GroupSpec& G, const GLattice& M,
                                           std::string descriptor = "zero") {
  const int r = G.rank();
  IntMatrix b = IntMatrix::Zero(M.rank, r);
  std::vector<std::vector<IntVector>> u(r, std::vector<IntVector>(r, IntVector::Zero(M.rank)));
  return make_presentation(G, MonomialFieldModel{M, std::move(descriptor)}, std::move(b),
                           std::move(u));
}

// Change of variables z_i' = c_i z_i: u'_ij = u_ij + (A_i - I)c_j - (A_j - I)c_i,
// b'_i = b_i + N_i(c_i).  Always yields an isomorphic (hence valid) presentation.
inline Presentation twist_presentation(const Presentation& P, const IntMatrix& C,
                                       bool validate = true) {
  const int r = P.G.rank();
  if (C.rows() != P.rank() || C.cols() != r) throw LengthMismatch("twist needs one column per generator");
  IntMatrix b = P.b;
  std::vector<std::vector<IntVector>> u = P.u;
  std::vector<IntMatrix> gen_acts;
  for (int i = 0; i < r; ++i) {
    GroupElement ei = identity_element(P.G);
    ei[i] = 1;
    gen_acts.push_back(P.act(element_index(P.G, ei)));
  }
  const IntMatrix I = IntMatrix::Identity(P.rank(), P.rank());
  for (int i = 0; i < r; ++i) {
    IntMatrix Ni = IntMatrix::Zero(P.rank(), P.rank());
    IntMatrix pw = I;
    for (long t = 0; t < P.G.orders[i]; ++t) {
      Ni += pw;
      pw = (gen_acts[i] * pw).eval();
    }
    b.col(i) += Ni * C.col(i);
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      u[i][j] += IntMatrix(gen_acts[i] - I) * C.col(j) - IntMatrix(gen_acts[j] - I) * C.col(i);
    }
  }
  return make_presentation(P.G, P.K, std::move(b), std::move(u), validate);
}

struct BrauerClassInfo {
  Int order = 0;        // class order of the presentation cocycle in H^2(G, M)
  bool h1_trivial = false;  // H^1(H, M) = 0 for every subgroup H
};

// Class order of cocycle_of(P) in H^2(G, M).  When M is H^1-trivial this is
// the exponent of the algebra class; otherwise callers should label it a
// lattice-class order only.
inline BrauerClassInfo brauer_class_order(const Presentation& P, long size_bound = 4000000) {
  BrauerClassInfo info;
  Cochain c = cocycle_of(P);
  CochainContext ctx = make_full_context(P.G, P.K.lattice);
  info.order = class_order(ctx, c, size_bound);
  info.h1_trivial = true;
  for (const Subgroup& H : enumerate_subgroups(P.G)) {
    if (H.order == 1) continue;
    CohomologyResult h1 = cohomology_group(P.G, P.K.lattice, 1, H, size_bound);
    if (h1.order != 1) {
      info.h1_trivial = false;
      break;
    }
  }
  return info;
}

}  // namespace acp
