#pragma once

// Z^r-valued valuation data for the power-series generic abelian crossed
// product: the base presentation is extended by central variables x_1..x_r
// (a trivial-action lattice block recording x-exponents), with
// z_i^{n_i} = b_i x_i.  Values live in Q^r ordered right-to-left
// lexicographically; v(x_i) = e_i and v(z_i) = (v(b_i) + e_i)/n_i.  Only
// monomial supports are tracked — every computation here (value groups,
// commutators, centrality) depends on nothing else.

#include <acp/crossed_product.hpp>
#include <acp/parallel.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace acp {

using ValueVector = RatVector;

// right-to-left lexicographic: the last differing coordinate decides
inline int compare_lex(const ValueVector& a, const ValueVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("compare_lex: unequal lengths");
  for (Index i = a.size() - 1; i >= 0; --i) {
    if (a(i) < b(i)) return -1;
    if (a(i) > b(i)) return 1;
  }
  return 0;
}

struct PowerSeriesACP {
  Presentation base;  // coefficient lattice M
  Presentation ext;   // coefficient lattice M (+) Z^r, x-block acted on trivially
  Index xoff = 0;     // x-block starts here in ext coordinates
  std::vector<ValueVector> zvals;  // v(z_i), denominators dividing n_i
  Int residue_degree = 0;          // declared by the model: [Kbar : Fbar] = |G|
};

inline PowerSeriesACP make_power_series(const Presentation& P) {
  const GroupSpec& G = P.G;
  const int r = G.rank();
  const Index mrank = P.rank();
  const Index erank = mrank + r;

  GLattice ext;
  ext.rank = erank;
  ext.label = P.K.lattice.label + "[x]";
  for (int i = 0; i < r; ++i) {
    IntMatrix A = IntMatrix::Identity(erank, erank);
    A.topLeftCorner(mrank, mrank) = P.K.lattice.actions[i];
    ext.actions.push_back(std::move(A));
  }

  IntMatrix bx = IntMatrix::Zero(erank, r);
  for (int i = 0; i < r; ++i) {
    bx.col(i).head(mrank) = P.b.col(i);
    bx(mrank + i, i) = 1;  // z_i^{n_i} = b_i x_i
  }
  std::vector<std::vector<IntVector>> ux(r, std::vector<IntVector>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IntVector v = IntVector::Zero(erank);
      v.head(mrank) = P.u[i][j];
      ux[i][j] = std::move(v);
    }

  PowerSeriesACP A;
  A.base = P;
  A.ext = make_presentation(G, MonomialFieldModel{std::move(ext), P.K.descriptor + "((x))"},
                            bx, ux);
  A.xoff = mrank;
  for (int i = 0; i < r; ++i) {
    ValueVector v = ValueVector::Zero(r);
    for (int j = 0; j < r; ++j) v(j) = Rat(bx(mrank + j, i));  // v(b_i) + e_i, x-block part
    v /= Rat(G.orders[i]);
    A.zvals.push_back(std::move(v));
  }
  A.residue_degree = G.order();
  return A;
}

// Toy variant for the negative branch: pretend z_{i0} were a central
// variable, so its value is integral and the value group shrinks.
inline PowerSeriesACP make_central_toy(const PowerSeriesACP& A, int i0) {
  if (i0 < 0 || i0 >= A.base.G.rank()) throw BadInput("make_central_toy: generator out of range");
  PowerSeriesACP T = A;
  T.zvals[i0] = ValueVector::Zero(A.base.G.rank());
  T.zvals[i0](i0) = 1;
  return T;
}

struct ValueData {
  std::vector<ValueVector> gammaD;  // generators of Gamma_D over Z^r
  std::vector<Int> quotient;        // invariant factors of Gamma_D / Z^r
  Int index = 1;                    // |Gamma_D : Gamma_F|
  std::map<GroupElement, GroupElement> theta;  // n.frac(v(z^m)) -> m
  bool theta_bijective = false;
  bool quotient_matches_group = false;
};

inline ValueVector monomial_value(const PowerSeriesACP& A, const GroupElement& m) {
  const int r = A.base.G.rank();
  ValueVector v = ValueVector::Zero(r);
  for (int i = 0; i < r; ++i) v += Rat(m[i]) * A.zvals[i];
  return v;
}

inline ValueData value_data(const PowerSeriesACP& A) {
  const GroupSpec& G = A.base.G;
  const int r = G.rank();
  ValueData out;
  out.gammaD = A.zvals;

  // scale Gamma_D by L = lcm(n) to land in Z^r, take an echelon basis,
  // express the scaled Gamma_F = L.Z^r in it, and read the quotient off
  // the cokernel of that expression
  Int L = 1;
  for (long n : G.orders) L = lcm(L, Int(n));
  IntMatrix gens(r, 2 * r);
  gens.leftCols(r) = L * IntMatrix::Identity(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat s = Rat(L) * A.zvals[i](j);
      if (s.get_den() != 1) throw InternalRankMismatch("value denominators exceed lcm(n)");
      gens(j, r + i) = s.get_num();
    }
  ColumnEchelon E = column_echelon(gens, true);
  if (E.rank != r) throw InternalRankMismatch("value group does not have full rank");
  BasisSolver basis(IntMatrix(E.H.leftCols(E.rank)));
  IntMatrix X(r, r);
  for (int i = 0; i < r; ++i) {
    auto x = basis.solve(IntVector(gens.col(i)));
    if (!x) throw InternalRankMismatch("scaled Gamma_F does not lie in the echelon basis");
    X.col(i) = *x;
  }
  QuotientShape q = cokernel_shape(X);
  if (q.free_rank != 0) throw InternalRankMismatch("value quotient has free part");
  out.quotient = q.torsion;
  out.index = q.torsion_order;

  std::vector<Int> want;
  for (long n : G.orders)
    if (n > 1) want.push_back(Int(n));
  std::sort(want.begin(), want.end());
  out.quotient_matches_group = (out.quotient == want);

  // theta: scaled fractional part of v(z^m) determines the coset of v(z^m)
  // in Gamma_D / Z^r; tabulate coset representative -> m
  for (const GroupElement& m : enumerate_elements(G)) {
    ValueVector v = monomial_value(A, m);
    GroupElement key(r);
    for (int j = 0; j < r; ++j) {
      Rat f = v(j) - Rat(fdiv_q(v(j).get_num(), v(j).get_den()));  // in [0,1)
      Rat scaled = f * Rat(G.orders[j]);
      if (scaled.get_den() != 1) throw InternalRankMismatch("theta representative not integral");
      key[j] = to_long_checked(scaled.get_num());
    }
    out.theta.emplace(std::move(key), m);
  }
  out.theta_bijective =
      static_cast<long>(out.theta.size()) == G.order() && out.index == G.order();
  return out;
}

struct SemiRamification {
  bool semi_ramified = false;
  Int index = 0;
  Int residue_degree = 0;
  std::vector<Int> quotient_factors;
  bool theta_bijective = false;
  std::string separability = "satisfied-by-model";
};

inline SemiRamification is_semi_ramified(const PowerSeriesACP& A) {
  ValueData vd = value_data(A);
  SemiRamification s;
  s.index = vd.index;
  s.residue_degree = A.residue_degree;
  s.quotient_factors = vd.quotient;
  s.theta_bijective = vd.theta_bijective;
  s.semi_ramified = (vd.index == A.base.G.order()) && vd.theta_bijective &&
                    (A.residue_degree == A.base.G.order());
  return s;
}

struct GradedSearchResult {
  bool found = false;
  GroupElement m;
  IntVector k;        // base-lattice part of the coefficient
  IntVector lambda;   // x-shift
  ValueVector degree;  // v(omega), not in Z^r when found
  long candidates_examined = 0;
};

// Search for omega = k x^lambda z^m, p.m = 0, m != 0, with omega^p central:
// omega^p = (N_m khat + w) z^0 where N_m = sum A_m^t and w is the p-th power
// coefficient of the bare monomial z^m, so centrality says N_m khat + w lies
// in the fixed sublattice.  Solved as [N_m | Phi](khat; y) = -w with Phi a
// fixed-sublattice basis.  The witness is re-verified multiplicatively.
inline GradedSearchResult homogeneous_ppower_central_search(const PowerSeriesACP& A,
                                                            int threads = 1) {
  const GroupSpec& G = A.base.G;
  const int r = G.rank();
  const Presentation& P = A.ext;
  const Index rank = P.rank();

  std::vector<GroupElement> cands;
  for (const GroupElement& g : enumerate_elements(G))
    if (element_order(G, g) == G.p) cands.push_back(g);

  Subgroup full = subgroup_generated(G, [&] {
    std::vector<GroupElement> gens;
    for (int i = 0; i < r; ++i) {
      GroupElement e = identity_element(G);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    return gens;
  }());
  const IntMatrix Phi = fixed_sublattice(G, P.K.lattice, full);

  GradedSearchResult res;
  std::vector<std::optional<IntVector>> slots(cands.size());
  auto task = [&](long idx) {
    const GroupElement& m = cands[static_cast<size_t>(idx)];
    const IntMatrix& Am = P.act(m);
    IntMatrix N = IntMatrix::Identity(rank, rank);
    IntMatrix pw = IntMatrix::Identity(rank, rank);
    for (long t = 1; t < G.p; ++t) {
      pw = Am * pw;
      N += pw;
    }
    const IntVector w = pow(P, monomial(P, IntVector::Zero(rank), m), G.p).coeff;
    IntMatrix S(rank, rank + Phi.cols());
    S.leftCols(rank) = N;
    S.rightCols(Phi.cols()) = Phi;
    auto x = solve_integer_system(S, IntVector(-w));
    if (!x) return false;
    slots[static_cast<size_t>(idx)] = x->head(rank);
    return true;
  };
  long hit = first_hit(static_cast<long>(cands.size()), threads, task);
  if (hit < 0) {
    res.candidates_examined = static_cast<long>(cands.size());
    return res;
  }
  res.found = true;
  res.candidates_examined = hit + 1;
  res.m = cands[static_cast<size_t>(hit)];
  const IntVector khat = *slots[static_cast<size_t>(hit)];
  res.k = khat.head(A.xoff);
  res.lambda = khat.tail(r);

  // certificate: omega^p has trivial z-exponent and commutes with every z_i
  // and with every lattice generator of the coefficient model
  ZMonomial omega = monomial(P, khat, res.m);
  ZMonomial op = pow(P, omega, G.p);
  if (op.zexp != identity_element(G)) throw NotAWitness("omega^p has a nonzero z-exponent");
  for (int i = 0; i < r; ++i) {
    GroupElement ei = identity_element(G);
    ei[i] = 1;
    ZMonomial zi = monomial(P, IntVector::Zero(rank), ei);
    if (mul(P, zi, op) != mul(P, op, zi))
      throw NotAWitness("omega^p fails to commute with z_" + std::to_string(i + 1));
  }
  for (Index j = 0; j < rank; ++j) {
    IntVector c = IntVector::Zero(rank);
    c(j) = 1;
    ZMonomial cm = monomial(P, c, identity_element(G));
    if (mul(P, cm, op) != mul(P, op, cm))
      throw NotAWitness("omega^p fails to commute with a coefficient generator");
  }

  res.degree = monomial_value(A, res.m);
  for (int j = 0; j < r; ++j) res.degree(j) += Rat(res.lambda(j));
  bool integral = true;
  for (int j = 0; j < r; ++j)
    if (res.degree(j).get_den() != 1) integral = false;
  if (integral) throw NotAWitness("homogeneous element has integral degree");
  return res;
}

}  // namespace acp
