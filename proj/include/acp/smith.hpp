#pragma once

// Exact integer linear algebra: column Hermite echelon form, Smith normal
// form with transforms, integer kernels and integer linear system solving.
// Everything is deterministic (fixed pivot rules, no randomization) so that
// "first witness" semantics downstream are reproducible.

#include <acp/core.hpp>

#include <optional>
#include <vector>

namespace acp {

inline bool is_zero(const IntMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (mpz_sgn(m(i, j).get_mpz_t()) != 0) return false;
  return true;
}
inline bool is_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (mpz_sgn(v(i).get_mpz_t()) != 0) return false;
  return true;
}

namespace detail {

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline void col_submul(IntMatrix& M, Index dst, Index src, const Int& q) {
  const Index m = M.rows();
  for (Index i = 0; i < m; ++i)
    if (sgn(M(i, src)) != 0) submul(M(i, dst), q, M(i, src));
}
inline void row_submul(IntMatrix& M, Index dst, Index src, const Int& q) {
  const Index n = M.cols();
  for (Index j = 0; j < n; ++j)
    if (sgn(M(src, j)) != 0) submul(M(dst, j), q, M(src, j));
}
inline void negate_col(IntMatrix& M, Index j) {
  for (Index i = 0; i < M.rows(); ++i) M(i, j) = -M(i, j);
}
inline void negate_row(IntMatrix& M, Index i) {
  for (Index j = 0; j < M.cols(); ++j) M(i, j) = -M(i, j);
}

}  // namespace detail

// Column echelon (Hermite) form: A * V = H with V unimodular.  Column k of H
// has its pivot in row pivot_rows[k], pivots are positive, entries to the
// left of a pivot in its row are reduced into [0, pivot), and all columns
// beyond `rank` are zero.  The form is the canonical column HNF of the
// column lattice of A.
struct ColumnEchelon {
  IntMatrix H;
  IntMatrix V;  // populated only when requested
  std::vector<Index> pivot_rows;
  Index rank = 0;
  bool has_transform = false;
};

inline ColumnEchelon column_echelon(const IntMatrix& A, bool want_transform = false) {
  using namespace detail;
  ColumnEchelon E;
  E.H = A;
  const Index m = A.rows(), n = A.cols();
  if (want_transform) {
    E.V = IntMatrix::Identity(n, n);
    E.has_transform = true;
  }
  Index c = 0;
  for (Index r = 0; r < m && c < n; ++r) {
    for (;;) {
      Index best = -1;
      for (Index j = c; j < n; ++j)
        if (sgn(E.H(r, j)) != 0 && (best < 0 || cmpabs(E.H(r, j), E.H(r, best)) < 0))
          best = j;
      if (best < 0) break;  // no pivot in this row
      if (best != c) {
        E.H.col(c).swap(E.H.col(best));
        if (want_transform) E.V.col(c).swap(E.V.col(best));
      }
      bool cleared = true;
      for (Index j = c + 1; j < n; ++j) {
        if (sgn(E.H(r, j)) == 0) continue;
        Int q = fdiv_q(E.H(r, j), E.H(r, c));
        if (sgn(q) != 0) {
          col_submul(E.H, j, c, q);
          if (want_transform) col_submul(E.V, j, c, q);
        }
        if (sgn(E.H(r, j)) != 0) cleared = false;
      }
      if (!cleared) continue;  // smaller remainders exist; repeat with new minimum
      if (sgn(E.H(r, c)) < 0) {
        negate_col(E.H, c);
        if (want_transform) negate_col(E.V, c);
      }
      for (Index j = 0; j < c; ++j) {
        if (sgn(E.H(r, j)) == 0) continue;
        Int q = fdiv_q(E.H(r, j), E.H(r, c));
        if (sgn(q) != 0) {
          col_submul(E.H, j, c, q);
          if (want_transform) col_submul(E.V, j, c, q);
        }
      }
      E.pivot_rows.push_back(r);
      ++c;
      break;
    }
  }
  E.rank = c;
  return E;
}

inline Index integer_rank(const IntMatrix& A) { return column_echelon(A).rank; }

// Canonical basis (column HNF) of the integer kernel {x : A x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& A) {
  ColumnEchelon E = column_echelon(A, true);
  const Index n = A.cols();
  const Index k = n - E.rank;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix K = E.V.rightCols(k);
  ColumnEchelon EK = column_echelon(K);
  if (EK.rank != k) throw InternalRankMismatch("kernel columns are not independent");
  return EK.H.leftCols(k);
}

// Solve B y = v exactly where B is (the leading columns of) a column echelon
// form; nullopt when v is not in the column lattice.
inline std::optional<IntVector> lattice_solve(const ColumnEchelon& E, const IntVector& v) {
  using namespace detail;
  if (v.size() != E.H.rows()) throw LengthMismatch("lattice_solve: size mismatch");
  IntVector r = v;
  IntVector y = IntVector::Zero(E.rank);
  for (Index k = 0; k < E.rank; ++k) {
    const Index pr = E.pivot_rows[k];
    const Int& piv = E.H(pr, k);
    if (sgn(r(pr)) != 0) {
      if (!divides(piv, r(pr))) return std::nullopt;
      mpz_divexact(y(k).get_mpz_t(), r(pr).get_mpz_t(), piv.get_mpz_t());
      for (Index i = 0; i < r.size(); ++i)
        if (sgn(E.H(i, k)) != 0) submul(r(i), y(k), E.H(i, k));
    }
  }
  if (!is_zero(r)) return std::nullopt;
  return y;
}

// Precomputed solver for repeated coordinate expression against a fixed
// full-column-rank basis matrix (e.g. a canonical kernel basis).
struct BasisSolver {
  ColumnEchelon ech;
  explicit BasisSolver(const IntMatrix& basis) : ech(column_echelon(basis)) {
    if (ech.rank != basis.cols())
      throw InternalRankMismatch("basis matrix does not have full column rank");
    if (ech.H.leftCols(ech.rank) != basis)
      throw InternalRankMismatch("basis matrix is not in canonical column echelon form");
  }
  std::optional<IntVector> solve(const IntVector& v) const { return lattice_solve(ech, v); }
};

// Reusable solver for A x = t with A fixed across many right-hand sides:
// one echelon pass with transform, then each solve is a substitution.  Every
// returned solution is re-verified against the original matrix.
struct EchelonSolver {
  IntMatrix A;
  ColumnEchelon E;
  explicit EchelonSolver(IntMatrix mat) : A(std::move(mat)), E(column_echelon(A, true)) {}
  std::optional<IntVector> solve(const IntVector& t) const {
    auto y = lattice_solve(E, t);
    if (!y) return std::nullopt;
    IntVector x = IntVector::Zero(A.cols());
    if (E.rank > 0) x = E.V.leftCols(E.rank) * *y;
    if (A * x != t) throw Error("EchelonSolver: substitution check failed");
    return x;
  }
};

struct Smith {
  IntMatrix U, D, V;  // U * A * V = D
  std::vector<Int> invariant_factors;
  Index rank = 0;
};

namespace detail {

struct SmithOps {
  IntMatrix& M;
  IntMatrix* U;
  IntMatrix* V;
  IntVector* rhs;  // transformed like U * t

  void row_swap(Index a, Index b) {
    if (a == b) return;
    M.row(a).swap(M.row(b));
    if (U) U->row(a).swap(U->row(b));
    if (rhs) std::swap((*rhs)(a), (*rhs)(b));
  }
  void col_swap(Index a, Index b) {
    if (a == b) return;
    M.col(a).swap(M.col(b));
    if (V) V->col(a).swap(V->col(b));
  }
  void rsubmul(Index dst, Index src, const Int& q) {
    row_submul(M, dst, src, q);
    if (U) row_submul(*U, dst, src, q);
    if (rhs) submul((*rhs)(dst), q, (*rhs)(src));
  }
  void csubmul(Index dst, Index src, const Int& q) {
    col_submul(M, dst, src, q);
    if (V) col_submul(*V, dst, src, q);
  }
  void rnegate(Index i) {
    negate_row(M, i);
    if (U) negate_row(*U, i);
    if (rhs) (*rhs)(i) = -(*rhs)(i);
  }
  // Unimodular transform on row pair (i, j): [r_i; r_j] <- [[x, y], [z, w]] * [r_i; r_j]
  void row_pair(Index i, Index j, const Int& x, const Int& y, const Int& z, const Int& w) {
    const Index n = M.cols();
    Int a, b;
    for (Index col = 0; col < n; ++col) {
      a = M(i, col); b = M(j, col);
      M(i, col) = x * a + y * b;
      M(j, col) = z * a + w * b;
    }
    if (U) {
      for (Index col = 0; col < U->cols(); ++col) {
        a = (*U)(i, col); b = (*U)(j, col);
        (*U)(i, col) = x * a + y * b;
        (*U)(j, col) = z * a + w * b;
      }
    }
    if (rhs) {
      a = (*rhs)(i); b = (*rhs)(j);
      (*rhs)(i) = x * a + y * b;
      (*rhs)(j) = z * a + w * b;
    }
  }
};

// Diagonalize M (no divisibility chain); zero diagonal entries trail.
inline Index smith_diagonalize(SmithOps ops) {
  IntMatrix& M = ops.M;
  const Index m = M.rows(), n = M.cols();
  const Index kmax = std::min(m, n);
  Index k = 0;
  for (; k < kmax; ++k) {
    Index pi = -1, pj = -1;
    for (Index j = k; j < n; ++j)
      for (Index i = k; i < m; ++i)
        if (sgn(M(i, j)) != 0 && (pi < 0 || cmpabs(M(i, j), M(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    ops.row_swap(k, pi);
    ops.col_swap(k, pj);
    for (;;) {
      bool colclean = true;
      for (Index i = k + 1; i < m; ++i) {
        if (sgn(M(i, k)) == 0) continue;
        Int q = fdiv_q(M(i, k), M(k, k));
        if (sgn(q) != 0) ops.rsubmul(i, k, q);
        if (sgn(M(i, k)) != 0) {
          ops.row_swap(k, i);
          colclean = false;
          break;
        }
      }
      if (!colclean) continue;
      bool rowclean = true;
      for (Index j = k + 1; j < n; ++j) {
        if (sgn(M(k, j)) == 0) continue;
        Int q = fdiv_q(M(k, j), M(k, k));
        if (sgn(q) != 0) ops.csubmul(j, k, q);
        if (sgn(M(k, j)) != 0) {
          ops.col_swap(k, j);
          rowclean = false;
          break;
        }
      }
      if (rowclean) break;
      // a column swap can dirty column k again; rerun both passes
    }
    if (sgn(M(k, k)) < 0) ops.rnegate(k);
  }
  return k;  // rank
}

}  // namespace detail

// Full Smith normal form U A V = D with positive invariant factors in a
// divisibility chain; the product identity is re-verified before returning.
inline Smith smith_normal_form(const IntMatrix& A) {
  using namespace detail;
  Smith S;
  S.D = A;
  S.U = IntMatrix::Identity(A.rows(), A.rows());
  S.V = IntMatrix::Identity(A.cols(), A.cols());
  SmithOps ops{S.D, &S.U, &S.V, nullptr};
  S.rank = smith_diagonalize(ops);
  // enforce d_k | d_{k+1}
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (Index k = 0; k + 1 < S.rank; ++k) {
      const Int& a = S.D(k, k);
      const Int& b = S.D(k + 1, k + 1);
      if (divides(a, b)) continue;
      dirty = true;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int bg = b / g, ag = a / g;
      ops.csubmul(k, k + 1, Int(-1));            // D(k+1, k) = b
      ops.row_pair(k, k + 1, x, y, -bg, ag);     // D(k,k)=g, D(k+1,k)=0, D(k,k+1)=y*b
      Int q = S.D(k, k + 1) / g;                 // exact: g | y*b
      ops.csubmul(k + 1, k, q);
    }
  }
  for (Index k = 0; k < S.rank; ++k)
    if (sgn(S.D(k, k)) < 0) ops.rnegate(k);
  if (S.U * A * S.V != S.D) throw Error("smith_normal_form: verification U*A*V == D failed");
  S.invariant_factors.reserve(S.rank);
  for (Index k = 0; k < S.rank; ++k) S.invariant_factors.push_back(S.D(k, k));
  return S;
}

// Solve A x = t over the integers.  Returns some solution iff one exists
// (diagonalize, divide, map back); the solution is re-verified by
// substitution before returning.  No solution is a verdict, not an error.
inline std::optional<IntVector> solve_integer_system(const IntMatrix& A, const IntVector& t) {
  using namespace detail;
  if (A.rows() != t.size()) throw LengthMismatch("solve_integer_system: rhs size mismatch");
  IntMatrix M = A;
  IntMatrix V = IntMatrix::Identity(A.cols(), A.cols());
  IntVector c = t;
  SmithOps ops{M, nullptr, &V, &c};
  const Index rank = smith_diagonalize(ops);
  IntVector y = IntVector::Zero(A.cols());
  for (Index k = 0; k < rank; ++k) {
    if (sgn(c(k)) == 0) continue;
    if (!divides(M(k, k), c(k))) return std::nullopt;
    mpz_divexact(y(k).get_mpz_t(), c(k).get_mpz_t(), M(k, k).get_mpz_t());
  }
  for (Index i = rank; i < c.size(); ++i)
    if (sgn(c(i)) != 0) return std::nullopt;
  IntVector x = V * y;
  if (A * x != t) throw Error("solve_integer_system: substitution check failed");
  return x;
}

// Invariant factors (excluding 1s) of the quotient Z^rows / colLattice(A),
// plus the free rank left over.  Convenience wrapper used by cohomology.
struct QuotientShape {
  std::vector<Int> torsion;  // invariant factors > 1
  Index free_rank = 0;
  Int torsion_order = 1;
};

inline QuotientShape cokernel_shape(const IntMatrix& A) {
  Smith S = smith_normal_form(A);
  QuotientShape q;
  q.free_rank = A.rows() - S.rank;
  for (const Int& d : S.invariant_factors)
    if (d != 1) {
      q.torsion.push_back(d);
      q.torsion_order *= d;
    }
  return q;
}

}  // namespace acp
