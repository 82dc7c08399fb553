#pragma once

// Brute-force cross-checks used by the verify suite.  Everything here is
// deliberately written against the textbook definitions with its own
// elimination code — none of it shares linear algebra with smith.hpp, so an
// agreement failure localizes a defect rather than reproducing it.

#include <acp/cohomology.hpp>
#include <acp/degeneracy.hpp>

#include <map>
#include <optional>
#include <vector>

namespace acp::oracle {

// fraction-free determinant (Bareiss)
inline Int det_bareiss(IntMatrix A) {
  const Index n = A.rows();
  if (A.cols() != n) throw BadInput("determinant of a nonsquare matrix");
  if (n == 0) return 1;
  Int prev = 1;
  long sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      A.row(k).swap(A.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        A(i, j) = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        A(i, j) /= prev;  // exact by Sylvester's identity
      }
    prev = A(k, k);
  }
  return sign > 0 ? A(n - 1, n - 1) : Int(-A(n - 1, n - 1));
}

// textbook Smith diagonalization, recursive gcd-chasing; tracks only the
// column transform V (A V has the diagonalized column structure needed for
// kernels: A * V.col(j) = U^{-1} * (diagonal column j))
struct NaiveSmith {
  std::vector<Int> diag;  // length min(m, n), divisibility chain
  IntMatrix V;            // unimodular, cols(A) x cols(A)
};

inline NaiveSmith smith_naive(IntMatrix A) {
  const Index m = A.rows(), n = A.cols();
  NaiveSmith out;
  out.V = IntMatrix::Identity(n, n);
  const Index steps = std::min(m, n);
  for (Index k = 0; k < steps; ++k) {
    for (;;) {
      // smallest nonzero entry of the trailing block to (k, k)
      Index bi = -1, bj = -1;
      for (Index i = k; i < m; ++i)
        for (Index j = k; j < n; ++j)
          if (A(i, j) != 0 && (bi < 0 || abs(A(i, j)) < abs(A(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;  // trailing block is zero
      if (bi != k) A.row(k).swap(A.row(bi));
      if (bj != k) {
        A.col(k).swap(A.col(bj));
        out.V.col(k).swap(out.V.col(bj));
      }
      bool clean = true;
      for (Index i = k + 1; i < m; ++i)
        if (A(i, k) != 0) {
          Int q = tdiv_q(A(i, k), A(k, k));
          A.row(i) -= q * A.row(k);
          if (A(i, k) != 0) clean = false;
        }
      for (Index j = k + 1; j < n; ++j)
        if (A(k, j) != 0) {
          Int q = tdiv_q(A(k, j), A(k, k));
          A.col(j) -= q * A.col(k);
          out.V.col(j) -= q * out.V.col(k);
          if (A(k, j) != 0) clean = false;
        }
      if (!clean) continue;
      // divisibility: fold any non-multiple into column k and restart
      bool fixed = true;
      for (Index i = k + 1; i < m && fixed; ++i)
        for (Index j = k + 1; j < n && fixed; ++j)
          if (!divides(A(k, k), A(i, j))) {
            A.col(k) += A.col(j);
            out.V.col(k) += out.V.col(j);
            fixed = false;
          }
      if (fixed) break;
    }
    if (A(k, k) < 0) {
      A.col(k) = -A.col(k);
      out.V.col(k) = -out.V.col(k);
    }
    out.diag.push_back(A(k, k));
  }
  return out;
}

// saturated integer kernel basis: V-columns over the zero part of the diagonal
inline IntMatrix kernel_naive(const IntMatrix& A) {
  NaiveSmith S = smith_naive(A);
  std::vector<Index> zero_cols;
  for (Index j = 0; j < A.cols(); ++j)
    if (j >= static_cast<Index>(S.diag.size()) || S.diag[static_cast<size_t>(j)] == 0)
      zero_cols.push_back(j);
  IntMatrix K(A.cols(), static_cast<Index>(zero_cols.size()));
  for (size_t t = 0; t < zero_cols.size(); ++t) K.col(static_cast<Index>(t)) = S.V.col(zero_cols[t]);
  if (!is_zero(IntMatrix(A * K))) throw InternalRankMismatch("naive kernel is not a kernel");
  return K;
}

// exhaustive boxed search for A x = t, coordinates in [-box, box]; halves the
// variables and meets in the middle
inline std::optional<IntVector> boxed_solve(const IntMatrix& A, const IntVector& t, long box) {
  const Index n = A.cols();
  const Index h = n / 2;
  using Key = std::vector<long>;
  auto key_of = [&](const IntVector& v) {
    Key k(static_cast<size_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) k[static_cast<size_t>(i)] = to_long_checked(v(i));
    return k;
  };
  std::map<Key, IntVector> left;  // A_left x_left -> x_left, first wins
  IntVector xl = IntVector::Constant(h, Int(-box));
  for (;;) {
    IntVector s = h > 0 ? IntVector(A.leftCols(h) * xl) : IntVector(IntVector::Zero(A.rows()));
    left.emplace(key_of(s), xl);
    Index c = 0;
    while (c < h && xl(c) == box) xl(c++) = -box;
    if (c == h) break;
    xl(c) += 1;
  }
  IntVector xr = IntVector::Constant(n - h, Int(-box));
  for (;;) {
    IntVector s = t - A.rightCols(n - h) * xr;
    auto it = left.find(key_of(s));
    if (it != left.end()) {
      IntVector x(n);
      x.head(h) = it->second;
      x.tail(n - h) = xr;
      if (A * x != t) throw InternalRankMismatch("boxed solve produced a non-solution");
      return x;
    }
    Index c = 0;
    while (c < n - h && xr(c) == box) xr(c++) = -box;
    if (c == n - h) break;
    xr(c) += 1;
  }
  return std::nullopt;
}

// |H^n(H, M)| through an independent pipeline: naive-Smith kernel basis,
// Cramer-style rational expression of the coboundary image in it, and the
// order as the gcd of maximal minors (the last determinantal divisor)
inline Int hn_order_minors(const GroupSpec& G, const GLattice& M, int n,
                           const std::optional<Subgroup>& H = std::nullopt) {
  CochainContext ctx = H ? make_context(G, M, *H) : make_full_context(G, M);
  const IntMatrix D = coboundary_matrix(ctx, n);
  const IntMatrix E = coboundary_matrix(ctx, n - 1);
  const IntMatrix K = kernel_naive(D);
  const Index z = K.cols();
  if (z == 0) return 1;

  // express E's columns in the kernel basis by rational elimination
  IntMatrix X(z, E.cols());
  {
    Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic> W(K.rows(), z + E.cols());
    for (Index i = 0; i < K.rows(); ++i) {
      for (Index j = 0; j < z; ++j) W(i, j) = Rat(K(i, j));
      for (Index j = 0; j < E.cols(); ++j) W(i, z + j) = Rat(E(i, j));
    }
    Index row = 0;
    std::vector<Index> piv_of_col(static_cast<size_t>(z), -1);
    for (Index col = 0; col < z && row < W.rows(); ++col) {
      Index piv = -1;
      for (Index i = row; i < W.rows(); ++i)
        if (W(i, col) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) throw InternalRankMismatch("kernel basis is rank deficient");
      W.row(row).swap(W.row(piv));
      const Rat pv = W(row, col);
      W.row(row) /= pv;
      for (Index i = 0; i < W.rows(); ++i)
        if (i != row && W(i, col) != 0) {
          const Rat f = W(i, col);
          W.row(i) -= f * W.row(row);
        }
      piv_of_col[static_cast<size_t>(col)] = row;
      ++row;
    }
    for (Index j = 0; j < E.cols(); ++j)
      for (Index c = 0; c < z; ++c) {
        const Rat& v = W(piv_of_col[static_cast<size_t>(c)], z + j);
        if (v.get_den() != 1)
          throw InternalRankMismatch("coboundary image escapes the saturated kernel");
        X(c, j) = v.get_num();
      }
    if (K * X != E) throw InternalRankMismatch("kernel expression does not reproduce the image");
  }

  // gcd of all z x z minors of X; zero means the quotient is infinite
  std::vector<Index> pick(static_cast<size_t>(z));
  for (Index i = 0; i < z; ++i) pick[static_cast<size_t>(i)] = i;
  Int g = 0;
  if (X.cols() < z) return 0;
  for (;;) {
    IntMatrix S(z, z);
    for (Index j = 0; j < z; ++j) S.col(j) = X.col(pick[static_cast<size_t>(j)]);
    g = gcd(g, det_bareiss(std::move(S)));
    if (g == 1) break;
    // next combination
    Index i = z - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == X.cols() - z + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (Index j = i + 1; j < z; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  if (g == 0) throw InternalRankMismatch("cohomology oracle found an infinite quotient");
  return g;
}

// exhaustive boxed degeneracy: some noncyclic pair admits a witness with all
// coordinates in [-box, box]; meets in the middle over the two vectors
inline bool boxed_degenerate(const Presentation& P, long box) {
  const Index rank = P.rank();
  const IntMatrix I = IntMatrix::Identity(rank, rank);
  for (const auto& [m, n] : noncyclic_pairs(P.G)) {
    const IntVector u = commutator_u(P, m, n);
    const IntMatrix Am = P.act(m) - I;
    const IntMatrix An = P.act(n) - I;
    using Key = std::vector<long>;
    auto key_of = [&](const IntVector& v) {
      Key k(static_cast<size_t>(v.size()));
      for (Index i = 0; i < v.size(); ++i) k[static_cast<size_t>(i)] = to_long_checked(v(i));
      return k;
    };
    std::map<Key, char> seen;
    IntVector a = IntVector::Constant(rank, Int(-box));
    for (;;) {
      seen.emplace(key_of(IntVector(Am * a)), 1);
      Index c = 0;
      while (c < rank && a(c) == box) a(c++) = -box;
      if (c == rank) break;
      a(c) += 1;
    }
    IntVector b = IntVector::Constant(rank, Int(-box));
    for (;;) {
      if (seen.count(key_of(IntVector(u - An * b)))) return true;
      Index c = 0;
      while (c < rank && b(c) == box) b(c++) = -box;
      if (c == rank) break;
      b(c) += 1;
    }
  }
  return false;
}

}  // namespace acp::oracle
