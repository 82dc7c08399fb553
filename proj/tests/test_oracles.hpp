#pragma once

// Slow-but-obviously-correct reference computations used only by the tests.
// Everything here works from first principles (minor expansion, the periodic
// resolution for cyclic groups) so that agreement with the library is
// meaningful.

#include <acp/cohomology.hpp>
#include <acp/oracle.hpp>

namespace testor {

using namespace acp;

// determinant by cofactor expansion; fine for the sizes the tests use
inline Int det_cofactor(const IntMatrix& A) {
  const Index n = A.rows();
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  Int acc = 0;
  IntMatrix sub(n - 1, n - 1);
  for (Index k = 0; k < n; ++k) {
    if (A(0, k) == 0) continue;
    for (Index i = 1; i < n; ++i) {
      Index jj = 0;
      for (Index j = 0; j < n; ++j) {
        if (j == k) continue;
        sub(i - 1, jj++) = A(i, j);
      }
    }
    Int term = A(0, k) * det_cofactor(sub);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// d_k(A) = gcd of all k x k minors; the k-th invariant factor is d_k/d_{k-1}
inline std::vector<Int> determinantal_divisor_invariants(const IntMatrix& A) {
  const Index m = A.rows(), n = A.cols();
  const Index kmax = std::min(m, n);
  std::vector<Int> d(static_cast<size_t>(kmax) + 1, 0);
  d[0] = 1;
  for (Index k = 1; k <= kmax; ++k) {
    Int g = 0;
    std::vector<Index> ri(k), ci(k);
    for (Index t = 0; t < k; ++t) ri[t] = t, ci[t] = t;
    auto next = [](std::vector<Index>& idx, Index limit) {
      Index k2 = static_cast<Index>(idx.size());
      for (Index t = k2; t-- > 0;) {
        if (idx[t] + (k2 - t) < limit) {
          ++idx[t];
          for (Index s = t + 1; s < k2; ++s) idx[s] = idx[s - 1] + 1;
          return true;
        }
      }
      return false;
    };
    IntMatrix sub(k, k);
    do {
      std::vector<Index> cj(k);
      for (Index t = 0; t < k; ++t) cj[t] = t;
      do {
        for (Index a = 0; a < k; ++a)
          for (Index b = 0; b < k; ++b) sub(a, b) = A(ri[a], cj[b]);
        g = gcd(g, det_cofactor(sub));
      } while (next(cj, n));
    } while (next(ri, m));
    d[static_cast<size_t>(k)] = g;
    if (g == 0) break;
  }
  std::vector<Int> inv;
  for (Index k = 1; k <= kmax; ++k) {
    const Int& dk = d[static_cast<size_t>(k)];
    if (dk == 0) break;
    inv.push_back(dk / d[static_cast<size_t>(k) - 1]);
  }
  return inv;
}

// |H^1(<h>, M)| through the periodic resolution: ker(N_h) / im(A_h - 1),
// computed with the naive Smith pieces rather than the bar complex.
inline Int h1_cyclic_order(const GroupSpec& G, const GLattice& M, const GroupElement& h) {
  const IntMatrix A = action_of(G, M, h);
  const long d = element_order(G, h);
  IntMatrix N = IntMatrix::Zero(M.rank, M.rank);
  IntMatrix pw = IntMatrix::Identity(M.rank, M.rank);
  for (long t = 0; t < d; ++t) {
    N += pw;
    pw = (A * pw).eval();
  }
  IntMatrix K = oracle::kernel_naive(N);  // saturated: V-columns of the Smith form
  if (K.cols() == 0) return 1;
  // express the columns of (A - I) inside the kernel: exact because
  // (A - I) M lies in ker N and K is saturated
  IntMatrix B = A - IntMatrix::Identity(M.rank, M.rank);
  RatMatrix W(M.rank, K.cols() + B.cols());
  for (Index j = 0; j < K.cols(); ++j)
    for (Index i = 0; i < M.rank; ++i) W(i, j) = Rat(K(i, j));
  for (Index j = 0; j < B.cols(); ++j)
    for (Index i = 0; i < M.rank; ++i) W(i, K.cols() + j) = Rat(B(i, j));
  Index row = 0;
  for (Index col = 0; col < K.cols() && row < M.rank; ++col) {
    Index piv = -1;
    for (Index i = row; i < M.rank; ++i)
      if (W(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw InternalRankMismatch("kernel basis lost rank");
    W.row(piv).swap(W.row(row));
    const Rat pv = W(row, col);
    W.row(row) /= pv;
    for (Index i = 0; i < M.rank; ++i) {
      if (i == row) continue;
      const Rat f = W(i, col);
      if (f != 0) W.row(i) -= f * W.row(row);
    }
    ++row;
  }
  IntMatrix X(K.cols(), B.cols());
  for (Index j = 0; j < B.cols(); ++j)
    for (Index i = 0; i < K.cols(); ++i) {
      const Rat& v = W(i, K.cols() + j);
      if (v.get_den() != 1) throw InternalRankMismatch("image escapes the saturated kernel");
      X(i, j) = v.get_num();
    }
  oracle::NaiveSmith S = oracle::smith_naive(X);
  Int order = 1;
  for (Index k = 0; k < static_cast<Index>(S.diag.size()); ++k) {
    if (S.diag[static_cast<size_t>(k)] == 0)
      throw InternalRankMismatch("cyclic H^1 came out infinite");
    order *= S.diag[static_cast<size_t>(k)];
  }
  if (static_cast<Index>(S.diag.size()) < K.cols())
    throw InternalRankMismatch("cyclic H^1 came out infinite");
  return order;
}

// |Tate H^0(H, M)| = [M^H : N_H M] straight from the definitions, using the
// naive Smith kit only.
inline Int tate_h0_order_naive(const GroupSpec& G, const GLattice& M, const Subgroup& H) {
  // fixed vectors: kernel of the stacked (A_h - I)
  IntMatrix stack(M.rank * static_cast<Index>(H.elements.size()), M.rank);
  for (size_t k = 0; k < H.elements.size(); ++k)
    stack.block(static_cast<Index>(k) * M.rank, 0, M.rank, M.rank) =
        action_of(G, M, H.elements[k]) - IntMatrix::Identity(M.rank, M.rank);
  IntMatrix F = oracle::kernel_naive(stack);
  if (F.cols() == 0) return 1;
  IntMatrix N = IntMatrix::Zero(M.rank, M.rank);
  for (const GroupElement& h : H.elements) N += action_of(G, M, h);
  // N M subset M^H; express the norm columns in the fixed basis
  RatMatrix W(M.rank, F.cols() + M.rank);
  for (Index j = 0; j < F.cols(); ++j)
    for (Index i = 0; i < M.rank; ++i) W(i, j) = Rat(F(i, j));
  for (Index j = 0; j < M.rank; ++j)
    for (Index i = 0; i < M.rank; ++i) W(i, F.cols() + j) = Rat(N(i, j));
  Index row = 0;
  for (Index col = 0; col < F.cols() && row < M.rank; ++col) {
    Index piv = -1;
    for (Index i = row; i < M.rank; ++i)
      if (W(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw InternalRankMismatch("fixed basis lost rank");
    W.row(piv).swap(W.row(row));
    const Rat pv = W(row, col);
    W.row(row) /= pv;
    for (Index i = 0; i < M.rank; ++i) {
      if (i == row) continue;
      const Rat f = W(i, col);
      if (f != 0) W.row(i) -= f * W.row(row);
    }
    ++row;
  }
  IntMatrix X(F.cols(), M.rank);
  for (Index j = 0; j < M.rank; ++j)
    for (Index i = 0; i < F.cols(); ++i) {
      const Rat& v = W(i, F.cols() + j);
      if (v.get_den() != 1) throw InternalRankMismatch("norm image escapes the fixed basis");
      X(i, j) = v.get_num();
    }
  oracle::NaiveSmith S = oracle::smith_naive(X);
  Int order = 1;
  if (static_cast<Index>(S.diag.size()) < F.cols())
    throw InternalRankMismatch("Tate H^0 came out infinite");
  for (const Int& dk : S.diag) {
    if (dk == 0) throw InternalRankMismatch("Tate H^0 came out infinite");
    order *= dk;
  }
  return order;
}

}  // namespace testor
