#pragma once

// Truncated-polynomial bookkeeping in Z[t]/(t^{N+1}) with N+1 = p^n, t the
// reduced hyperplane class: the displayed generator identities x, y, the
// transfer check (multiplication by the subfield degree), t-adic degrees,
// and the CH^2-torsion decision table.  Everything here is exact integer
// arithmetic; the decision table encodes quoted results as rules and every
// verdict carries its rule citations.

#include <acp/core.hpp>

#include <optional>
#include <string>
#include <vector>

namespace acp {

struct FiltrationElement {
  long trunc = 0;            // ring is Z[t]/(t^trunc), trunc = p^n
  std::vector<Int> coeffs;   // c_0..c_k, k < trunc; missing = 0

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  std::vector<Int> dense() const {
    std::vector<Int> d(static_cast<size_t>(trunc), Int(0));
    for (size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i];
    return d;
  }
};

inline bool operator==(const FiltrationElement& a, const FiltrationElement& b) {
  if (a.trunc != b.trunc) return false;
  const size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (size_t i = 0; i < n; ++i) {
    const Int& x = i < a.coeffs.size() ? a.coeffs[i] : Int(0);
    const Int& y = i < b.coeffs.size() ? b.coeffs[i] : Int(0);
    if (x != y) return false;
  }
  return true;
}
inline bool operator!=(const FiltrationElement& a, const FiltrationElement& b) {
  return !(a == b);
}

inline FiltrationElement fe_zero(long trunc) { return FiltrationElement{trunc, {}}; }

inline FiltrationElement fe_add(const FiltrationElement& a, const FiltrationElement& b) {
  if (a.trunc != b.trunc) throw LengthMismatch("filtration elements live in different rings");
  FiltrationElement r = fe_zero(a.trunc);
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.normalize();
  return r;
}

inline FiltrationElement fe_scale(const Int& s, const FiltrationElement& a) {
  FiltrationElement r = a;
  for (Int& c : r.coeffs) c *= s;
  r.normalize();
  return r;
}

inline FiltrationElement fe_sub(const FiltrationElement& a, const FiltrationElement& b) {
  return fe_add(a, fe_scale(Int(-1), b));
}

inline FiltrationElement fe_mul(const FiltrationElement& a, const FiltrationElement& b) {
  if (a.trunc != b.trunc) throw LengthMismatch("filtration elements live in different rings");
  FiltrationElement r = fe_zero(a.trunc);
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  const size_t n = std::min<size_t>(a.coeffs.size() + b.coeffs.size() - 1,
                                    static_cast<size_t>(a.trunc));
  r.coeffs.assign(n, Int(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs.size() && i + j < n; ++j)
      addmul(r.coeffs[i + j], a.coeffs[i], b.coeffs[j]);
  }
  r.normalize();
  return r;
}

// (1+t)^p - 1 = sum_{k=1}^{p} C(p,k) t^k, truncated
inline FiltrationElement fe_frobenius_term(long p, long trunc) {
  FiltrationElement r = fe_zero(trunc);
  const long top = std::min(p, trunc - 1);
  r.coeffs.assign(static_cast<size_t>(top) + 1, Int(0));
  Int binom = 1;
  for (long k = 1; k <= p; ++k) {
    binom = binom * Int(p - k + 1) / Int(k);
    if (k <= top) r.coeffs[static_cast<size_t>(k)] = binom;
  }
  r.normalize();
  return r;
}

namespace detail {

inline long pow_long(long b, long e) {
  Int v = 1;
  for (long i = 0; i < e; ++i) v *= b;
  return to_long_checked(v);
}

inline void check_regime(long p, long n) {
  if (p < 2) throw InvalidRegime("p must be at least 2");
  if (p == 2 && n < 3) throw InvalidRegime("p = 2 requires n >= 3");
  if (p != 2 && n < 2) throw InvalidRegime("odd p requires n >= 2");
}

inline Int transfer_scalar(long p, long n) {
  check_regime(p, n);
  Int s = 1;
  for (long i = 0; i < (p == 2 ? n - 3 : n - 2); ++i) s *= p;
  return s;
}

}  // namespace detail

// x = p^n t^2 - p^{n-2} ((1+t)^p - 1)^2  (odd p)
// x = 2^{n-1} t^2 - 2^{n-3} ((1+t)^2 - 1)^2  (p = 2)
inline FiltrationElement generator_x(long p, long n) {
  detail::check_regime(p, n);
  const long trunc = detail::pow_long(p, n);
  FiltrationElement t2 = fe_zero(trunc);
  t2.coeffs = {Int(0), Int(0), Int(1)};
  const FiltrationElement q = fe_frobenius_term(p, trunc);
  Int lead = 1;
  for (long i = 0; i < (p == 2 ? n - 1 : n); ++i) lead *= p;
  return fe_sub(fe_scale(lead, t2), fe_scale(detail::transfer_scalar(p, n), fe_mul(q, q)));
}

// y = p^2 t^2 - ((1+t)^p - 1)^2, in the same ring as x
inline FiltrationElement generator_y(long p, long n) {
  detail::check_regime(p, n);
  const long trunc = detail::pow_long(p, n);
  FiltrationElement t2 = fe_zero(trunc);
  t2.coeffs = {Int(0), Int(0), Int(1)};
  const FiltrationElement q = fe_frobenius_term(p, trunc);
  return fe_sub(fe_scale(Int(p) * Int(p), t2), fe_mul(q, q));
}

inline FiltrationElement generator_y(long p) { return generator_y(p, p == 2 ? 3 : 2); }

// the transfer acts on y as multiplication by the subfield degree
// (p^{n-2} for odd p, 2^{n-3} for p = 2) and must land exactly on x
inline bool transfer_identity_check(long p, long n) {
  return fe_scale(detail::transfer_scalar(p, n), generator_y(p, n)) == generator_x(p, n);
}

inline std::optional<long> tadic_degree(const FiltrationElement& e) {
  for (size_t i = 0; i < e.coeffs.size(); ++i)
    if (e.coeffs[i] != 0) return static_cast<long>(i);
  return std::nullopt;
}

struct RegimeDescriptor {
  long p = 0;
  long n = 0;
  bool generic = false;
  bool degenerate = false;
  bool strongly_degenerate = false;
  int r = 0;
};

struct Reason {
  std::string statement;
  std::string citation;
};

struct TorsionReport {
  std::string verdict;  // torsion_free | cyclic_of_order_p | unknown
  std::vector<Reason> reasons;
};

inline TorsionReport ch2_torsion_verdict(const RegimeDescriptor& d) {
  if (d.p < 2 || d.n < 0) throw BadInput("regime needs p >= 2 and n >= 0");
  TorsionReport rep;
  bool torsion_free = false, cyclic = false;

  Int ind = 1;
  for (long i = 0; i < d.n; ++i) ind *= d.p;
  if (d.n <= 1 || divides(ind, Int(4))) {
    torsion_free = true;
    rep.reasons.push_back({"index " + ind.get_str() + " is p or divides 4, so the torsion"
                           " subgroup of CH^2 is trivial",
                           "rule:small-index"});
  }
  if (d.generic && ((d.p != 2 && d.n >= 2) || (d.p == 2 && d.n >= 3))) {
    cyclic = true;
    rep.reasons.push_back({"a generic division algebra of index p^n and exponent p in this"
                           " regime has torsion subgroup cyclic of order p",
                           "rule:generic-index"});
  }
  if (d.p != 2 && d.degenerate) {
    torsion_free = true;
    rep.reasons.push_back({"p is odd and the commutator matrix is degenerate, so CH^2 is"
                           " torsion free",
                           "rule:odd-degenerate"});
  }
  if (d.p == 2 && d.r >= 3 && d.strongly_degenerate) {
    torsion_free = true;
    rep.reasons.push_back({"p = 2 with r >= 3 and a strongly degenerate commutator matrix,"
                           " so CH^2 is torsion free",
                           "rule:two-adic-strong-degenerate"});
  }

  if (torsion_free && cyclic)
    throw ContradictionDetected(
        "rules forcing torsion_free and cyclic_of_order_p fired together: the input encodes a"
        " configuration that is provably impossible (a generic algebra of this index and"
        " exponent cannot carry a degenerate commutator matrix)");
  rep.verdict = torsion_free ? "torsion_free" : (cyclic ? "cyclic_of_order_p" : "unknown");
  return rep;
}

}  // namespace acp
