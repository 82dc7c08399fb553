#pragma once

// Scalar setup and shared error types.  All linear algebra in this library is
// exact: dense Eigen matrices over GMP integers (and GMP rationals where a
// triangular solve needs them).

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace acp {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadInput : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct InternalRankMismatch : Error { using Error::Error; };
struct TelescopeFailure : Error { using Error::Error; };
struct NotInKernel : Error { using Error::Error; };
struct GroupLawViolation : Error { using Error::Error; };
struct NotACocycle : Error { using Error::Error; };
struct NotAWitness : Error { using Error::Error; };
struct DecompositionFailure : Error { using Error::Error; };
struct InvalidRegime : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct Inconsistent : Error { using Error::Error; };

// Raised when rule evaluation derives both a torsion-free and a nontrivial
// torsion verdict for the same input; carries the offending rule ids.
struct ContradictionDetected : Error {
  std::string detail;
  explicit ContradictionDetected(const std::string& msg, std::string detail_ = {})
      : Error(msg), detail(std::move(detail_)) {}
};

// Fused in-place helpers; GMP's addmul/submul avoid temporaries in the hot
// elimination loops.
inline void addmul(Int& a, const Int& q, const Int& b) {
  mpz_addmul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}
inline void submul(Int& a, const Int& q, const Int& b) {
  mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}
// Floor quotient: remainder a - q*b lies in [0, |b|).
inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
// Truncated quotient, used where a symmetric remainder is fine.
inline Int tdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline long to_long_checked(const Int& v, const char* what = "integer") {
  if (!v.fits_slong_p()) throw Error(std::string(what) + " does not fit in a machine long");
  return v.get_si();
}

template <typename Derived>
inline bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m.derived()(i, j) != 0) return false;
  return true;
}

}  // namespace acp
