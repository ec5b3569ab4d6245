#pragma once

// Dense exact matrices: Eigen dynamic matrices over tav::Int / tav::Rat,
// plus the fraction-free kernels (determinant, inverse, Hermite form,
// exterior powers) every other header builds on. All routines are exact;
// nothing here touches floating point.

#include <Eigen/Core>

#include <string>
#include <vector>

#include "tav/errors.hpp"
#include "tav/numeric.hpp"

namespace Eigen {

template <>
struct NumTraits<tav::Int> {
  using Real = tav::Int;
  using NonInteger = tav::Rat;
  using Nested = tav::Int;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60,
  };
  static inline tav::Int epsilon() { return tav::Int(0); }
  static inline tav::Int dummy_precision() { return tav::Int(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tav::Rat> {
  using Real = tav::Rat;
  using NonInteger = tav::Rat;
  using Nested = tav::Rat;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };
  static inline tav::Rat epsilon() { return tav::Rat(0); }
  static inline tav::Rat dummy_precision() { return tav::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tav {

using Index = Eigen::Index;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

IntMatrix int_identity(Index n);
IntMatrix int_zero(Index rows, Index cols);
IntMatrix diagonal_matrix(const std::vector<Int>& entries);
std::vector<Int> diagonal_of(const IntMatrix& a);

bool equal(const IntMatrix& a, const IntMatrix& b);
bool equal(const RatMatrix& a, const RatMatrix& b);
bool is_zero(const IntMatrix& a);
bool is_zero(const RatMatrix& a);
bool is_identity(const IntMatrix& a);
bool is_diagonal(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
bool is_integral(const RatMatrix& a);
// Exact conversion; rejects non-integral entries.
IntMatrix to_integer(const RatMatrix& a);

// Exact determinant via Bareiss fraction-free elimination.
Int determinant(const IntMatrix& a);
Rat determinant(const RatMatrix& a);

bool is_unimodular(const IntMatrix& a);

// Exact inverse over the rationals; throws singular_matrix.
RatMatrix inverse(const RatMatrix& a);
// Inverse of a matrix with |det| = 1; result is integral.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Entry-wise reduction into [0, n).
IntMatrix reduce_mod(const IntMatrix& a, const Int& n);
bool congruent_mod(const IntMatrix& a, const IntMatrix& b, const Int& n);

// Canonical column-style Hermite basis of the lattice spanned by the
// columns of `a` (which must have full row rank): lower triangular,
// positive diagonal, entries left of each pivot reduced into [0, pivot).
// Unique per lattice, so suitable for lattice equality tests.
IntMatrix hermite_column_basis(const IntMatrix& a);

// k-th compound matrix: entry (I, J) is the k x k minor of `a` on row set
// I and column set J, index sets enumerated in lexicographic order.
IntMatrix exterior_power(const IntMatrix& a, Index k);

namespace detail {
// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<Index>> index_combinations(Index n, Index k);
}  // namespace detail

std::string to_string(const IntMatrix& a);
std::string to_string(const RatMatrix& a);

}  // namespace tav
