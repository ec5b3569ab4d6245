#pragma once

// Smith normal form and the finite abelian groups it presents.

#include <vector>

#include "tav/matrix.hpp"

namespace tav {

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  Index source_rows = 0;
  Index source_cols = 0;

  std::vector<Int> diagonal() const { return diagonal_of(D); }
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Invariant-factor presentation: an ordered chain d1 | d2 | ... with every
// entry >= 2; the trivial group is the empty chain.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Strips factors equal to 1; validates positivity and the divisibility chain.
  explicit FiniteAbelianGroup(std::vector<Int> chain);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  Int order() const;
  Int exponent() const;

  // True iff the group is a direct sum of squares: the chain has even
  // length and consecutive entries pair up equal.
  bool spectrally_paired() const;
  // The (a_1 | a_2 | ...) with chain = (a_1, a_1, a_2, a_2, ...); requires
  // spectrally_paired().
  std::vector<Int> paired_targets() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Int> factors_;
};

// Z^r / A Z^r for square nonsingular A; throws singular_matrix otherwise.
FiniteAbelianGroup cokernel_of(const IntMatrix& a);

// Direct sum of cyclic groups Z/m_i (m_i >= 1, factors of 1 allowed).
FiniteAbelianGroup group_from_orders(const std::vector<Int>& orders);

std::string to_string(const FiniteAbelianGroup& g);

}  // namespace tav
