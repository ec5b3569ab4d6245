#pragma once

// Degree bookkeeping for isogenies induced on even Clifford lattices:
// the closed-form total degree d^(2^(r-2)) and a brute-force oracle that
// multiplies the kernel orders grade by grade on even exterior powers.

#include <utility>
#include <vector>

#include "tav/matrix.hpp"

namespace tav {

// sum_j C(r, 2j) = 2^(r-1), r >= 1.
Int even_clifford_rank(Index r);

// d^(2^(r-2)), r >= 2; a perfect square whenever r >= 3.
Int ks_degree(const Int& d, Index r);

struct KSDegreeReport {
  Index rank = 0;                               // r
  Int index_d;                                  // |det A|
  Int closed_form;                              // d^(2^(r-2))
  Int oracle_value;                             // product over even grades >= 2
  std::vector<std::pair<Index, Int>> per_grade; // (2j, |det of 2j-th compound|)
  bool agree = false;
  bool closed_form_square = false;
};

// Requires square nonsingular A with r >= 2. Grade 0 is excluded: the
// zeroth power is the identity and contributes no kernel.
KSDegreeReport exterior_kernel_oracle(const IntMatrix& a);

}  // namespace tav
