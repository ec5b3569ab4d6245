#pragma once

// Finite twist data mod n: alternating matrices with prescribed image,
// the pairing <-> cocycle dictionary in additive (exponent) notation, and
// exhaustive cocycle-condition checks on small explicit groups.

#include <vector>

#include "tav/smith.hpp"

namespace tav {

// Anti-symmetric (alternating) 2g x 2g matrix mod n, entries in [0, n),
// zero diagonal mod n. Models a twist class via the standard pairing
// <x, xi> = xi^T x mod n in fixed coordinates.
class AntisymTwist {
 public:
  AntisymTwist(Int modulus, Index genus, IntMatrix matrix);

  const Int& modulus() const { return n_; }
  Index genus() const { return genus_; }
  const IntMatrix& matrix() const { return a_; }

 private:
  Int n_;
  Index genus_ = 0;
  IntMatrix a_;
};

// Alternating k x k form mod n.
class AlternatingForm {
 public:
  AlternatingForm(Int modulus, IntMatrix matrix);

  const Int& modulus() const { return n_; }
  Index rank() const { return e_.rows(); }
  const IntMatrix& matrix() const { return e_; }

 private:
  Int n_;
  IntMatrix e_;
};

// Bilinear 2-cocycle in exponent form: a_{s,t} = s^T beta t mod n. Any
// bilinear form satisfies the cocycle condition, so only the entry range
// is constrained.
class BilinearCocycle {
 public:
  BilinearCocycle(Int modulus, IntMatrix matrix);

  const Int& modulus() const { return n_; }
  Index rank() const { return beta_.rows(); }
  const IntMatrix& matrix() const { return beta_; }

 private:
  Int n_;
  IntMatrix beta_;
};

// Block-diagonal alternating matrix diag((n/a_1) J_2, ..., (n/a_r) J_2, 0)
// whose image in (Z/n)^{2g} is the direct sum of the (Z/a_i)^2. Requires
// r <= g and every a_i | n.
AntisymTwist antisym_with_image(const std::vector<Int>& targets, const Int& n,
                                Index genus);

// Invariant factors of the subgroup A (Z/n)^k of (Z/n)^k.
FiniteAbelianGroup image_mod_n(const IntMatrix& a, const Int& n);

// The lattice A Z^k + n Z^k, as a canonical Hermite basis. Exposes exact
// subgroup identity (not just the isomorphism class) for image tests.
IntMatrix image_lattice_mod_n(const IntMatrix& a, const Int& n);

// E = beta - beta^T mod n.
AlternatingForm pairing_of_cocycle(const BilinearCocycle& c);

// Canonical section: beta takes the strictly-lower-triangular entries of E,
// so pairing_of_cocycle(cocycle_from_pairing(e)) == e and the cocycle is
// normalized.
BilinearCocycle cocycle_from_pairing(const AlternatingForm& e);

// Full table of exponents a_{s,t} on the group (Z/m)^k, elements indexed
// lexicographically with the first coordinate most significant. Group
// order is capped so that the triple check stays exhaustive.
class CocycleTable {
 public:
  CocycleTable(Int modulus, Int m, Index k, std::vector<Int> values);

  static CocycleTable bilinear(const Int& modulus, const Int& m, Index k,
                               const IntMatrix& beta);

  const Int& modulus() const { return n_; }
  const Int& cyclic_order() const { return m_; }
  Index rank() const { return k_; }
  long group_order() const { return order_; }

  const Int& value(long s, long t) const;
  Int& value(long s, long t);
  long add(long s, long t) const;
  std::vector<long> element(long index) const;

 private:
  Int n_;
  Int m_;
  Index k_ = 0;
  long order_ = 0;
  std::vector<Int> values_;
};

// Normalization (a_{0,s} = a_{s,0} = 0) plus the cocycle condition
// a_{s1,s2} + a_{s1+s2,s3} = a_{s2,s3} + a_{s1,s2+s3} over all triples,
// everything compared mod n.
bool verify_cocycle_table(const CocycleTable& table);

// True iff A + A^T = 0 mod n: the graph {(x, Ax)} is isotropic for the
// commutator pairing under this artifact's sign convention.
bool isotropy_check(const IntMatrix& a, const Int& n);
bool isotropy_check(const AntisymTwist& twist);

}  // namespace tav
